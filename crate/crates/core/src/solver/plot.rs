//! Minimal SVG rendering of a scan: `a₊(s)` per root, with `μ(s)` dashed.

use std::fmt::Write as _;

use super::scan::ScanTable;
use crate::bundles::Root;

const W: f64 = 640.0;
const H: f64 = 400.0;
const PAD: f64 = 48.0;
const COLORS: [&str; 3] = ["#1f77b4", "#d62728", "#2ca02c"];

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        PAD + (x - self.x0) / (self.x1 - self.x0).max(f64::EPSILON) * (W - 2.0 * PAD)
    }
    fn py(&self, y: f64) -> f64 {
        H - PAD - (y - self.y0) / (self.y1 - self.y0).max(f64::EPSILON) * (H - 2.0 * PAD)
    }
}

fn polyline(out: &mut String, f: &Frame, pts: &[(f64, f64)], color: &str, dashed: bool) {
    // break the line wherever the series has a gap
    for run in pts.split(|p| p.1.is_nan()) {
        if run.is_empty() {
            continue;
        }
        let coords: Vec<String> = run.iter().map(|&(x, y)| format!("{:.2},{:.2}", f.px(x), f.py(y))).collect();
        let dash = if dashed { r#" stroke-dasharray="4 3""# } else { "" };
        let _ = writeln!(
            out,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5"{dash} points="{}"/>"#,
            coords.join(" ")
        );
    }
}

pub fn render_svg(table: &ScanTable) -> String {
    let xs: Vec<f64> = table.rows.iter().map(|r| r.s).collect();
    let ys: Vec<f64> = table
        .rows
        .iter()
        .flat_map(|r| [r.mu, r.a_plus, Some(0.0)])
        .flatten()
        .filter(|y| y.is_finite())
        .collect();
    let lo = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let f = Frame {
        x0: lo(&xs),
        x1: hi(&xs),
        y0: lo(&ys).min(0.0),
        y1: hi(&ys).max(1.0),
    };

    let mut out = String::new();
    let _ = writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#);
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r##"<line x1="{PAD}" y1="{0:.2}" x2="{1}" y2="{0:.2}" stroke="#888"/>"##,
        f.py(0.0),
        W - PAD
    );
    let _ = writeln!(
        out,
        r#"<text x="{PAD}" y="20" font-family="sans-serif" font-size="13">{} ({:?}): a+ solid, slope dashed</text>"#,
        table.path.name(),
        table.mode
    );
    for (axis, x, anchor) in [(f.x0, PAD, "start"), (f.x1, W - PAD, "end")] {
        let _ = writeln!(
            out,
            r#"<text x="{x}" y="{}" font-family="sans-serif" font-size="11" text-anchor="{anchor}">s = {axis}</text>"#,
            H - PAD + 16.0
        );
    }
    for (idx, root) in Root::ALL.into_iter().enumerate() {
        let rows: Vec<_> = table.rows_for(root).collect();
        if rows.is_empty() {
            continue;
        }
        let a: Vec<(f64, f64)> = rows.iter().map(|r| (r.s, r.a_plus.unwrap_or(f64::NAN))).collect();
        let mu: Vec<(f64, f64)> = rows.iter().map(|r| (r.s, r.mu.unwrap_or(f64::NAN))).collect();
        polyline(&mut out, &f, &a, COLORS[idx], false);
        polyline(&mut out, &f, &mu, COLORS[idx], true);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" fill="{}">{}</text>"#,
            W - PAD - 30.0,
            40.0 + 16.0 * idx as f64,
            COLORS[idx],
            root.name()
        );
    }
    out.push_str("</svg>\n");
    out
}
