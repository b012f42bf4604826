//! One-parameter families of structures, parameter scans and wall crossing.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::dt::{amplitude_squared, solve_dt, solve_phym};
use crate::bundles::{slope, Root};
use crate::error::{Error, Result};
use crate::params::StructureParams;

/// Bisection stops once the bracket is shorter than this.
pub const WALL_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Dt,
    Phym,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dt" => Ok(Mode::Dt),
            "phym" => Ok(Mode::Phym),
            _ => Err(Error::InvalidPath(format!("unknown mode {s:?}, expected dt or phym"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PathSpec {
    /// `A = (1, 1, s)`, `ε = (1,1,1)`.
    Example4,
    /// `A = (s, 10s³, 1)`, `ε = (1,1,1)`.
    Example5,
    /// `A = (1, (2+√3)^{-1/2}, s)`, `ε = (s² − 1/(2+√3), 1, −1)`.
    Corollary4,
    Constant { params: StructureParams },
    /// Straight line from `start` (s = 0) to `end` (s = 1).
    Custom { start: StructureParams, end: StructureParams },
}

impl PathSpec {
    pub fn name(&self) -> &'static str {
        match self {
            PathSpec::Example4 => "example4",
            PathSpec::Example5 => "example5",
            PathSpec::Corollary4 => "corollary4",
            PathSpec::Constant { .. } => "constant",
            PathSpec::Custom { .. } => "custom",
        }
    }

    /// Only the named families parse; `constant` and `custom` carry data.
    pub fn named(name: &str) -> Result<Self> {
        match name {
            "example4" => Ok(PathSpec::Example4),
            "example5" => Ok(PathSpec::Example5),
            "corollary4" => Ok(PathSpec::Corollary4),
            _ => Err(Error::InvalidPath(format!(
                "unknown path {name:?}, expected example4, example5 or corollary4"
            ))),
        }
    }

    pub fn params_at(&self, s: f64) -> Result<StructureParams> {
        match self {
            PathSpec::Example4 => StructureParams::from_f64([1.0, 1.0, s], [1.0; 3]),
            PathSpec::Example5 => StructureParams::from_f64([s, 10.0 * s.powi(3), 1.0], [1.0; 3]),
            PathSpec::Corollary4 => {
                let c = 2.0 + 3f64.sqrt();
                StructureParams::from_f64([1.0, 1.0 / c.sqrt(), s], [s * s - 1.0 / c, 1.0, -1.0])
            }
            PathSpec::Constant { params } => Ok(params.clone()),
            PathSpec::Custom { start, end } => {
                let lerp = |x: &[f64; 3], y: &[f64; 3]| std::array::from_fn(|i| x[i] + s * (y[i] - x[i]));
                StructureParams::from_f64(lerp(start.a(), end.a()), lerp(start.eps(), end.eps()))
            }
        }
        .map_err(|e| Error::InvalidPath(format!("{} at s = {s}: {e}", self.name())))
    }
}

/// `n` evenly spaced samples of `[lo, hi]`, endpoints included.
pub fn grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite()) || lo > hi {
        return Err(Error::InvalidPath(format!("bad range [{lo}, {hi}]")));
    }
    match n {
        0 => Err(Error::InvalidPath("need at least one sample".into())),
        1 => Ok(vec![lo]),
        _ => Ok((0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRow {
    pub s: f64,
    pub root: Root,
    /// `None` when the path leaves the parameter domain at this sample.
    pub mu: Option<f64>,
    pub a_plus: Option<f64>,
    pub a_minus: Option<f64>,
    pub phi2: Option<f64>,
    /// `Some(true)` for the canonical solution only, `None` when nothing solves.
    pub reducible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invalid: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanTable {
    pub path: PathSpec,
    pub mode: Mode,
    pub rows: Vec<ScanRow>,
}

pub const CSV_HEADER: &str = "s,root,mu,a_plus,a_minus,phi2,reducible";

fn cell<T: std::fmt::Display>(x: &Option<T>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl ScanTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.s,
                r.root.name(),
                cell(&r.mu),
                cell(&r.a_plus),
                cell(&r.a_minus),
                cell(&r.phi2),
                cell(&r.reducible)
            );
        }
        out
    }

    pub fn rows_for(&self, root: Root) -> impl Iterator<Item = &ScanRow> {
        self.rows.iter().filter(move |r| r.root == root)
    }
}

fn scan_point(path: &PathSpec, s: f64, root: Root, mode: Mode) -> Result<ScanRow> {
    let params = match path.params_at(s) {
        Ok(p) => p,
        Err(e @ Error::InvalidPath(_)) => {
            return Ok(ScanRow {
                s,
                root,
                mu: None,
                a_plus: None,
                a_minus: None,
                phi2: None,
                reducible: None,
                invalid: Some(e.to_string()),
            })
        }
        Err(e) => return Err(e),
    };
    let mu = slope(root.weight(), &params, 1e-9)?;
    let (amps, phi2, reducible): (Vec<f64>, Option<f64>, Option<bool>) = match mode {
        Mode::Dt => {
            let sols = solve_dt(root, &params)?;
            let red = sols.first().map(|x| x.reducible);
            (sols.iter().map(|x| x.a).collect(), sols.first().map(|x| x.phi2), red)
        }
        Mode::Phym => {
            let sols = solve_phym(root, &params)?;
            let red = sols.first().map(|x| x.reducible);
            (sols.iter().map(|x| x.a).collect(), None, red)
        }
    };
    let irreducible = reducible == Some(false);
    let pick = |f: fn(&f64) -> bool| if irreducible { amps.iter().copied().find(f) } else { None };
    Ok(ScanRow {
        s,
        root,
        mu: Some(mu),
        a_plus: pick(|a| *a > 0.0),
        a_minus: pick(|a| *a < 0.0),
        phi2,
        reducible,
        invalid: None,
    })
}

/// Solves at every grid point for every requested root. Rows are ordered by
/// sample, then root, independently of scheduling. Samples where the path
/// leaves the parameter domain are flagged rather than aborting the scan.
pub fn scan(path: &PathSpec, lo: f64, hi: f64, n: usize, roots: &[Root], mode: Mode) -> Result<ScanTable> {
    let samples = grid(lo, hi, n)?;
    let jobs: Vec<(f64, Root)> = samples.iter().flat_map(|&s| roots.iter().map(move |&r| (s, r))).collect();
    let rows = jobs
        .par_iter()
        .map(|&(s, r)| scan_point(path, s, r, mode))
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanTable {
        path: path.clone(),
        mode,
        rows,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Below,
    Above,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Wall {
    pub root: Root,
    pub s: f64,
    /// Side of the wall on which irreducible solutions exist.
    pub solutions: Side,
}

/// Zeros of `ε_iμ(L_{r_i})` along the path, located to [`WALL_TOL`] by bisection.
pub fn wall_cross(path: &PathSpec, lo: f64, hi: f64, n: usize, root: Root) -> Result<Vec<Wall>> {
    // a² has the sign of −ε_iμ and is what the solver thresholds
    let g = |s: f64| -> Result<f64> { Ok(amplitude_squared(root, &path.params_at(s)?)) };
    let samples = grid(lo, hi, n.max(2))?;
    let values = samples.iter().map(|&s| g(s)).collect::<Result<Vec<_>>>()?;
    let mut walls = Vec::new();
    let mut last: Option<(f64, f64)> = None;
    for (&s, &v) in samples.iter().zip(&values) {
        if v == 0.0 {
            continue;
        }
        if let Some((s0, v0)) = last {
            if v0.signum() != v.signum() {
                let (mut a, mut b, mut fa) = (s0, s, v0);
                while b - a > WALL_TOL {
                    let m = 0.5 * (a + b);
                    let fm = g(m)?;
                    if fm == 0.0 {
                        a = m;
                        b = m;
                        break;
                    }
                    if fm.signum() == fa.signum() {
                        a = m;
                        fa = fm;
                    } else {
                        b = m;
                    }
                }
                walls.push(Wall {
                    root,
                    s: 0.5 * (a + b),
                    solutions: if v > 0.0 { Side::Above } else { Side::Below },
                });
            }
        }
        last = Some((s, v));
    }
    Ok(walls)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints() {
        let g = grid(0.5, 1.5, 11).unwrap();
        assert_eq!(g.len(), 11);
        assert_eq!(g[0], 0.5);
        assert_eq!(g[10], 1.5);
        assert!(grid(1.0, 0.0, 3).is_err());
        assert!(grid(0.0, 1.0, 0).is_err());
    }

    #[test]
    fn example4_closed_forms() {
        let t = scan(&PathSpec::Example4, 0.5, 1.5, 21, &Root::ALL, Mode::Dt).unwrap();
        for r in &t.rows {
            let x = r.s;
            let a2 = match r.root {
                Root::R3 => 1.0 - x * x,
                _ => 0.5 - 0.5 / (x * x),
            };
            match r.a_plus {
                Some(a) => assert!((a * a - a2).abs() < 1e-10),
                None => assert!(a2 <= 1e-10),
            }
        }
    }

    #[test]
    fn example4_wall_at_one() {
        for root in Root::ALL {
            let w = wall_cross(&PathSpec::Example4, 0.55, 1.45, 10, root).unwrap();
            assert_eq!(w.len(), 1);
            assert!((w[0].s - 1.0).abs() < 1e-8);
            let side = if root == Root::R3 { Side::Below } else { Side::Above };
            assert_eq!(w[0].solutions, side);
        }
    }

    #[test]
    fn corollary4_wall() {
        let w = wall_cross(&PathSpec::Corollary4, 0.9, 1.1, 21, Root::R1).unwrap();
        assert_eq!(w.len(), 1);
        assert!((w[0].s - 1.0).abs() < 1e-8);
        assert_eq!(w[0].solutions, Side::Below);
        let t = scan(&PathSpec::Corollary4, 0.9, 1.1, 21, &[Root::R1], Mode::Phym).unwrap();
        for r in &t.rows {
            assert_eq!(r.a_plus.is_some(), r.s < 1.0 - 1e-9, "s = {}", r.s);
        }
    }

    #[test]
    fn csv_is_stable() {
        let t1 = scan(&PathSpec::Example4, 0.5, 1.5, 11, &Root::ALL, Mode::Dt).unwrap().to_csv();
        let t2 = scan(&PathSpec::Example4, 0.5, 1.5, 11, &Root::ALL, Mode::Dt).unwrap().to_csv();
        assert_eq!(t1, t2);
        assert!(t1.starts_with(CSV_HEADER));
        assert_eq!(t1.lines().count(), 34);
    }

    #[test]
    fn invalid_samples_are_flagged() {
        let t = scan(&PathSpec::Example4, -0.5, 0.5, 3, &[Root::R3], Mode::Dt).unwrap();
        assert!(t.rows[0].invalid.is_some() && t.rows[1].invalid.is_some());
        assert!(t.rows[2].invalid.is_none());
        assert!(t.to_csv().lines().nth(1).unwrap().ends_with(",,,,"));
    }

    #[test]
    fn bad_path_point() {
        let e = PathSpec::Example4.params_at(-1.0).unwrap_err();
        assert!(matches!(e, Error::InvalidPath(_)));
        assert!(PathSpec::named("nope").is_err());
    }
}
