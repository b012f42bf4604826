use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use flagdt_core::bundles::{char_classes, slope, slope_closed_form, Root, Weight};
use flagdt_core::extalg::{Rational, DEFAULT_TOL};
use flagdt_core::flaggeom::{classify_with, nijenhuis};
use flagdt_core::solver::{
    existence, existence_summary, render_svg, scan, solve_dt, solve_phym, wall_cross, Mode, PathSpec, Side, Wall,
};
use flagdt_core::{Error, StructureParams};

mod input;
mod verify;

use input::ParamInput;

/// Version of every JSON document this binary emits; see `schemas/`.
const SCHEMA_VERSION: &str = "1.0";

#[derive(Parser, Debug)]
#[command(name = "flagdt", version, about = "Invariant gauge theory on the flag manifold SU(3)/T²")]
struct Cli {
    /// Tolerance for floating-point checks.
    #[arg(long, global = true, env = "FLAGDT_TOLERANCE")]
    tolerance: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Dt,
    Phym,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Dt => Mode::Dt,
            ModeArg::Phym => Mode::Phym,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Svg,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify an invariant almost Hermitian structure.
    Classify {
        /// A₁ A₂ A₃ ε₁ ε₂ ε₃ (decimals, integers or p/q).
        #[arg(long, num_args = 6, allow_negative_numbers = true, required = true)]
        params: Vec<String>,
    },
    /// Invariant pHYM connections or DT-instantons on the root bundles.
    Solve {
        #[arg(long, value_enum, default_value = "dt")]
        mode: ModeArg,
        #[arg(long, num_args = 6, allow_negative_numbers = true, required = true)]
        params: Vec<String>,
    },
    /// Sample a one-parameter family and report solutions and walls.
    Scan {
        /// example4, example5, corollary4, constant (with --params) or custom (with --start/--end).
        #[arg(long)]
        path: String,
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["LO", "HI"], required = true)]
        range: Vec<f64>,
        #[arg(long, default_value_t = 101)]
        n: usize,
        #[arg(long, value_enum, default_value = "dt")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Restrict to these roots (r1, r2, r3).
        #[arg(long, value_delimiter = ',')]
        roots: Option<Vec<String>>,
        #[arg(long, num_args = 6, allow_negative_numbers = true)]
        params: Option<Vec<String>>,
        #[arg(long, num_args = 6, allow_negative_numbers = true)]
        start: Option<Vec<String>>,
        #[arg(long, num_args = 6, allow_negative_numbers = true)]
        end: Option<Vec<String>>,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the internal-consistency checks.
    Verify {
        /// Run a single group.
        #[arg(long)]
        only: Option<String>,
    },
    /// Characteristic classes of the bundles attached to a weight.
    Charclass {
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["K", "L"], required = true)]
        weight: Vec<i64>,
    },
}

enum Failure {
    /// Bad input; exit 2.
    Input(String),
    /// A check or self-verification failed; exit 1.
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    let tol = match cli.tolerance {
        None => DEFAULT_TOL,
        Some(t) if t.is_finite() && t > 0.0 => t,
        Some(t) => return Err(Failure::Input(format!("tolerance must be positive, got {t}"))),
    };
    match cli.command {
        Command::Classify { params } => cmd_classify(&ParamInput::parse(&params)?, tol),
        Command::Solve { mode, params } => cmd_solve(&ParamInput::parse(&params)?, mode.into()),
        Command::Scan {
            path,
            range,
            n,
            mode,
            format,
            roots,
            params,
            start,
            end,
            out,
        } => {
            let spec = path_spec(&path, params, start, end)?;
            let roots = match roots {
                None => Root::ALL.to_vec(),
                Some(names) => names
                    .iter()
                    .map(|s| Root::parse(s).ok_or_else(|| Failure::Input(format!("unknown root {s:?}, expected r1, r2 or r3"))))
                    .collect::<Result<_, _>>()?,
            };
            if n < 2 {
                return Err(Failure::Input("--n must be at least 2".into()));
            }
            cmd_scan(&spec, (range[0], range[1]), n, &roots, mode.into(), format, out)
        }
        Command::Verify { only } => cmd_verify(only.as_deref(), tol),
        Command::Charclass { weight } => cmd_charclass(Weight::new(weight[0], weight[1])),
    }
}

fn emit(mut body: Map<String, Value>, command: &str) {
    let mut doc = Map::new();
    doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
    doc.insert("command".into(), json!(command));
    doc.append(&mut body);
    write_stdout(&(serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values serialize") + "\n"));
}

/// Writes to stdout, ignoring a closed pipe.
fn write_stdout(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn rational_json(q: &Rational) -> Value {
    use num_traits::ToPrimitive;
    match q.is_integer().then(|| q.to_integer().to_i64()).flatten() {
        Some(n) => json!(n),
        None => json!(q.to_string()),
    }
}

fn params_json(p: &ParamInput) -> Value {
    match &p.exact {
        Some(q) => json!({
            "a": q.a().iter().map(rational_json).collect::<Vec<_>>(),
            "eps": q.eps().iter().map(rational_json).collect::<Vec<_>>(),
        }),
        None => json!({ "a": p.float.a(), "eps": p.float.eps() }),
    }
}

fn to_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("reports are JSON objects"),
    }
}

fn cmd_classify(p: &ParamInput, tol: f64) -> CmdResult {
    let (flags, nij) = match &p.exact {
        Some(q) => (classify_with(q, tol), nijenhuis(q, tol)?.iter().map(rational_json).collect::<Vec<_>>()),
        None => (classify_with(&p.float, tol), nijenhuis(&p.float, 1e-9)?.iter().map(|x| json!(x + 0.0)).collect()),
    };
    emit(
        to_map(json!({
            "backend": p.backend(),
            "params": params_json(p),
            "flags": flags,
            "nijenhuis": nij,
        })),
        "classify",
    );
    Ok(())
}

fn cmd_solve(p: &ParamInput, mode: Mode) -> CmdResult {
    let params = &p.float;
    let mut roots = Vec::new();
    for root in Root::ALL {
        let w = root.weight();
        let mut entry = to_map(json!({
            "root": root,
            "weight": [w.k, w.l],
            "slope": slope(w, params, 1e-9)?,
            "existence": existence(root, params),
        }));
        if let Some(q) = &p.exact {
            entry.insert("slope_exact".into(), rational_json(&slope_closed_form(w, q)));
        }
        let solutions = match mode {
            Mode::Dt => serde_json::to_value(solve_dt(root, params)?),
            Mode::Phym => serde_json::to_value(solve_phym(root, params)?),
        }
        .expect("solutions serialize");
        // drop the repeated params block from each solution
        let solutions: Vec<Value> = match solutions {
            Value::Array(xs) => xs
                .into_iter()
                .map(|s| {
                    let mut m = to_map(s);
                    m.remove("params");
                    m.remove("root");
                    Value::Object(m)
                })
                .collect(),
            _ => unreachable!(),
        };
        entry.insert("solutions".into(), Value::Array(solutions));
        roots.push(Value::Object(entry));
    }
    let summary = existence_summary(params)?;
    emit(
        to_map(json!({
            "mode": mode,
            "backend": p.backend(),
            "params": params_json(p),
            "roots": roots,
            "summary": {
                "dt_roots": summary.dt_roots,
                "phym_roots": summary.phym_roots,
                "all_reducible": summary.all_reducible,
            },
        })),
        "solve",
    );
    Ok(())
}

fn path_spec(
    name: &str,
    params: Option<Vec<String>>,
    start: Option<Vec<String>>,
    end: Option<Vec<String>>,
) -> Result<PathSpec, Failure> {
    let need = |v: Option<Vec<String>>, flag: &str| -> Result<StructureParams, Failure> {
        let v = v.ok_or_else(|| Failure::Input(format!("path {name} needs --{flag}")))?;
        Ok(ParamInput::parse(&v)?.float)
    };
    match name {
        "constant" => Ok(PathSpec::Constant { params: need(params, "params")? }),
        "custom" => Ok(PathSpec::Custom {
            start: need(start, "start")?,
            end: need(end, "end")?,
        }),
        _ => PathSpec::named(name).map_err(|_| {
            Failure::Input(format!(
                "unknown path {name:?}; available: example4, example5, corollary4, constant, custom"
            ))
        }),
    }
}

fn cmd_scan(
    spec: &PathSpec,
    (lo, hi): (f64, f64),
    n: usize,
    roots: &[Root],
    mode: Mode,
    format: Format,
    out: Option<PathBuf>,
) -> CmdResult {
    let table = scan(spec, lo, hi, n, roots, mode)?;
    let mut walls: Vec<Wall> = Vec::new();
    for &root in roots {
        match wall_cross(spec, lo, hi, n, root) {
            Ok(w) => walls.extend(w),
            Err(Error::InvalidPath(msg)) => eprintln!("warning: wall search for {root} skipped: {msg}"),
            Err(e) => return Err(e.into()),
        }
    }
    let text = match format {
        Format::Csv => table.to_csv(),
        Format::Svg => render_svg(&table),
        Format::Json => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "scan",
                "path": spec,
                "mode": mode,
                "range": [lo, hi],
                "n": n,
                "rows": table.rows,
                "walls": walls,
            });
            serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n"
        }
    };
    if !matches!(format, Format::Json) {
        for w in &walls {
            let side = match w.solutions {
                Side::Below => "below",
                Side::Above => "above",
            };
            eprintln!("wall {} s={:.10} solutions={side}", w.root, w.s);
        }
    }
    match out {
        Some(path) => std::fs::write(&path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => write_stdout(&text),
    }
    Ok(())
}

fn cmd_verify(only: Option<&str>, tol: f64) -> CmdResult {
    if let Some(g) = only {
        if !verify::GROUPS.contains(&g) {
            return Err(Failure::Input(format!("unknown check group {g:?}; available: {}", verify::GROUPS.join(", "))));
        }
    }
    let results = verify::run(only, tol);
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let route = match r.route {
            verify::Route::Exact => "exact",
            verify::Route::Float => "float",
        };
        if r.detail.is_empty() {
            println!("{status} {}/{} [{route}]", r.group, r.name);
        } else {
            println!("{status} {}/{} [{route}]: {}", r.group, r.name, r.detail);
        }
    }
    match results.iter().find(|r| !r.passed) {
        Some(r) => Err(Failure::Verification(format!("check {}/{} failed", r.group, r.name))),
        None => Ok(()),
    }
}

fn cmd_charclass(w: Weight) -> CmdResult {
    let mut body = to_map(serde_json::to_value(char_classes(w)).expect("report serializes"));
    body.insert("root".into(), serde_json::to_value(w.root()).expect("root serializes"));
    emit(body, "charclass");
    Ok(())
}
