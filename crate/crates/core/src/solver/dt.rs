//! Closed-form invariant pHYM connections and DT-instantons.

use serde::Serialize;

use crate::bundles::{slope, Root, Weight};
use crate::error::{Error, Result};
use crate::extalg::{approx_eq, DEFAULT_TOL};
use crate::flaggeom::{is_integrable, nijenhuis};
use crate::gauge::{dt_residual, phym_residual, pulled_back_dt_residual, HiggsPair, InvariantConnection, ResidualReport};
use crate::params::{StructureParams, PARAM_TOL};

/// Residual threshold every returned solution must meet.
pub const SOLUTION_TOL: f64 = 1e-10;

fn cyclic(i: usize) -> (usize, usize) {
    ((i + 1) % 3, (i + 2) % 3)
}

/// `a² = 1 − A_i²ε_i/(2A_j²ε_j) − A_i²ε_i/(2A_k²ε_k) = −(3/4)ε_iA_i²μ(L_{r_i})`.
pub fn amplitude_squared(root: Root, params: &StructureParams) -> f64 {
    let i = root.slot();
    let (j, k) = cyclic(i);
    let (a, e) = (params.a(), params.eps());
    let q = |s: usize| e[s] * a[s] * a[s];
    1.0 - q(i) / (2.0 * q(j)) - q(i) / (2.0 * q(k))
}

/// `φ₂ = A_iε_i(ε_j + ε_k)/(2A_jA_kε_jε_k)`, which is `A_i/(A_jA_k)` for `ε = (1,1,1)`.
pub fn phi2_closed_form(root: Root, params: &StructureParams) -> f64 {
    let i = root.slot();
    let (j, k) = cyclic(i);
    let (a, e) = (params.a(), params.eps());
    a[i] * e[i] * (e[j] + e[k]) / (2.0 * a[j] * a[k] * e[j] * e[k])
}

/// Per-root sign condition `ε_iε_j − ε_jε_k + ε_iε_k = 1` for irreducible solutions.
pub fn eps_identity(root: Root, params: &StructureParams) -> bool {
    let i = root.slot();
    let (j, k) = cyclic(i);
    let e = params.eps();
    approx_eq(&(e[i] * e[j] - e[j] * e[k] + e[i] * e[k]), &1.0, PARAM_TOL)
}

/// `F^{0,2} = 0` for the irreducible connections on `P_{r_i}`: `ε_j = −ε_k = ±1`.
pub fn phym_sign_pattern(root: Root, params: &StructureParams) -> bool {
    let i = root.slot();
    let (j, k) = cyclic(i);
    let e = params.eps();
    approx_eq(&(e[j] + e[k]), &0.0, PARAM_TOL) && approx_eq(&(e[j] * e[k]), &-1.0, PARAM_TOL)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Existence {
    /// `ε_iμ < 0`: a gauge-equivalent pair of irreducible solutions.
    Irreducible,
    /// `ε_iμ = 0`: the canonical connection only.
    Reducible,
    None,
}

/// Sign of `ε_iμ(L_{r_i})` read off `a²`.
pub fn existence(root: Root, params: &StructureParams) -> Existence {
    let a2 = amplitude_squared(root, params);
    if a2.abs() <= DEFAULT_TOL {
        Existence::Reducible
    } else if a2 > 0.0 {
        Existence::Irreducible
    } else {
        Existence::None
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DTSolution {
    pub root: Root,
    pub params: StructureParams,
    pub a: f64,
    pub phi1: f64,
    pub phi2: f64,
    pub reducible: bool,
    pub slope: f64,
    pub residuals: ResidualReport,
}

impl DTSolution {
    pub fn connection(&self) -> InvariantConnection {
        InvariantConnection::on_root(self.root, self.a)
    }

    pub fn higgs(&self) -> HiggsPair {
        HiggsPair::new(self.phi1, self.phi2)
    }
}

fn verify(report: ResidualReport, what: &str) -> Result<ResidualReport> {
    if report.all_below(SOLUTION_TOL) {
        Ok(report)
    } else {
        Err(Error::Inconsistent {
            check: "solution-residual",
            detail: format!("{what}: residual {:e} exceeds {SOLUTION_TOL:e}", report.max_norm()),
        })
    }
}

fn dt_family(
    root: Root,
    params: &StructureParams,
    residual: impl Fn(&InvariantConnection, &HiggsPair) -> Result<ResidualReport>,
) -> Result<Vec<DTSolution>> {
    let mu = slope(root.weight(), params, 1e-9)?;
    let phi2 = phi2_closed_form(root, params);
    let amplitudes: Vec<(f64, bool)> = match existence(root, params) {
        Existence::None => return Ok(Vec::new()),
        Existence::Reducible => vec![(0.0, true)],
        Existence::Irreducible if eps_identity(root, params) => {
            let a = amplitude_squared(root, params).sqrt();
            vec![(a, false), (-a, false)]
        }
        Existence::Irreducible => return Ok(Vec::new()),
    };
    amplitudes
        .into_iter()
        .map(|(a, reducible)| {
            let conn = InvariantConnection::on_root(root, a);
            let higgs = HiggsPair::new(0.0, phi2);
            let residuals = verify(residual(&conn, &higgs)?, &format!("{root} a = {a}"))?;
            Ok(DTSolution {
                root,
                params: params.clone(),
                a,
                phi1: 0.0,
                phi2,
                reducible,
                slope: mu,
                residuals,
            })
        })
        .collect()
}

/// Invariant DT-instantons on `P_root` with `Φ₁ = 0`; requires `ε₁ε₂ε₃ = 1`
/// so that `Ω` is basic. Every returned solution is re-verified.
pub fn solve_dt(root: Root, params: &StructureParams) -> Result<Vec<DTSolution>> {
    if !approx_eq(&params.eps_product(), &1.0, PARAM_TOL) {
        return Err(Error::Precondition(format!(
            "DT-instantons need a basic Ω, i.e. ε₁ε₂ε₃ = 1 (got {})",
            params.eps_product()
        )));
    }
    dt_family(root, params, |c, h| dt_residual(c, h, params))
}

/// [`solve_dt`] for any real `ε`, verified against the equations pulled
/// back to SU(3).
pub fn solve_dt_on_su3(root: Root, params: &StructureParams) -> Result<Vec<DTSolution>> {
    dt_family(root, params, |c, h| pulled_back_dt_residual(c, h, params))
}

/// [`solve_dt`] keyed by weight; non-roots are rejected.
pub fn solve_dt_weight(w: Weight, params: &StructureParams) -> Result<Vec<DTSolution>> {
    solve_dt(Root::try_from(w)?, params)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhymSolution {
    pub root: Root,
    pub params: StructureParams,
    pub a: f64,
    pub reducible: bool,
    pub slope: f64,
    pub residuals: ResidualReport,
}

impl PhymSolution {
    pub fn connection(&self) -> InvariantConnection {
        InvariantConnection::on_root(self.root, self.a)
    }
}

/// Invariant pHYM connections on `P_root`.
pub fn solve_phym(root: Root, params: &StructureParams) -> Result<Vec<PhymSolution>> {
    let mu = slope(root.weight(), params, 1e-9)?;
    let amplitudes: Vec<(f64, bool)> = match existence(root, params) {
        Existence::None => Vec::new(),
        Existence::Reducible => vec![(0.0, true)],
        Existence::Irreducible if phym_sign_pattern(root, params) => {
            let a = amplitude_squared(root, params).sqrt();
            vec![(a, false), (-a, false)]
        }
        Existence::Irreducible => Vec::new(),
    };
    let out: Vec<PhymSolution> = amplitudes
        .into_iter()
        .map(|(a, reducible)| {
            let conn = InvariantConnection::on_root(root, a);
            let residuals = verify(phym_residual(&conn, params)?, &format!("{root} a = {a}"))?;
            Ok(PhymSolution {
                root,
                params: params.clone(),
                a,
                reducible,
                slope: mu,
                residuals,
            })
        })
        .collect::<Result<_>>()?;
    if out.iter().any(|s| !s.reducible) {
        let n = nijenhuis(params, 1e-9)?;
        if !is_integrable(params, PARAM_TOL) {
            return Err(Error::Inconsistent {
                check: "phym-integrable",
                detail: format!("irreducible pHYM connection with Nijenhuis diagonal {n:?}"),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootSummary {
    pub root: Root,
    pub slope: f64,
    pub eps_slope_sign: i8,
    pub existence: Existence,
    pub dt_solutions: usize,
    pub phym_solutions: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExistenceSummary {
    pub params: StructureParams,
    pub roots: Vec<RootSummary>,
    /// Roots carrying at least one DT-instanton.
    pub dt_roots: usize,
    /// Roots carrying at least one pHYM connection.
    pub phym_roots: usize,
    pub all_reducible: bool,
}

/// Per-root existence, with the corollary dichotomies checked for
/// `ε = (1,1,1)`: some root always carries a solution, and all three are
/// reducible exactly when `A₁ = A₂ = A₃`. For `ε = (1,1,−1)` one of
/// `r₁, r₂` always carries a pHYM connection.
pub fn existence_summary(params: &StructureParams) -> Result<ExistenceSummary> {
    let basic = approx_eq(&params.eps_product(), &1.0, PARAM_TOL);
    let mut roots = Vec::new();
    for root in Root::ALL {
        let mu = slope(root.weight(), params, 1e-9)?;
        let dt = if basic { solve_dt(root, params)? } else { solve_dt_on_su3(root, params)? };
        let ph = solve_phym(root, params)?;
        let e = existence(root, params);
        let sign = match e {
            Existence::Irreducible => -1,
            Existence::Reducible => 0,
            Existence::None => 1,
        };
        roots.push(RootSummary {
            root,
            slope: mu,
            eps_slope_sign: sign,
            existence: e,
            dt_solutions: dt.len(),
            phym_solutions: ph.len(),
        });
    }
    let dt_roots = roots.iter().filter(|r| r.dt_solutions > 0).count();
    let phym_roots = roots.iter().filter(|r| r.phym_solutions > 0).count();
    let all_reducible = roots.iter().all(|r| r.existence == Existence::Reducible);
    if params.is_nearly_kahler_type(PARAM_TOL) {
        if dt_roots == 0 {
            return Err(Error::Inconsistent {
                check: "existence-dichotomy",
                detail: "no root carries a DT-instanton at ε = (1,1,1)".into(),
            });
        }
        let a = params.a();
        let equal = approx_eq(&a[0], &a[1], PARAM_TOL) && approx_eq(&a[1], &a[2], PARAM_TOL);
        if all_reducible != equal {
            return Err(Error::Inconsistent {
                check: "existence-dichotomy",
                detail: format!("all_reducible = {all_reducible} but A₁ = A₂ = A₃ is {equal}"),
            });
        }
    }
    let e = params.eps();
    let hermitian_f2 = [(e[0], 1.0), (e[1], 1.0), (e[2], -1.0)].iter().all(|(x, y)| approx_eq(x, y, PARAM_TOL));
    if hermitian_f2 && roots[..2].iter().all(|r| r.phym_solutions == 0) {
        return Err(Error::Inconsistent {
            check: "existence-dichotomy",
            detail: "no pHYM connection on r1 or r2 at ε = (1,1,−1)".into(),
        });
    }
    Ok(ExistenceSummary {
        params: params.clone(),
        roots,
        dt_roots,
        phym_roots,
        all_reducible,
    })
}
