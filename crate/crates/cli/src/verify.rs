//! Internal-consistency suite behind `flagdt verify`.

use serde::Serialize;

use flagdt_core::bundles::{char_classes, slope, slope_closed_form, slope_top_form_ratio, verify_h4_relation, CohomologyClass4, Root, Weight};
use flagdt_core::extalg::{ratio, Blade, Form, Rational, StructureTable};
use flagdt_core::flaggeom::{build_structure, d_omega_decompose, gamma_calibration, nijenhuis, nijenhuis_closed_form, nijenhuis_from_projection};
use flagdt_core::gauge::{curvature, dt_residual, r1_curvature_closed_form, u_bracket_identity_defect, u_residual, HiggsPair, InvariantConnection};
use flagdt_core::solver::{phi2_closed_form, solve_dt};
use flagdt_core::StructureParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Exact,
    Float,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub group: &'static str,
    pub route: Route,
    pub passed: bool,
    pub detail: String,
}

pub const GROUPS: [&str; 7] = ["d2", "nijenhuis", "gamma", "slope", "curvature", "equivalence", "charclass"];

fn float_samples() -> Vec<StructureParams> {
    [
        ([1.0, 1.0, 1.0], [1.0, 1.0, 1.0]),
        ([1.0, 1.0, 0.6], [1.0, 1.0, 1.0]),
        ([1.3, 0.8, 2.1], [1.0, -1.0, 1.0]),
        ([0.7, 1.9, 1.1], [2.0, 0.5, -1.5]),
        ([1.0, 1.0, std::f64::consts::SQRT_2], [1.0, 1.0, -1.0]),
    ]
    .into_iter()
    .map(|(a, e)| StructureParams::from_f64(a, e).expect("sample parameters are valid"))
    .collect()
}

fn exact_samples() -> Vec<StructureParams<Rational>> {
    [
        ([(1, 1), (1, 1), (1, 1)], [(1, 1), (1, 1), (1, 1)]),
        ([(3, 2), (1, 1), (2, 3)], [(1, 1), (-1, 1), (1, 1)]),
        ([(1, 2), (5, 3), (7, 4)], [(2, 1), (1, 3), (-3, 2)]),
    ]
    .into_iter()
    .map(|(a, e)| {
        StructureParams::new(a.map(|(n, d)| ratio(n, d)), e.map(|(n, d)| ratio(n, d))).expect("sample parameters are valid")
    })
    .collect()
}

struct Suite {
    tol: f64,
    out: Vec<CheckResult>,
}

impl Suite {
    fn push(&mut self, group: &'static str, name: &'static str, route: Route, outcome: Result<(), String>) {
        let (passed, detail) = match outcome {
            Ok(()) => (true, String::new()),
            Err(e) => (false, e),
        };
        self.out.push(CheckResult {
            name,
            group,
            route,
            passed,
            detail,
        });
    }

    fn d2(&mut self) {
        self.push("d2", "structure-table-d-squared", Route::Exact, {
            let table = StructureTable::standard();
            let bad: Vec<u8> = (0u16..256)
                .map(|b| b as u8)
                .filter(|&b| !Form::monomial(Blade::from_bits(b), ratio(1, 1)).d(table).d(table).is_empty())
                .collect();
            if bad.is_empty() {
                Ok(())
            } else {
                Err(format!("d² ≠ 0 on {} blades", bad.len()))
            }
        });
    }

    fn nijenhuis(&mut self) {
        let tol = self.tol;
        self.push("nijenhuis", "nijenhuis-dual-route-exact", Route::Exact, {
            exact_samples().iter().try_for_each(|p| nijenhuis(p, 0.0).map(|_| ()).map_err(|e| e.to_string()))
        });
        self.push("nijenhuis", "nijenhuis-dual-route-float", Route::Float, {
            float_samples().iter().try_for_each(|p| {
                let closed = nijenhuis_closed_form(p);
                let proj = nijenhuis_from_projection(p, tol).map_err(|e| e.to_string())?;
                for i in 0..3 {
                    let err = (closed[i] - proj[i]).abs();
                    if err > tol * closed[i].abs().max(1.0) {
                        return Err(format!("slot {}: |Δ| = {err:e}", i + 1));
                    }
                }
                Ok(())
            })
        });
    }

    fn gamma(&mut self) {
        let tol = self.tol;
        self.push("gamma", "gamma-calibration", Route::Exact, match gamma_calibration() {
            Ok(c) if c == ratio(1, 1) => Ok(()),
            Ok(c) => Err(format!("calibration constant {c}")),
            Err(e) => Err(e.to_string()),
        });
        self.push("gamma", "d-omega-equals-re-gamma-exact", Route::Exact, {
            exact_samples()
                .iter()
                .try_for_each(|p| d_omega_decompose(&build_structure(p), 0.0).map(|_| ()).map_err(|e| e.to_string()))
        });
        self.push("gamma", "d-omega-equals-re-gamma-float", Route::Float, {
            float_samples()
                .iter()
                .try_for_each(|p| d_omega_decompose(&build_structure(p), tol).map(|_| ()).map_err(|e| e.to_string()))
        });
    }

    fn slope(&mut self) {
        let tol = self.tol;
        let weights = [Weight::new(1, 2), Weight::new(-2, -1), Weight::new(1, -1), Weight::new(3, 5)];
        self.push("slope", "slope-dual-route-exact", Route::Exact, {
            exact_samples().iter().try_for_each(|p| {
                weights.iter().try_for_each(|&w| match slope_closed_form(w, p) == slope_top_form_ratio(w, p) {
                    true => Ok(()),
                    false => Err(format!("weight {w}")),
                })
            })
        });
        self.push("slope", "slope-dual-route-float", Route::Float, {
            float_samples().iter().try_for_each(|p| {
                weights.iter().try_for_each(|&w| slope(w, p, tol).map(|_| ()).map_err(|e| e.to_string()))
            })
        });
    }

    fn curvature(&mut self) {
        let tol = self.tol;
        self.push("curvature", "r1-curvature-matches-closed-form", Route::Float, {
            float_samples().iter().try_for_each(|p| {
                [0.0, 0.6, -1.2].iter().try_for_each(|&a| {
                    let f = curvature(&InvariantConnection::on_root(Root::R1, a)).map_err(|e| e.to_string())?;
                    let d = (f - r1_curvature_closed_form(p, a)).sup_norm();
                    if d <= tol {
                        Ok(())
                    } else {
                        Err(format!("a = {a}: defect {d:e}"))
                    }
                })
            })
        });
    }

    fn equivalence(&mut self) {
        let tol = self.tol;
        let unit: Vec<StructureParams> = float_samples().into_iter().filter(|p| p.is_nearly_kahler_type(1e-12)).collect();
        self.push("equivalence", "bracket-identity", Route::Float, {
            unit.iter().try_for_each(|p| {
                let d = u_bracket_identity_defect(&HiggsPair::new(0.3, -1.1), p).map_err(|e| e.to_string())?;
                if d <= tol {
                    Ok(())
                } else {
                    Err(format!("defect {d:e}"))
                }
            })
        });
        self.push("equivalence", "higgs-and-u-formulations-agree", Route::Float, {
            unit.iter().try_for_each(|p| {
                for root in Root::ALL {
                    let sols = solve_dt(root, p).map_err(|e| e.to_string())?;
                    for s in &sols {
                        let r = u_residual(&s.connection(), &s.higgs(), p).map_err(|e| e.to_string())?;
                        if !r.all_below(tol.max(1e-300)) {
                            return Err(format!("{root}: solution fails the (A, u) equations by {:e}", r.max_norm()));
                        }
                    }
                    // a perturbed pair must fail in both
                    let a = sols.first().map_or(0.5, |s| s.a) + 0.1;
                    let conn = InvariantConnection::on_root(root, a);
                    let higgs = HiggsPair::new(0.0, phi2_closed_form(root, p));
                    let dt = dt_residual(&conn, &higgs, p).map_err(|e| e.to_string())?;
                    let raw = u_residual(&conn, &higgs, p).map_err(|e| e.to_string())?;
                    if dt.all_below(1e-6) != raw.all_below(1e-6) {
                        return Err(format!("{root}: formulations disagree off the solution set"));
                    }
                }
                Ok(())
            })
        });
    }

    fn charclass(&mut self) {
        self.push("charclass", "pontryagin-and-w2-table", Route::Exact, {
            let expected = [(Root::R1, (-3, 0), (1, 0)), (Root::R2, (0, -3), (0, 1)), (Root::R3, (3, 3), (1, 1))];
            let mut seen = Vec::new();
            expected.iter().try_for_each(|&(r, p1, w2)| {
                let rep = char_classes(r.weight());
                if rep.p1 != CohomologyClass4::from_ints(p1.0, p1.1) {
                    return Err(format!("p₁(V_{r}) = ({}, {})", rep.p1.p, rep.p1.q));
                }
                if rep.w2 != w2 {
                    return Err(format!("w₂(P_{r}) = {:?}", rep.w2));
                }
                if seen.contains(&rep.w2) {
                    return Err("w₂ does not separate the three bundles".into());
                }
                seen.push(rep.w2);
                Ok(())
            })
        });
        self.push("charclass", "h4-relation", Route::Exact, verify_h4_relation().map(|_| ()).map_err(|e| e.to_string()));
        self.push("charclass", "trivial-weight", Route::Exact, {
            let rep = char_classes(Weight::new(0, 0));
            if rep.p1 == CohomologyClass4::from_ints(0, 0) && rep.c2 == CohomologyClass4::from_ints(0, 0) && rep.w2 == (0, 0) {
                Ok(())
            } else {
                Err("weight (0,0) has nonzero classes".into())
            }
        });
    }
}

/// Runs every group, or only `only`; unknown group names are rejected by the caller.
pub fn run(only: Option<&str>, tol: f64) -> Vec<CheckResult> {
    let mut suite = Suite { tol, out: Vec::new() };
    let wants = |g: &str| only.is_none_or(|o| o == g);
    if wants("d2") {
        suite.d2();
    }
    if wants("nijenhuis") {
        suite.nijenhuis();
    }
    if wants("gamma") {
        suite.gamma();
    }
    if wants("slope") {
        suite.slope();
    }
    if wants("curvature") {
        suite.curvature();
    }
    if wants("equivalence") {
        suite.equivalence();
    }
    if wants("charclass") {
        suite.charclass();
    }
    suite.out
}
