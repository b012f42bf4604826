//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_DIVERGENCES` are expected to print FAIL; the
//! process exits nonzero if any other criterion fails or if a known
//! divergence unexpectedly passes.

use std::f64::consts::FRAC_PI_2;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use flagdt_core::bundles::{
    char_classes, phym_line_connection, slope_closed_form, slope_top_form_ratio, verify_h4_relation, CohomologyClass4, Root,
    Weight,
};
use flagdt_core::extalg::{complex_frame_blade, ComplexFrameForm, Form, StructureTable};
use flagdt_core::flaggeom::{
    build_structure, is_integrable, nijenhuis_closed_form, nijenhuis_from_projection, nijenhuis_sign_pattern_formula,
};
use flagdt_core::gauge::{
    curvature, dt_residual, gauge_rotate, r1_curvature_closed_form, u_residual, HiggsPair, InvariantConnection,
};
use flagdt_core::solver::{
    amplitude_squared, existence_summary, grid, scan, solve_dt, solve_dt_on_su3, solve_phym, wall_cross, weyl_act, Mode,
    PathSpec, Side, WeylElement,
};
use flagdt_core::StructureParams;

/// Criterion 7 asks for `φ₂ = 2A_i/(A_jA_k)`; the equations are solved by
/// `φ₂ = A_i/(A_jA_k)` and the doubled value leaves a nonzero residual.
const KNOWN_DIVERGENCES: &[u32] = &[7];

const GOLDEN_EXAMPLE4: &str = include_str!("golden/example4.csv");

struct Ctx {
    failures: Vec<String>,
    notes: Vec<String>,
    rng: ChaCha8Rng,
}

impl Ctx {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 8 {
            self.failures.push(msg());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn note(&mut self, msg: String) {
        self.notes.push(msg);
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    fn scales(&mut self) -> [f64; 3] {
        std::array::from_fn(|_| self.rng.gen_range(0.3..3.0))
    }

    /// Real ε with `|ε_i| ∈ [0.2, 3]` and random signs.
    fn real_eps(&mut self) -> [f64; 3] {
        std::array::from_fn(|_| {
            let m = self.rng.gen_range(0.2..3.0);
            if self.rng.gen_bool(0.5) {
                m
            } else {
                -m
            }
        })
    }

    fn unit(&mut self) -> StructureParams {
        let a = self.scales();
        StructureParams::from_f64(a, [1.0; 3]).unwrap()
    }
}

fn sign_patterns() -> Vec<[f64; 3]> {
    (0..8)
        .map(|m| std::array::from_fn(|i| if m >> i & 1 == 1 { -1.0 } else { 1.0 }))
        .collect()
}

fn cyclic(i: usize) -> (usize, usize) {
    ((i + 1) % 3, (i + 2) % 3)
}

fn c1_structure_table(cx: &mut Ctx) {
    let t = StructureTable::standard();
    cx.check(t.d_squared_failures().is_empty(), || format!("d² ≠ 0 on {:?}", t.d_squared_failures()));
    let fresh = StructureTable::derive_from_maurer_cartan().unwrap();
    cx.check(&fresh == t, || "re-derivation differs".into());
}

fn c2_weight_curvature(cx: &mut Ctx) {
    let i = Complex64::i();
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let w = Weight::new(cx.rng.gen_range(-6..=6), cx.rng.gen_range(-6..=6));
        let (a, e) = (cx.scales(), cx.real_eps());
        let p = StructureParams::from_f64(a, e).unwrap();
        let f = w.curvature::<Complex64>();
        let cf = ComplexFrameForm::from_coframe(&f, &p).unwrap();
        let (k, l) = (w.k as f64, w.l as f64);
        let q = |s: usize| e[s] * a[s] * a[s];
        let expected = [i * l / q(0), -i * k / q(1), i * (k - l) / q(2)];
        let mut rebuilt = Form::<Complex64>::zero();
        for (s, c) in expected.iter().enumerate() {
            rebuilt = rebuilt + Form::monomial(complex_frame_blade(&[s], &[s]), *c);
        }
        let err = (cf.0.clone() - rebuilt).sup_norm();
        worst = worst.max(err);
    }
    cx.check(worst < 1e-12, || format!("max coefficient error {worst:e}"));
    cx.note(format!("max coefficient error {worst:.1e}"));
}

fn c3_nijenhuis(cx: &mut Ctx) {
    let mut worst: f64 = 0.0;
    for e in sign_patterns() {
        for _ in 0..10 {
            let p = StructureParams::from_f64(cx.scales(), e).unwrap();
            let lit = nijenhuis_sign_pattern_formula(&p).unwrap();
            let proj = nijenhuis_from_projection(&p, 1e-9).unwrap();
            for s in 0..3 {
                worst = worst.max((lit[s] - proj[s]).abs() / lit[s].abs().max(1.0));
            }
            let sigma2 = e[0] * e[1] + e[0] * e[2] + e[1] * e[2];
            let zero = proj.iter().all(|x| x.abs() < 1e-12);
            cx.check(is_integrable(&p, 1e-8) == zero, || format!("integrable flag vs tensor at ε = {e:?}"));
            cx.check(zero == (sigma2 + 1.0 == 0.0), || format!("Eq 4.2 vs tensor at ε = {e:?}"));
        }
    }
    for _ in 0..5 {
        let e = cx.real_eps();
        for _ in 0..10 {
            let p = StructureParams::from_f64(cx.scales(), e).unwrap();
            let closed = nijenhuis_closed_form(&p);
            let proj = nijenhuis_from_projection(&p, 1e-9).unwrap();
            for s in 0..3 {
                worst = worst.max((closed[s] - proj[s]).abs() / closed[s].abs().max(1.0));
            }
            let zero = proj.iter().all(|x| x.abs() < 1e-12);
            cx.check(is_integrable(&p, 1e-8) == zero, || format!("integrable flag vs tensor at ε = {e:?}"));
        }
    }
    cx.check(worst < 1e-12, || format!("route mismatch {worst:e}"));
    cx.note(format!("max route mismatch {worst:.1e}"));
}

fn c4_d_omega(cx: &mut Ctx) {
    let t = StructureTable::standard();
    for _ in 0..50 {
        let p = StructureParams::from_f64(cx.scales(), cx.real_eps()).unwrap();
        let s = build_structure(&p);
        let d = s.omega_squared().d(t).sup_norm();
        cx.check(d < 1e-12, || format!("|dω²| = {d:e}"));
    }
    let s = build_structure(&StructureParams::from_f64([1.0; 3], [1.0; 3]).unwrap());
    let e1 = (s.d_omega() - s.omega1.scale(&3.0)).sup_norm();
    let e2 = (s.d_omega2() + s.omega_squared().scale(&2.0)).sup_norm();
    cx.check(e1 < 1e-12 && e2 < 1e-12, || format!("nearly Kähler identities off by {e1:e}, {e2:e}"));
    for _ in 0..20 {
        let a = cx.scales();
        let s = build_structure(&StructureParams::from_f64(a, [1.0; 3]).unwrap());
        let c = (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]) / (a[0] * a[1] * a[2]);
        let err = (s.d_omega() - s.omega1.scale(&c)).sup_norm();
        cx.check(err < 1e-12, || format!("dω − cΩ₁ = {err:e} at A = {a:?}"));
    }
}

fn c5_slope(cx: &mut Ctx) {
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let w = Weight::new(cx.rng.gen_range(-6..=6), cx.rng.gen_range(-6..=6));
        let p = StructureParams::from_f64(cx.scales(), cx.real_eps()).unwrap();
        let (a, b) = (slope_closed_form(w, &p), slope_top_form_ratio(w, &p));
        worst = worst.max((a - b).abs() / a.abs().max(1.0));
    }
    cx.check(worst < 1e-12, || format!("slope mismatch {worst:e}"));
    cx.note(format!("max slope mismatch {worst:.1e}"));
    // degree 0 on the spanning set (1,0), (0,1) ⇔ A₁²ε₁ = A₂²ε₂ = A₃²ε₃
    let spanning = [Weight::new(1, 0), Weight::new(0, 1)];
    let mut samples: Vec<StructureParams> = (0..30)
        .map(|_| StructureParams::from_f64(cx.scales(), cx.real_eps()).unwrap())
        .collect();
    for _ in 0..10 {
        let c = cx.uniform(0.5, 2.0) * if cx.rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let e = [cx.uniform(0.3, 2.0), cx.uniform(0.3, 2.0), cx.uniform(0.3, 2.0)].map(|x| x * c.signum());
        let a = e.map(|x| (c / x).sqrt());
        samples.push(StructureParams::from_f64(a, e).unwrap());
    }
    for p in &samples {
        let all = spanning.iter().all(|&w| phym_line_connection(w, p, 1e-10).unwrap().is_degree0_phym);
        let q: Vec<f64> = (0..3).map(|i| p.eps()[i] * p.a()[i] * p.a()[i]).collect();
        let equal = (q[0] - q[1]).abs() < 1e-9 * q[0].abs() && (q[1] - q[2]).abs() < 1e-9 * q[0].abs();
        cx.check(all == equal, || format!("degree-0 characterization fails at {p:?}"));
    }
}

fn c6_curvature(cx: &mut Ctx) {
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let p = StructureParams::from_f64(cx.scales(), cx.real_eps()).unwrap();
        let a = cx.uniform(-2.0, 2.0);
        let f = curvature(&InvariantConnection::on_root(Root::R1, a)).unwrap();
        worst = worst.max((f - r1_curvature_closed_form(&p, a)).sup_norm());
    }
    cx.check(worst < 1e-12, || format!("curvature mismatch {worst:e}"));
    cx.note(format!("max curvature mismatch {worst:.1e}"));
}

fn c7_theorem3(cx: &mut Ctx) {
    let mut literal_phi2_misses = 0;
    let mut worst_residual: f64 = 0.0;
    let mut doubled_residual = f64::INFINITY;
    for root in Root::ALL {
        let i = root.slot();
        let (j, k) = cyclic(i);
        let (mut strict, mut violating) = (0, 0);
        while strict < 100 || violating < 100 {
            let p = cx.unit();
            let a2 = amplitude_squared(root, &p);
            let sols = solve_dt(root, &p).unwrap();
            if a2 > 1e-6 && strict < 100 {
                strict += 1;
                let a = p.a();
                let mu = slope_closed_form(root.weight(), &p);
                let expected_a = (-3.0 * a[i] * a[i] * mu / 4.0).sqrt();
                let target_phi2 = 2.0 * a[i] / (a[j] * a[k]);
                cx.check(sols.len() == 2, || format!("{root}: {} solutions", sols.len()));
                for s in &sols {
                    cx.check((s.a.abs() - expected_a).abs() < 1e-10, || format!("{root}: a = {}", s.a));
                    cx.check(s.phi1 == 0.0, || format!("{root}: φ₁ = {}", s.phi1));
                    if (s.phi2 - target_phi2).abs() > 1e-10 {
                        literal_phi2_misses += 1;
                    }
                    let r = dt_residual(&s.connection(), &s.higgs(), &p).unwrap();
                    worst_residual = worst_residual.max(r.max_norm());
                    cx.check(r.all_below(1e-10), || format!("{root}: residual {:e}", r.max_norm()));
                }
                let doubled = dt_residual(&sols[0].connection(), &HiggsPair::new(0.0, target_phi2), &p).unwrap();
                doubled_residual = doubled_residual.min(doubled.max_norm());
            } else if a2 < -1e-6 && violating < 100 {
                violating += 1;
                cx.check(sols.is_empty(), || format!("{root}: solutions where the inequality fails"));
            }
        }
        for _ in 0..10 {
            let (aj, ak) = (cx.uniform(0.3, 3.0), cx.uniform(0.3, 3.0));
            let ai = (2.0 / (1.0 / (aj * aj) + 1.0 / (ak * ak))).sqrt();
            let mut a = [0.0; 3];
            a[i] = ai;
            a[j] = aj;
            a[k] = ak;
            let p = StructureParams::from_f64(a, [1.0; 3]).unwrap();
            let sols = solve_dt(root, &p).unwrap();
            cx.check(sols.len() == 1 && sols[0].reducible, || format!("{root}: equality case not reducible"));
            if let Some(s) = sols.first() {
                let r = dt_residual(&s.connection(), &s.higgs(), &p).unwrap();
                cx.check(r.all_below(1e-10), || format!("{root}: reducible residual {:e}", r.max_norm()));
            }
        }
    }
    cx.check(literal_phi2_misses == 0, || {
        format!("φ₂ = 2A_i/(A_jA_k) does not hold for {literal_phi2_misses} returned solutions (returned φ₂ = A_i/(A_jA_k))")
    });
    cx.note(format!("max residual of returned solutions {worst_residual:.1e}"));
    cx.note(format!("smallest residual with φ₂ = 2A_i/(A_jA_k) substituted: {doubled_residual:.2e}"));
}

fn c8_equivalence(cx: &mut Ctx) {
    let (mut zeros, mut nonzeros) = (0, 0);
    for n in 0..100 {
        let p = cx.unit();
        let root = Root::ALL[n % 3];
        let sols = solve_dt(root, &p).unwrap();
        let (conn, higgs) = if n % 2 == 0 && !sols.is_empty() {
            let s = &sols[n % sols.len()];
            (s.connection(), s.higgs())
        } else {
            let a = cx.uniform(-1.5, 1.5);
            (InvariantConnection::on_root(root, a), HiggsPair::new(cx.uniform(-1.0, 1.0), cx.uniform(-2.0, 2.0)))
        };
        let dt = dt_residual(&conn, &higgs, &p).unwrap().max_norm();
        let raw = u_residual(&conn, &higgs, &p).unwrap().max_norm();
        if dt < 1e-10 {
            zeros += 1;
        } else {
            nonzeros += 1;
        }
        cx.check((dt < 1e-10) == (raw < 1e-10), || format!("sample {n}: Higgs-pair {dt:e} vs (A, u) {raw:e}"));
    }
    cx.note(format!("{zeros} solutions, {nonzeros} non-solutions"));
    cx.check(zeros > 10 && nonzeros > 10, || "sample mix degenerate".into());
}

fn c9_phym(cx: &mut Ctx) {
    let ke = StructureParams::from_f64([1.0, 1.0, 2f64.sqrt()], [1.0, 1.0, -1.0]).unwrap();
    let counts: Vec<usize> = Root::ALL.iter().map(|&r| solve_phym(r, &ke).unwrap().len()).collect();
    cx.check(counts == [2, 2, 0], || format!("KE solution counts {counts:?}"));
    for r in [Root::R1, Root::R2] {
        for s in solve_phym(r, &ke).unwrap() {
            cx.check((s.a * s.a - amplitude_squared(r, &ke)).abs() < 1e-12, || format!("{r}: a = {}", s.a));
            cx.check(s.residuals.all_below(1e-10), || format!("{r}: residual {:e}", s.residuals.max_norm()));
        }
    }
    for _ in 0..50 {
        let p = cx.unit();
        for r in Root::ALL {
            let irr = solve_phym(r, &p).unwrap().into_iter().filter(|s| !s.reducible).count();
            cx.check(irr == 0, || format!("irreducible pHYM at ε = (1,1,1), {r}"));
        }
    }
    for _ in 0..100 {
        let p = StructureParams::from_f64(cx.scales(), [1.0, 1.0, -1.0]).unwrap();
        let n = solve_phym(Root::R1, &p).unwrap().len() + solve_phym(Root::R2, &p).unwrap().len();
        cx.check(n > 0, || format!("no pHYM connection on r1 or r2 at {p:?}"));
    }
}

fn c10_dichotomy(cx: &mut Ctx) {
    for _ in 0..100 {
        let p = cx.unit();
        let s = existence_summary(&p).unwrap();
        cx.check(s.dt_roots >= 1, || format!("no root carries a solution at {p:?}"));
        cx.check(!s.all_reducible, || format!("all reducible at {p:?}"));
    }
    let nk = StructureParams::from_f64([1.0; 3], [1.0; 3]).unwrap();
    cx.check(existence_summary(&nk).unwrap().all_reducible, || "nearly Kähler point not all reducible".into());
    for _ in 0..10 {
        let a = [1.0 + cx.uniform(-0.01, 0.01), 1.0 + cx.uniform(-0.01, 0.01), 1.0 + cx.uniform(-0.01, 0.01)];
        let s = existence_summary(&StructureParams::from_f64(a, [1.0; 3]).unwrap()).unwrap();
        cx.check(!s.all_reducible && s.dt_roots >= 1, || format!("perturbation {a:?}"));
    }
}

fn c11_named_scans(cx: &mut Ctx) {
    let t = scan(&PathSpec::Example4, 0.5, 1.5, 101, &Root::ALL, Mode::Dt).unwrap();
    let mut worst: f64 = 0.0;
    for r in &t.rows {
        let x = r.s;
        let closed = match r.root {
            Root::R3 if x <= 1.0 => (1.0 - x * x).max(0.0).sqrt(),
            Root::R3 => 0.0,
            _ if x >= 1.0 => (0.5 - 0.5 / (x * x)).max(0.0).sqrt(),
            _ => 0.0,
        };
        let got = r.a_plus.unwrap_or(0.0);
        worst = worst.max((got - closed).abs());
        if let (Some(p), Some(m)) = (r.a_plus, r.a_minus) {
            cx.check(p == -m, || format!("a₊ ≠ −a₋ at s = {x}"));
        }
        if x == 1.0 {
            cx.check(r.reducible == Some(true), || format!("{} not reducible at x = 1", r.root));
        }
    }
    cx.check(worst < 1e-10, || format!("pointwise error {worst:e}"));
    let csv = t.to_csv();
    cx.check(csv == GOLDEN_EXAMPLE4, || "CSV differs from golden file".into());
    let again = scan(&PathSpec::Example4, 0.5, 1.5, 101, &Root::ALL, Mode::Dt).unwrap().to_csv();
    cx.check(csv == again, || "CSV not byte-stable".into());
    let t5 = scan(&PathSpec::Example5, 0.2, 1.2, 101, &Root::ALL, Mode::Dt).unwrap();
    for s in grid(0.2, 1.2, 101).unwrap() {
        let any = t5.rows.iter().any(|r| r.s == s && r.reducible == Some(false));
        cx.check(any, || format!("no irreducible root at x = {s}"));
    }
    cx.note(format!("max pointwise error {worst:.1e}"));
}

fn c12_corollary4(cx: &mut Ctx) {
    let path = PathSpec::Corollary4;
    let walls = wall_cross(&path, 0.9, 1.1, 21, Root::R1).unwrap();
    cx.check(walls.len() == 1, || format!("{} walls", walls.len()));
    if let Some(w) = walls.first() {
        cx.check((w.s - 1.0).abs() <= 1e-8, || format!("wall at {}", w.s));
        cx.check(w.solutions == Side::Below, || "solutions on the wrong side".into());
        cx.note(format!("wall at s = {:.10}", w.s));
    }
    for s in [0.9, 0.95, 0.99, 0.999] {
        let n = solve_phym(Root::R1, &path.params_at(s).unwrap()).unwrap();
        cx.check(n.len() == 2 && !n[0].reducible, || format!("no irreducible pair at s = {s}"));
    }
    for s in [1.001, 1.01, 1.05, 1.1] {
        cx.check(solve_phym(Root::R1, &path.params_at(s).unwrap()).unwrap().is_empty(), || format!("solutions at s = {s}"));
    }
    let at = solve_phym(Root::R1, &path.params_at(1.0).unwrap()).unwrap();
    cx.check(at.len() == 1 && at[0].reducible, || "wall point not reducible".into());
}

fn c13_appendix(cx: &mut Ctx) {
    let expected = [(Root::R1, (1, 0), (-3, 0)), (Root::R2, (0, 1), (0, -3)), (Root::R3, (1, 1), (3, 3))];
    let mut seen: Vec<((u8, u8), CohomologyClass4)> = Vec::new();
    for (r, w2, p1) in expected {
        let rep = char_classes(r.weight());
        cx.check(rep.w2 == w2, || format!("w₂({r}) = {:?}", rep.w2));
        cx.check(rep.p1 == CohomologyClass4::from_ints(p1.0, p1.1), || format!("p₁({r}) = ({}, {})", rep.p1.p, rep.p1.q));
        cx.check(seen.iter().all(|(w, p)| *w != rep.w2 && *p != rep.p1), || format!("{r} not distinct"));
        seen.push((rep.w2, rep.p1));
    }
    match verify_h4_relation() {
        Ok(cert) => {
            cx.check(cert.residual.is_empty(), || "certificate residual nonzero".into());
            cx.note(format!("primitive with {} terms, {} free parameters", cert.primitive.len(), cert.free_parameters));
        }
        Err(e) => cx.check(false, || e.to_string()),
    }
}

fn same_solutions(x: &[(f64, f64)], y: &[(f64, f64)]) -> bool {
    let sort = |v: &[(f64, f64)]| {
        let mut v = v.to_vec();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    };
    x.len() == y.len() && sort(x).iter().zip(sort(y)).all(|(a, b)| (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12)
}

fn c14_symmetry(cx: &mut Ctx) {
    for n in 0..50 {
        let root = Root::ALL[n % 3];
        let base = if n % 2 == 0 {
            cx.unit()
        } else {
            StructureParams::from_f64(cx.scales(), cx.real_eps()).unwrap()
        };
        let (sr, sp) = weyl_act(WeylElement::Sigma, root, &base);
        let dt = |r, p: &StructureParams| -> Vec<(f64, f64)> {
            let sols = if (p.eps_product() - 1.0).abs() < 1e-12 { solve_dt(r, p) } else { solve_dt_on_su3(r, p) };
            sols.unwrap().iter().map(|s| (s.a, s.phi2)).collect()
        };
        let ph = |r, p: &StructureParams| -> Vec<(f64, f64)> { solve_phym(r, p).unwrap().iter().map(|s| (s.a, 0.0)).collect() };
        cx.check(same_solutions(&dt(root, &base), &dt(sr, &sp)), || format!("σ breaks solve_dt at {root}, {base:?}"));
        cx.check(same_solutions(&ph(root, &base), &ph(sr, &sp)), || format!("σ breaks solve_phym at {root}, {base:?}"));
    }
    let p = StructureParams::from_f64([1.0, 1.0, 0.6], [1.0; 3]).unwrap();
    let sol = &solve_dt(Root::R3, &p).unwrap()[0];
    let off = (InvariantConnection::on_root(Root::R3, 0.5), HiggsPair::new(0.2, 0.9));
    for (conn, higgs) in [(sol.connection(), sol.higgs()), off] {
        let r0 = dt_residual(&conn, &higgs, &p).unwrap();
        for _ in 0..20 {
            let t = cx.uniform(-std::f64::consts::PI, std::f64::consts::PI);
            let (c2, h2) = gauge_rotate(&conn, &higgs, t);
            let r = dt_residual(&c2, &h2, &p).unwrap();
            let same = r0.norms().zip(r.norms()).all(|(a, b)| (a - b).abs() < 1e-12);
            cx.check(same, || format!("residuals change under rotation by {t}"));
        }
    }
    let (flipped, _) = gauge_rotate(&sol.connection(), &sol.higgs(), FRAC_PI_2);
    cx.check((flipped.amplitude() - Complex64::new(-sol.a, 0.0)).norm() < 1e-15, || "a ↦ −a fails at t = π/2".into());
}

type Criterion = (u32, &'static str, fn(&mut Ctx));

fn main() {
    let criteria: [Criterion; 14] = [
        (1, "structure table exactness", c1_structure_table),
        (2, "weight curvature expansion", c2_weight_curvature),
        (3, "Nijenhuis dual route and integrability", c3_nijenhuis),
        (4, "dω identities", c4_d_omega),
        (5, "slope dual route and degree-0 characterization", c5_slope),
        (6, "r1 curvature components", c6_curvature),
        (7, "root-bundle DT-instantons", c7_theorem3),
        (8, "Higgs-pair and (A, u) equivalence", c8_equivalence),
        (9, "pHYM connections", c9_phym),
        (10, "existence dichotomy", c10_dichotomy),
        (11, "named path scans", c11_named_scans),
        (12, "Kähler family wall", c12_corollary4),
        (13, "characteristic classes", c13_appendix),
        (14, "Weyl and gauge symmetry", c14_symmetry),
    ];
    let mut unexpected = Vec::new();
    for (id, title, run) in criteria {
        let mut cx = Ctx {
            failures: Vec::new(),
            notes: Vec::new(),
            rng: ChaCha8Rng::seed_from_u64(0x5eed_0000 + u64::from(id)),
        };
        let start = Instant::now();
        run(&mut cx);
        let elapsed = start.elapsed().as_secs_f64();
        let passed = cx.failures.is_empty();
        let known = KNOWN_DIVERGENCES.contains(&id);
        let tag = match (passed, known) {
            (true, false) => "PASS",
            (false, true) => "FAIL (known divergence)",
            (false, false) => "FAIL",
            (true, true) => "PASS (expected to fail)",
        };
        println!("{tag} criterion {id:>2}: {title} [{elapsed:.2}s]");
        for n in &cx.notes {
            println!("      {n}");
        }
        let shown: Vec<&String> = cx.failures.iter().filter(|f| !f.is_empty()).collect();
        for f in &shown {
            println!("      ! {f}");
        }
        if cx.failures.len() > shown.len() {
            println!("      ! … {} more", cx.failures.len() - shown.len());
        }
        if passed == known {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria as expected");
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
