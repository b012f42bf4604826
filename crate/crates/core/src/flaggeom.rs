//! Invariant almost Hermitian and SU(3)-structures on the flag manifold.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extalg::frame::{alpha, complex_frame_blade, ComplexFrameForm};
use crate::extalg::{
    approx_eq, form_norm, volume_form, ComplexScalar, Form, RealField, RealScalar, Scalar,
    StructureTable, DEFAULT_TOL,
};
use crate::params::{StructureParams, PARAM_TOL};

type C<R> = <R as RealField>::Complex;

/// The forms `ω`, `Ω = Ω₁ + iΩ₂`, `dvol` and the (1,0)-coframe of one
/// invariant structure.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantStructure<R: RealField = f64> {
    pub params: StructureParams<R>,
    pub alpha: [Form<C<R>>; 3],
    pub omega: Form<R>,
    pub omega_complex: Form<C<R>>,
    pub omega1: Form<R>,
    pub omega2: Form<R>,
    pub dvol: Form<R>,
}

/// `ω = (i/2)Σ α_i∧ᾱ_i` and `Ω = α₁∧α₂∧α₃`.
pub fn build_structure<R: RealField>(params: &StructureParams<R>) -> InvariantStructure<R> {
    let alpha: [Form<C<R>>; 3] = std::array::from_fn(|s| alpha(params, s));
    let half_i = C::<R>::i() / C::<R>::from_i64(2);
    let mut omega_c = Form::zero();
    for a in &alpha {
        omega_c = omega_c + a.wedge(&a.conj()).scale(&half_i);
    }
    debug_assert!(omega_c.imag_part().is_zero_within(0.0) || !R::EXACT);
    let big = alpha[0].wedge(&alpha[1]).wedge(&alpha[2]);
    InvariantStructure {
        params: params.clone(),
        omega: omega_c.real_part(),
        omega1: big.real_part(),
        omega2: big.imag_part(),
        omega_complex: big,
        dvol: volume_form(params),
        alpha,
    }
}

impl<R: RealField> InvariantStructure<R> {
    pub fn d_omega(&self) -> Form<R> {
        self.omega.d(StructureTable::standard())
    }

    pub fn d_omega1(&self) -> Form<R> {
        self.omega1.d(StructureTable::standard())
    }

    pub fn d_omega2(&self) -> Form<R> {
        self.omega2.d(StructureTable::standard())
    }

    pub fn omega_squared(&self) -> Form<R> {
        self.omega.wedge(&self.omega)
    }
}

fn cyclic(i: usize) -> (usize, usize) {
    ((i + 1) % 3, (i + 2) % 3)
}

/// Closed form of the Nijenhuis diagonal for real `ε`:
/// `n_ii = A_i(1 + 1/(ε₁ε₂) + 1/(ε₁ε₃) + 1/(ε₂ε₃)) / (4A_jA_kε_jε_k)`.
///
/// On `ε ∈ {±1}³` this is `A_i(ε₁ε₂ + ε₁ε₃ + ε₂ε₃ + 1)/(4A_jA_kε_jε_k)`.
pub fn nijenhuis_closed_form<R: RealField>(params: &StructureParams<R>) -> [R; 3] {
    let e = params.eps();
    let a = params.a();
    let one = R::one();
    let bracket = one.clone()
        + one.clone() / (e[0].clone() * e[1].clone())
        + one.clone() / (e[0].clone() * e[2].clone())
        + one / (e[1].clone() * e[2].clone());
    std::array::from_fn(|i| {
        let (j, k) = cyclic(i);
        a[i].clone() * bracket.clone()
            / (R::from_i64(4) * a[j].clone() * a[k].clone() * e[j].clone() * e[k].clone())
    })
}

/// The sign-pattern formula `A_i(ε₁ε₂ + ε₁ε₃ + ε₂ε₃ + 1)/(4A_jA_kε_jε_k)`,
/// valid only for normalized `ε`.
pub fn nijenhuis_sign_pattern_formula<R: RealField>(params: &StructureParams<R>) -> Result<[R; 3]> {
    if !params.is_normalized(PARAM_TOL) {
        return Err(Error::Precondition(
            "the sign-pattern Nijenhuis formula needs ε_i ∈ {±1}".into(),
        ));
    }
    let e = params.eps();
    let a = params.a();
    let s2 = e[0].clone() * e[1].clone() + e[0].clone() * e[2].clone() + e[1].clone() * e[2].clone();
    Ok(std::array::from_fn(|i| {
        let (j, k) = cyclic(i);
        a[i].clone() * (s2.clone() + R::one())
            / (R::from_i64(4) * a[j].clone() * a[k].clone() * e[j].clone() * e[k].clone())
    }))
}

/// `n_ii` read off `(dα_i)^{0,2} = c_i ᾱ_j∧ᾱ_k` (cyclic `(i,j,k)`) as
/// `n_ii = (i/(ε₁ε₂ε₃))·c_i`.
pub fn nijenhuis_from_projection<R: RealField>(params: &StructureParams<R>, tol: f64) -> Result<[R; 3]> {
    let table = StructureTable::standard();
    let norm = C::<R>::i() / C::<R>::from_real(params.eps_product());
    let mut out: [R; 3] = std::array::from_fn(|_| R::zero());
    for (i, slot) in out.iter_mut().enumerate() {
        let (j, k) = cyclic(i);
        let da = alpha::<C<R>>(params, i).d(table).horizontal_part();
        let cf = ComplexFrameForm::from_coframe(&da, params)?.of_type(0, 2);
        let (lo, hi, sign) = if j < k { (j, k, 1) } else { (k, j, -1) };
        let c = cf.coeff(complex_frame_blade(&[], &[lo, hi])) * C::<R>::from_i64(sign);
        let n = norm.clone() * c;
        if !n.im().is_zero_within(tol) {
            return Err(Error::Inconsistent {
                check: "nijenhuis",
                detail: format!("n_{0}{0} has imaginary part {1:e}", i + 1, n.im().to_f64()),
            });
        }
        *slot = n.re();
    }
    Ok(out)
}

/// Nijenhuis diagonal, computed by the closed form and by type projection;
/// errors if the two disagree beyond `tol`.
pub fn nijenhuis<R: RealField>(params: &StructureParams<R>, tol: f64) -> Result<[R; 3]> {
    let closed = nijenhuis_closed_form(params);
    let projected = nijenhuis_from_projection(params, tol)?;
    for i in 0..3 {
        if !approx_eq(&closed[i], &projected[i], tol) {
            return Err(Error::Inconsistent {
                check: "nijenhuis",
                detail: format!(
                    "n_{0}{0}: closed form {1} vs projection {2}",
                    i + 1,
                    closed[i].to_f64(),
                    projected[i].to_f64()
                ),
            });
        }
    }
    Ok(closed)
}

/// `dω` from the structure table together with the 3-form `γ` with `dω = Re γ`.
#[derive(Clone, Debug, PartialEq)]
pub struct DOmegaDecomposition<R: RealField = f64> {
    pub d_omega: Form<R>,
    pub gamma: Form<C<R>>,
}

/// `γ = (ΣA_i²ε_i)/(4A₁A₂A₃ε₁ε₂ε₃) · {(σ₃+σ₁)α₁₂₃ + (σ₃+ε₁−ε₂−ε₃)ᾱ₁α₂α₃
/// + (σ₃−ε₁+ε₂−ε₃)α₁ᾱ₂α₃ + (σ₃−ε₁−ε₂+ε₃)α₁α₂ᾱ₃}` with `σ₃ = ε₁ε₂ε₃`,
/// `σ₁ = ε₁+ε₂+ε₃`.
pub fn gamma_form<R: RealField>(structure: &InvariantStructure<R>) -> Form<C<R>> {
    let p = &structure.params;
    let (a, e) = (p.a(), p.eps());
    let s3 = p.eps_product();
    let sum_sq = (0..3).fold(R::zero(), |acc, i| acc + a[i].clone() * a[i].clone() * e[i].clone());
    let pref = sum_sq / (R::from_i64(4) * a[0].clone() * a[1].clone() * a[2].clone() * s3.clone());
    let al = &structure.alpha;
    let bar: Vec<Form<C<R>>> = al.iter().map(|x| x.conj()).collect();
    let cf = |x: R| C::<R>::from_real(x);
    let terms = [
        (s3.clone() + e[0].clone() + e[1].clone() + e[2].clone(), al[0].wedge(&al[1]).wedge(&al[2])),
        (s3.clone() + e[0].clone() - e[1].clone() - e[2].clone(), bar[0].wedge(&al[1]).wedge(&al[2])),
        (s3.clone() - e[0].clone() + e[1].clone() - e[2].clone(), al[0].wedge(&bar[1]).wedge(&al[2])),
        (s3 - e[0].clone() - e[1].clone() + e[2].clone(), al[0].wedge(&al[1]).wedge(&bar[2])),
    ];
    terms
        .into_iter()
        .fold(Form::zero(), |acc, (c, f)| acc + f.scale(&cf(c)))
        .scale(&cf(pref))
}

/// Scalar `c` with `dω = c·Re γ` at the nearly Kähler anchor
/// `A = (1,1,1)`, `ε = (1,1,1)`, in exact arithmetic.
pub fn gamma_calibration() -> Result<crate::extalg::Rational> {
    use crate::extalg::Rational;
    let one = Rational::one();
    let p = StructureParams::new([one.clone(), one.clone(), one.clone()], [one.clone(), one.clone(), one])?;
    let s = build_structure(&p);
    let d = s.d_omega();
    let re = gamma_form(&s).real_part();
    let (blade, c) = re.terms().next().ok_or(Error::Inconsistent {
        check: "gamma-calibration",
        detail: "Re γ vanishes at the anchor".into(),
    })?;
    let ratio = d.coeff(*blade) / c.clone();
    if d != re.scale(&ratio) {
        return Err(Error::Inconsistent {
            check: "gamma-calibration",
            detail: "dω is not proportional to Re γ at the anchor".into(),
        });
    }
    Ok(ratio)
}

/// Computes `dω` and `γ` and checks `dω = c·Re γ` with the calibrated `c`.
pub fn d_omega_decompose<R: RealField>(
    structure: &InvariantStructure<R>,
    tol: f64,
) -> Result<DOmegaDecomposition<R>> {
    let c = R::from_rational(&gamma_calibration()?);
    let d_omega = structure.d_omega();
    let gamma = gamma_form(structure);
    let defect = d_omega.clone() - gamma.real_part().scale(&c);
    if !defect.is_zero_within(tol) {
        return Err(Error::Inconsistent {
            check: "d-omega",
            detail: format!("dω − c·Re γ has sup norm {:e}", defect.sup_norm()),
        });
    }
    Ok(DOmegaDecomposition { d_omega, gamma })
}

/// Which of the standard structure classes a parameter point belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub integrable: bool,
    pub symplectic: bool,
    pub kahler: bool,
    pub half_flat: bool,
    pub nearly_kahler_up_to_scale: bool,
    pub kahler_einstein: bool,
}

fn is_zero_rel<R: RealScalar>(x: &R, scale: &R, tol: f64) -> bool {
    if R::EXACT {
        return x.is_exact_zero();
    }
    x.to_f64().abs() <= tol * 1f64.max(scale.to_f64().abs())
}

/// `A₁²ε₁ + A₂²ε₂ + A₃²ε₃ = 0`.
pub fn is_symplectic_condition<R: RealField>(params: &StructureParams<R>, tol: f64) -> bool {
    let (a, e) = (params.a(), params.eps());
    let sum = (0..3).fold(R::zero(), |acc, i| acc + a[i].clone() * a[i].clone() * e[i].clone());
    let scale = (0..3).fold(R::zero(), |acc, i| acc + a[i].clone() * a[i].clone() * e[i].abs());
    is_zero_rel(&sum, &scale, tol)
}

/// Vanishing of the Nijenhuis tensor; for normalized `ε` this is
/// `ε₁ε₂ + ε₁ε₃ + ε₂ε₃ + 1 = 0`.
pub fn is_integrable<R: RealField>(params: &StructureParams<R>, tol: f64) -> bool {
    let n = nijenhuis_closed_form(params);
    let scale = params.a().iter().fold(R::one(), |m, a| {
        let x = a.clone() * a.clone();
        if x > m { x } else { m }
    });
    n.iter().all(|x| is_zero_rel(x, &scale, tol))
}

/// Common scale `λ` with `dω = 3λΩ₁`, `dΩ₂ = −2λω²`, if one exists.
pub fn nearly_kahler_scale<R: RealField>(structure: &InvariantStructure<R>, tol: f64) -> Option<R> {
    let d_omega = structure.d_omega();
    let (blade, c) = structure.omega1.terms().next()?;
    let lambda = d_omega.coeff(*blade) / (R::from_i64(3) * c.clone());
    if lambda.is_zero_within(tol) {
        return None;
    }
    let first = d_omega - structure.omega1.scale(&(R::from_i64(3) * lambda.clone()));
    let second = structure.d_omega2() + structure.omega_squared().scale(&(R::from_i64(2) * lambda.clone()));
    (first.is_zero_within(tol) && second.is_zero_within(tol)).then_some(lambda)
}

/// Weyl image of the Kähler-Einstein condition: two equal signs, and the
/// remaining slot `m` has `A_m² = 2A_j² = 2A_k²`.
pub fn is_kahler_einstein_condition<R: RealField>(params: &StructureParams<R>, tol: f64) -> bool {
    if !params.is_normalized(tol) {
        return false;
    }
    let sign: Vec<bool> = params.eps().iter().map(|e| e.is_positive()).collect();
    let odd = (0..3).find(|&m| sign[(m + 1) % 3] == sign[(m + 2) % 3] && sign[m] != sign[(m + 1) % 3]);
    let Some(m) = odd else { return false };
    let (j, k) = cyclic(m);
    let a = params.a();
    let sq = |i: usize| a[i].clone() * a[i].clone();
    let two = R::from_i64(2);
    approx_eq(&sq(m), &(two.clone() * sq(j)), tol) && approx_eq(&sq(m), &(two * sq(k)), tol)
}

/// Parameter identities use [`PARAM_TOL`]; form identities use `form_tol`.
pub fn classify_with<R: RealField>(params: &StructureParams<R>, form_tol: f64) -> ClassificationFlags {
    let s = build_structure(params);
    let integrable = is_integrable(params, PARAM_TOL);
    let symplectic = is_symplectic_condition(params, PARAM_TOL);
    let kahler = integrable && symplectic;
    let half_flat = s.d_omega().wedge(&s.omega).is_zero_within(form_tol) && s.d_omega1().is_zero_within(form_tol);
    let nearly_kahler_up_to_scale = nearly_kahler_scale(&s, form_tol).is_some();
    let kahler_einstein = kahler && is_kahler_einstein_condition(params, PARAM_TOL);
    ClassificationFlags {
        integrable,
        symplectic,
        kahler,
        half_flat,
        nearly_kahler_up_to_scale,
        kahler_einstein,
    }
}

pub fn classify<R: RealField>(params: &StructureParams<R>) -> ClassificationFlags {
    classify_with(params, DEFAULT_TOL)
}

/// `‖dω‖`, `‖dΩ₁‖`, `‖dΩ₂‖` in the orthonormal coframe.
pub fn differential_norms<R: RealField>(structure: &InvariantStructure<R>) -> Result<[f64; 3]> {
    let p = &structure.params;
    Ok([
        form_norm(&structure.d_omega(), p)?,
        form_norm(&structure.d_omega1(), p)?,
        form_norm(&structure.d_omega2(), p)?,
    ])
}
