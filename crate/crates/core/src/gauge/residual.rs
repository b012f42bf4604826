//! Residuals of the pHYM and DT-instanton equations for invariant data.
//!
//! Contraction with `ω` is `ΛF = *(F∧ω²/2)` throughout.

use num_complex::Complex64;
use serde::Serialize;

use super::connection::{
    bianchi_defect, covariant_derivative_higgs, covariant_exterior_derivative, curvature, HiggsPair,
    InvariantConnection,
};
use super::lie::{bracket_wedge, LieValuedForm};
use crate::error::{Error, Result};
use crate::extalg::{approx_eq, Form};
use crate::flaggeom::{build_structure, InvariantStructure};
use crate::params::{StructureParams, PARAM_TOL};

/// Norms of the equation residuals; `None` where the equation was not evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct ResidualReport {
    /// `*d_AΦ₁ − F∧Ω₁ + d_AΦ₂∧ω²/2`.
    pub eq32_norm: Option<f64>,
    /// `F∧ω²/2 − [Φ₁,Φ₂]ω³/3!`.
    pub eq33_norm: Option<f64>,
    /// `*d_AΦ₂ − F∧Ω₂ − d_AΦ₁∧ω²/2`.
    pub eq34_norm: Option<f64>,
    /// `F^{0,2}`.
    pub f02_norm: Option<f64>,
    /// `*(F∧ω²/2)`.
    pub lambda_f_norm: Option<f64>,
    /// `F^{0,2} − ∂̄*_A u`.
    pub raw24_norm: Option<f64>,
    /// `ΛF − *[u∧ū]`.
    pub raw25_norm: Option<f64>,
    /// `d_A F`, sup norm.
    pub bianchi_norm: f64,
}

impl ResidualReport {
    pub fn norms(&self) -> impl Iterator<Item = f64> {
        [
            self.eq32_norm,
            self.eq33_norm,
            self.eq34_norm,
            self.f02_norm,
            self.lambda_f_norm,
            self.raw24_norm,
            self.raw25_norm,
        ]
        .into_iter()
        .flatten()
    }

    pub fn max_norm(&self) -> f64 {
        self.norms().fold(self.bianchi_norm, f64::max)
    }

    pub fn all_below(&self, tol: f64) -> bool {
        self.max_norm() < tol
    }

    /// Largest of the Higgs-pair residuals.
    pub fn dt_max(&self) -> Option<f64> {
        Some(self.eq32_norm?.max(self.eq33_norm?).max(self.eq34_norm?))
    }

    /// Largest of the raw `(A, u)` residuals.
    pub fn raw_max(&self) -> Option<f64> {
        Some(self.raw24_norm?.max(self.raw25_norm?))
    }
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Structure pieces as complex forms.
struct Frame {
    params: StructureParams,
    omega_sq_half: Form<Complex64>,
    omega1: Form<Complex64>,
    omega2: Form<Complex64>,
    dvol: Form<Complex64>,
}

impl Frame {
    fn new(s: &InvariantStructure) -> Self {
        Frame {
            params: s.params.clone(),
            omega_sq_half: s.omega_squared().complexify().scale(&c(0.5)),
            omega1: s.omega1.complexify(),
            omega2: s.omega2.complexify(),
            dvol: s.dvol.complexify(),
        }
    }
}

const BIANCHI_TOL: f64 = 1e-9;

fn checked_curvature(conn: &InvariantConnection) -> Result<(LieValuedForm<Complex64>, f64)> {
    let f = curvature(conn)?;
    let b = bianchi_defect(conn, &f);
    if b > BIANCHI_TOL * (1.0 + f.sup_norm()) {
        return Err(Error::Inconsistent {
            check: "bianchi",
            detail: format!("‖d_A F‖ = {b:e}"),
        });
    }
    Ok((f, b))
}

/// `Ω` descends to the base only when `ε₁ε₂ε₃ = 1`.
fn require_unit_product(params: &StructureParams) -> Result<()> {
    if !approx_eq(&params.eps_product(), &1.0, PARAM_TOL) {
        return Err(Error::Precondition(format!(
            "the Higgs-pair equations need a basic Ω, i.e. ε₁ε₂ε₃ = 1 (got {})",
            params.eps_product()
        )));
    }
    Ok(())
}

/// Higgs-pair residuals, requiring `ε₁ε₂ε₃ = 1`.
pub fn dt_residual(conn: &InvariantConnection, higgs: &HiggsPair, params: &StructureParams) -> Result<ResidualReport> {
    require_unit_product(params)?;
    pulled_back_dt_residual(conn, higgs, params)
}

/// The same residuals evaluated on SU(3) for any real `ε`, where `Ω₁, Ω₂`
/// are the semibasic forms of `α₁∧α₂∧α₃`.
pub fn pulled_back_dt_residual(
    conn: &InvariantConnection,
    higgs: &HiggsPair,
    params: &StructureParams,
) -> Result<ResidualReport> {
    let fr = Frame::new(&build_structure(params));
    let (f, bianchi) = checked_curvature(conn)?;
    let p = &fr.params;
    let d1 = covariant_derivative_higgs(conn, higgs.phi1);
    let d2 = covariant_derivative_higgs(conn, higgs.phi2);
    let comm = bracket_wedge(&higgs.phi1_field(), &higgs.phi2_field());

    let eq32 = d1.hodge_star(p)? - f.wedge_form(&fr.omega1) + d2.wedge_form(&fr.omega_sq_half);
    let eq33 = f.wedge_form(&fr.omega_sq_half) - comm.wedge_form(&fr.dvol);
    let eq34 = d2.hodge_star(p)? - f.wedge_form(&fr.omega2) - d1.wedge_form(&fr.omega_sq_half);
    Ok(ResidualReport {
        eq32_norm: Some(eq32.norm(p)?),
        eq33_norm: Some(eq33.norm(p)?),
        eq34_norm: Some(eq34.norm(p)?),
        bianchi_norm: bianchi,
        ..Default::default()
    })
}

/// `F^{0,2}` and `ΛF`.
pub fn phym_residual(conn: &InvariantConnection, params: &StructureParams) -> Result<ResidualReport> {
    let fr = Frame::new(&build_structure(params));
    let (f, bianchi) = checked_curvature(conn)?;
    let p = &fr.params;
    let f02 = f.type_project(0, 2, p)?;
    let lambda = f.wedge_form(&fr.omega_sq_half).hodge_star(p)?;
    Ok(ResidualReport {
        f02_norm: Some(f02.norm(p)?),
        lambda_f_norm: Some(lambda.norm(p)?),
        bianchi_norm: bianchi,
        ..Default::default()
    })
}

/// `u = (i/4)(Φ₁ + iΦ₂)⊗Ω̄`.
pub fn higgs_to_u(higgs: &HiggsPair, params: &StructureParams) -> LieValuedForm<Complex64> {
    let s = build_structure(params);
    let phi = higgs.phi1_field() + higgs.phi2_field().scale(&Complex64::i());
    phi.wedge_form(&s.omega_complex.conj()).scale(&(Complex64::i() / 4.0))
}

/// `∂̄*_A u = −*∂_A*u`, where `∂_A` is the (1,3) part of `d_A` on `*u`.
pub fn dbar_adjoint(conn: &InvariantConnection, u: &LieValuedForm<Complex64>, params: &StructureParams) -> Result<LieValuedForm<Complex64>> {
    let star_u = u.hodge_star(params)?;
    let d = covariant_exterior_derivative(conn, &star_u);
    if !d.vertical_part().is_zero_within(BIANCHI_TOL) {
        return Err(Error::Inconsistent {
            check: "dbar-adjoint",
            detail: "d_A(*u) has a vertical part".into(),
        });
    }
    let d13 = d.horizontal_part().type_project(1, 3, params)?;
    Ok(-d13.hodge_star(params)?)
}

/// Residuals of the original `(A, u)` equations; needs `ε = (1,1,1)`.
pub fn u_residual(conn: &InvariantConnection, higgs: &HiggsPair, params: &StructureParams) -> Result<ResidualReport> {
    if !params.eps().iter().all(|e| approx_eq(e, &1.0, PARAM_TOL)) {
        return Err(Error::Precondition(
            "the (A, u) equations are evaluated for ε = (1,1,1), where Ω is basic and ∂̄Ω = 0".into(),
        ));
    }
    let fr = Frame::new(&build_structure(params));
    let (f, bianchi) = checked_curvature(conn)?;
    let p = &fr.params;
    let u = higgs_to_u(higgs, p);
    let raw24 = f.type_project(0, 2, p)? - dbar_adjoint(conn, &u, p)?;
    let lambda = f.wedge_form(&fr.omega_sq_half).hodge_star(p)?;
    let uu = bracket_wedge(&u, &u.conj()).hodge_star(p)?;
    let raw25 = lambda - uu;
    Ok(ResidualReport {
        raw24_norm: Some(raw24.norm(p)?),
        raw25_norm: Some(raw25.norm(p)?),
        bianchi_norm: bianchi,
        ..Default::default()
    })
}

/// All residuals that apply at `params`.
pub fn full_residual(conn: &InvariantConnection, higgs: &HiggsPair, params: &StructureParams) -> Result<ResidualReport> {
    let mut r = pulled_back_dt_residual(conn, higgs, params)?;
    let ph = phym_residual(conn, params)?;
    r.f02_norm = ph.f02_norm;
    r.lambda_f_norm = ph.lambda_f_norm;
    if let Ok(u) = u_residual(conn, higgs, params) {
        r.raw24_norm = u.raw24_norm;
        r.raw25_norm = u.raw25_norm;
    }
    Ok(r)
}

/// Checks that `[u∧ū] = [Φ₁,Φ₂]·dvol`, the identity linking the two
/// formulations.
pub fn u_bracket_identity_defect(higgs: &HiggsPair, params: &StructureParams) -> Result<f64> {
    let u = higgs_to_u(higgs, params);
    let s = build_structure(params);
    let lhs = bracket_wedge(&u, &u.conj());
    let rhs = bracket_wedge(&higgs.phi1_field(), &higgs.phi2_field()).wedge_form(&s.dvol.complexify());
    Ok((lhs - rhs).sup_norm())
}
