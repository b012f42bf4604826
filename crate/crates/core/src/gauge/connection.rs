//! Invariant connections on `P_β` and invariant Higgs fields.

use num_complex::Complex64;
use serde::Serialize;

use super::lie::{bracket_wedge, LieValuedForm};
use crate::bundles::{Root, Weight};
use crate::error::{Error, Result};
use crate::extalg::{alpha, alpha_bar, CoframeIndex, Form, StructureTable};
use crate::params::StructureParams;

/// `A = β⊗T₁/2 + Re(z)(η_i⊗T₂ − θ_i⊗T₃) + Im(z)(θ_i⊗T₂ + η_i⊗T₃)` on the
/// root space `i` of the weight.
///
/// The amplitude `z` is complex; the real slice `z = a` is the gauge fixing
/// of the `exp(tT₁)` action, which sends `z ↦ e^{2it}z`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InvariantConnection {
    pub weight: Weight,
    amplitude: Complex64,
}

impl InvariantConnection {
    /// The canonical connection `β⊗T₁/2`.
    pub fn canonical(weight: Weight) -> Self {
        InvariantConnection {
            weight,
            amplitude: Complex64::new(0.0, 0.0),
        }
    }

    /// `A^c + a(η_i⊗T₂ − θ_i⊗T₃)` on `P_{r_i}`.
    pub fn on_root(root: Root, a: f64) -> Self {
        Self::with_amplitude(root, Complex64::new(a, 0.0))
    }

    pub fn with_amplitude(root: Root, amplitude: Complex64) -> Self {
        InvariantConnection {
            weight: root.weight(),
            amplitude,
        }
    }

    /// Off-diagonal amplitude for any weight; nonzero only on roots.
    pub fn new(weight: Weight, a: f64) -> Result<Self> {
        match weight.root() {
            Some(r) => Ok(Self::on_root(r, a)),
            None if a == 0.0 => Ok(Self::canonical(weight)),
            None => Err(Error::NotARoot(weight.k, weight.l)),
        }
    }

    pub fn root(&self) -> Option<Root> {
        self.weight.root()
    }

    pub fn amplitude(&self) -> Complex64 {
        self.amplitude
    }

    /// Real amplitude `a` on the gauge slice (the modulus, signed by the real part).
    pub fn a(&self) -> f64 {
        if self.amplitude.im == 0.0 {
            self.amplitude.re
        } else {
            self.amplitude.norm() * self.amplitude.re.signum()
        }
    }

    pub fn is_irreducible(&self, tol: f64) -> bool {
        self.amplitude.norm() > tol
    }

    /// The connection 1-form on SU(3).
    pub fn one_form(&self) -> LieValuedForm<Complex64> {
        let half = Complex64::new(0.5, 0.0);
        let t1 = self.weight.form::<Complex64>().scale(&half);
        let Some(root) = self.root() else {
            return LieValuedForm::along(0, t1);
        };
        let s = root.slot();
        let eta = Form::<Complex64>::generator(CoframeIndex::eta(s));
        let theta = Form::<Complex64>::generator(CoframeIndex::theta(s));
        let (x, y) = (Complex64::new(self.amplitude.re, 0.0), Complex64::new(self.amplitude.im, 0.0));
        LieValuedForm::new([
            t1,
            eta.scale(&x) + theta.scale(&y),
            eta.scale(&y) - theta.scale(&x),
        ])
    }

    /// Applies the constant gauge transformation `exp(tT₁)`.
    pub fn rotated(&self, t: f64) -> Self {
        InvariantConnection {
            weight: self.weight,
            amplitude: self.amplitude * Complex64::from_polar(1.0, 2.0 * t),
        }
    }
}

/// Invariant Higgs fields `Φ_i = −φ_i T₁`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HiggsPair {
    pub phi1: f64,
    pub phi2: f64,
}

impl HiggsPair {
    pub fn new(phi1: f64, phi2: f64) -> Self {
        HiggsPair { phi1, phi2 }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0)
    }

    pub fn field(phi: f64) -> LieValuedForm<Complex64> {
        LieValuedForm::constant([Complex64::new(-phi, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)])
    }

    pub fn phi1_field(&self) -> LieValuedForm<Complex64> {
        Self::field(self.phi1)
    }

    pub fn phi2_field(&self) -> LieValuedForm<Complex64> {
        Self::field(self.phi2)
    }
}

/// Tolerance for the semibasic and Bianchi self-checks on curvature.
const CURVATURE_CHECK_TOL: f64 = 1e-9;

/// `F = dA + ½[A∧A]`; checks that `F` is semibasic.
pub fn curvature(conn: &InvariantConnection) -> Result<LieValuedForm<Complex64>> {
    let a = conn.one_form();
    let f = a.d(StructureTable::standard()) + bracket_wedge(&a, &a).scale(&Complex64::new(0.5, 0.0));
    if !f.vertical_part().is_zero_within(CURVATURE_CHECK_TOL) {
        return Err(Error::Inconsistent {
            check: "curvature-semibasic",
            detail: format!("F has a vertical part for weight {}", conn.weight),
        });
    }
    Ok(f.horizontal_part())
}

/// Closed form of the curvature of `A^c + a(η₁⊗T₂ − θ₁⊗T₃)` on `P_{r₁}`,
/// written in the `α` frame.
pub fn r1_curvature_closed_form(params: &StructureParams, a: f64) -> LieValuedForm<Complex64> {
    let al: [Form<Complex64>; 3] = std::array::from_fn(|s| alpha(params, s));
    let ab: [Form<Complex64>; 3] = std::array::from_fn(|s| alpha_bar(params, s));
    let [a1, a2, a3] = *params.a();
    let [e1, e2, e3] = *params.eps();
    let i = Complex64::i();
    let c = |x: f64| Complex64::new(x, 0.0);
    let f1 = al[0].wedge(&ab[0]).scale(&(i * (1.0 - a * a) / (e1 * a1 * a1)))
        - al[1].wedge(&ab[1]).scale(&(i / (2.0 * e2 * a2 * a2)))
        - al[2].wedge(&ab[2]).scale(&(i / (2.0 * e3 * a3 * a3)));
    let den = 2.0 * e2 * e3 * a2 * a3;
    let hol = al[1].wedge(&al[2]);
    let mix = al[1].wedge(&ab[2]);
    let im = |f: &Form<Complex64>| (f.clone() - f.conj()).scale(&(-i / 2.0));
    let re = |f: &Form<Complex64>| (f.clone() + f.conj()).scale(&c(0.5));
    let f2 = im(&hol).scale(&c(-a * (e2 + e3) / den)) + im(&mix).scale(&c(a * (e2 - e3) / den));
    let f3 = re(&hol).scale(&c(a * (1.0 + e2 * e3) / den)) + re(&mix).scale(&c(a * (e2 * e3 - 1.0) / den));
    LieValuedForm::new([f1, f2, f3])
}

/// `d_A X = dX + [A∧X]`.
pub fn covariant_exterior_derivative(
    conn: &InvariantConnection,
    x: &LieValuedForm<Complex64>,
) -> LieValuedForm<Complex64> {
    x.d(StructureTable::standard()) + bracket_wedge(&conn.one_form(), x)
}

/// `d_AΦ = [A, Φ]` for `Φ = −φT₁` (constant, so `dΦ = 0`).
pub fn covariant_derivative_higgs(conn: &InvariantConnection, phi: f64) -> LieValuedForm<Complex64> {
    bracket_wedge(&conn.one_form(), &HiggsPair::field(phi))
}

/// `‖d_A F‖` as a sup norm of coefficients.
pub fn bianchi_defect(conn: &InvariantConnection, f: &LieValuedForm<Complex64>) -> f64 {
    covariant_exterior_derivative(conn, f).sup_norm()
}

/// Constant gauge transformation by `exp(tT₁)`; the Higgs pair commutes
/// with `T₁` and is unchanged.
pub fn gauge_rotate(conn: &InvariantConnection, higgs: &HiggsPair, t: f64) -> (InvariantConnection, HiggsPair) {
    (conn.rotated(t), *higgs)
}
