//! Metric operations on semibasic forms: the orthonormal coframe
//! `e^{2i−1} = Re α_i = A_iη_i`, `e^{2i} = Im α_i = A_iε_iθ_i`, the Hodge
//! star with orientation `e¹∧…∧e⁶`, norms, and (p,q)-type projection.

use super::coframe::{Blade, CoframeIndex, COFRAME_DIM, HORIZONTAL_MASK};
use super::form::Form;
use super::scalar::{ComplexScalar, RealScalar, Scalar};
use crate::error::{Error, Result};
use crate::params::StructureParams;

fn ensure_semibasic<S: Scalar>(f: &Form<S>, op: &'static str) -> Result<()> {
    if f.is_semibasic() {
        Ok(())
    } else {
        Err(Error::NotSemibasic { op })
    }
}

/// Length of `η_i` or `θ_i` measured in the orthonormal coframe.
fn coframe_length<R: RealScalar>(params: &StructureParams<R>, index: usize) -> R {
    let slot = (index - 2) / 2;
    let a = params.a_i(slot).clone();
    if index.is_multiple_of(2) {
        a
    } else {
        a * params.eps_i(slot).clone()
    }
}

/// Coefficients of `f` in the orthonormal coframe. Blades keep their bit
/// positions: bit 2+2i ↔ Re α_i, bit 3+2i ↔ Im α_i.
pub fn to_orthonormal<S: Scalar>(f: &Form<S>, params: &StructureParams<S::Real>) -> Result<Form<S>> {
    ensure_semibasic(f, "to_orthonormal")?;
    Ok(Form::from_terms(f.terms().map(|(b, c)| {
        let mut scale = S::one();
        for i in b.indices() {
            scale = scale / S::from_real(coframe_length(params, i));
        }
        (*b, c.clone() * scale)
    })))
}

/// Inverse of [`to_orthonormal`].
pub fn from_orthonormal<S: Scalar>(f: &Form<S>, params: &StructureParams<S::Real>) -> Result<Form<S>> {
    ensure_semibasic(f, "from_orthonormal")?;
    Ok(Form::from_terms(f.terms().map(|(b, c)| {
        let mut scale = S::one();
        for i in b.indices() {
            scale = scale * S::from_real(coframe_length(params, i));
        }
        (*b, c.clone() * scale)
    })))
}

/// The volume form `e¹∧…∧e⁶ = ε₁ε₂ε₃A₁²A₂²A₃² η₁∧θ₁∧η₂∧θ₂∧η₃∧θ₃`.
pub fn volume_form<S: Scalar>(params: &StructureParams<S::Real>) -> Form<S> {
    let top = Blade::from_bits(HORIZONTAL_MASK);
    from_orthonormal(&Form::monomial(top, S::one()), params).expect("top form is semibasic")
}

/// Riemannian Hodge star on semibasic forms (ℂ-linear on complex backends).
pub fn hodge_star<S: Scalar>(f: &Form<S>, params: &StructureParams<S::Real>) -> Result<Form<S>> {
    let on = to_orthonormal(f, params)?;
    let top = Blade::from_bits(HORIZONTAL_MASK);
    let starred = Form::from_terms(on.terms().map(|(b, c)| {
        let comp = Blade::from_bits(HORIZONTAL_MASK & !b.bits());
        // e^I ∧ (s e^J) = vol
        let (_, sign) = b.wedge(comp).expect("complementary blades");
        debug_assert_eq!(b.wedge(comp).map(|x| x.0), Some(top));
        (comp, if sign > 0 { c.clone() } else { -c.clone() })
    }));
    from_orthonormal(&starred, params)
}

/// Euclidean norm of the coefficients in the orthonormal coframe.
pub fn form_norm<S: Scalar>(f: &Form<S>, params: &StructureParams<S::Real>) -> Result<f64> {
    let on = to_orthonormal(f, params)?;
    Ok(on.terms().map(|(_, c)| c.norm_sqr_f64()).sum::<f64>().sqrt())
}

/// The complex 1-form `α_i = A_i(η_i + iε_iθ_i)`.
pub fn alpha<C: ComplexScalar>(params: &StructureParams<C::Real>, slot: usize) -> Form<C> {
    let a = C::from_real(params.a_i(slot).clone());
    let ie = C::i() * C::from_real(params.eps_i(slot).clone());
    (Form::generator(CoframeIndex::eta(slot)) + Form::generator(CoframeIndex::theta(slot)).scale(&ie))
        .scale(&a)
}

/// `ᾱ_i = A_i(η_i − iε_iθ_i)`.
pub fn alpha_bar<C: ComplexScalar>(params: &StructureParams<C::Real>, slot: usize) -> Form<C> {
    alpha(params, slot).conj()
}

/// A semibasic form rewritten in the complex frame `{α_i, ᾱ_i}`.
///
/// Uses the same bitmask layout as coordinate forms with bit 2+2i standing
/// for `α_i` and bit 3+2i for `ᾱ_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexFrameForm<C: ComplexScalar>(pub Form<C>);

impl<C: ComplexScalar> ComplexFrameForm<C> {
    /// Rewrites `f` using `η_i = (α_i+ᾱ_i)/(2A_i)`, `θ_i = (α_i−ᾱ_i)/(2iε_iA_i)`.
    pub fn from_coframe(f: &Form<C>, params: &StructureParams<C::Real>) -> Result<Self> {
        ensure_semibasic(f, "type_project")?;
        let two = C::from_i64(2);
        let images: [Form<C>; COFRAME_DIM] = std::array::from_fn(|i| {
            if i < 2 {
                return Form::zero();
            }
            let slot = (i - 2) / 2;
            let a = Form::<C>::generator(CoframeIndex::eta(slot));
            let abar = Form::<C>::generator(CoframeIndex::theta(slot));
            let ai = C::from_real(params.a_i(slot).clone());
            if i % 2 == 0 {
                (a + abar).scale(&(C::one() / (two.clone() * ai)))
            } else {
                let denom = two.clone() * C::i() * C::from_real(params.eps_i(slot).clone()) * ai;
                (a - abar).scale(&(C::one() / denom))
            }
        });
        Ok(ComplexFrameForm(f.substitute(&images)))
    }

    /// Back to the real coframe.
    pub fn to_coframe(&self, params: &StructureParams<C::Real>) -> Form<C> {
        let images: [Form<C>; COFRAME_DIM] = std::array::from_fn(|i| {
            if i < 2 {
                return Form::zero();
            }
            let slot = (i - 2) / 2;
            if i % 2 == 0 {
                alpha(params, slot)
            } else {
                alpha_bar(params, slot)
            }
        });
        self.0.substitute(&images)
    }

    /// Coefficient of `α_{i₁}∧…∧ᾱ_{j₁}∧…` given as a sorted bitmask blade.
    pub fn coeff(&self, blade: Blade) -> C {
        self.0.coeff(blade)
    }

    /// Keeps the terms with `p` holomorphic and `q` antiholomorphic factors.
    pub fn of_type(&self, p: usize, q: usize) -> Self {
        ComplexFrameForm(Form::from_terms(self.0.terms().filter_map(|(b, c)| {
            let holo = (b.bits() & 0b0101_0100).count_ones() as usize;
            let anti = (b.bits() & 0b1010_1000).count_ones() as usize;
            (holo == p && anti == q).then(|| (*b, c.clone()))
        })))
    }
}

/// Blade in the complex frame from lists of α and ᾱ slots.
pub fn complex_frame_blade(holo: &[usize], anti: &[usize]) -> Blade {
    let mut bits = 0u8;
    for &s in holo {
        bits |= 1 << (2 + 2 * s);
    }
    for &s in anti {
        bits |= 1 << (3 + 2 * s);
    }
    Blade::from_bits(bits)
}

/// The (p,q) component of a semibasic complex form.
pub fn type_project<C: ComplexScalar>(
    f: &Form<C>,
    p: usize,
    q: usize,
    params: &StructureParams<C::Real>,
) -> Result<Form<C>> {
    Ok(ComplexFrameForm::from_coframe(f, params)?
        .of_type(p, q)
        .to_coframe(params))
}
