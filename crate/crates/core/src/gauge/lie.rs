//! Forms with values in the gauge Lie algebra `so(3) ≅ su(2)`.

use std::ops::{Add, Neg, Sub};

use crate::error::Result;
use crate::extalg::{form_norm, hodge_star, type_project, ComplexScalar, Form, Scalar, StructureTable};
use crate::params::StructureParams;

/// Components along `T₁, T₂, T₃` with `[T₁,T₂] = 2T₃`, `[T₂,T₃] = 2T₁`,
/// `[T₃,T₁] = 2T₂`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct LieValuedForm<S: Scalar> {
    pub components: [Form<S>; 3],
}

/// Structure constants: `[T_a, T_b] = Σ_c f(a,b,c) T_c`.
pub fn structure_constant(a: usize, b: usize, c: usize) -> i64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 2,
        (1, 0, 2) | (2, 1, 0) | (0, 2, 1) => -2,
        _ => 0,
    }
}

impl<S: Scalar> LieValuedForm<S> {
    pub fn new(components: [Form<S>; 3]) -> Self {
        LieValuedForm { components }
    }

    pub fn zero() -> Self {
        Self::new(Default::default())
    }

    /// `f ⊗ T_a`.
    pub fn along(a: usize, f: Form<S>) -> Self {
        let mut out = Self::zero();
        out.components[a] = f;
        out
    }

    /// Constant Lie algebra element, as a 0-form.
    pub fn constant(coords: [S; 3]) -> Self {
        Self::new(coords.map(Form::constant))
    }

    pub fn component(&self, a: usize) -> &Form<S> {
        &self.components[a]
    }

    pub fn map_forms(&self, f: impl Fn(&Form<S>) -> Form<S>) -> Self {
        Self::new(std::array::from_fn(|a| f(&self.components[a])))
    }

    pub fn try_map_forms(&self, f: impl Fn(&Form<S>) -> Result<Form<S>>) -> Result<Self> {
        let [x, y, z] = &self.components;
        Ok(Self::new([f(x)?, f(y)?, f(z)?]))
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map_forms(|f| f.scale(c))
    }

    /// `X ∧ f`, the scalar form on the right.
    pub fn wedge_form(&self, f: &Form<S>) -> Self {
        self.map_forms(|x| x.wedge(f))
    }

    /// `f ∧ X`.
    pub fn form_wedge(&self, f: &Form<S>) -> Self {
        self.map_forms(|x| f.wedge(x))
    }

    pub fn d(&self, table: &StructureTable) -> Self {
        self.map_forms(|x| x.d(table))
    }

    pub fn conj(&self) -> Self {
        self.map_forms(|x| x.conj())
    }

    pub fn is_semibasic(&self) -> bool {
        self.components.iter().all(Form::is_semibasic)
    }

    pub fn vertical_part(&self) -> Self {
        self.map_forms(|x| x.vertical_part())
    }

    pub fn horizontal_part(&self) -> Self {
        self.map_forms(|x| x.horizontal_part())
    }

    pub fn is_zero_within(&self, tol: f64) -> bool {
        self.components.iter().all(|f| f.is_zero_within(tol))
    }

    pub fn sup_norm(&self) -> f64 {
        self.components.iter().map(Form::sup_norm).fold(0.0, f64::max)
    }

    /// Componentwise Hodge star.
    pub fn hodge_star(&self, params: &StructureParams<S::Real>) -> Result<Self> {
        self.try_map_forms(|f| hodge_star(f, params))
    }

    /// `(Σ_a ‖F_a‖²)^{1/2}` with the orthonormal-coframe norm and `|T_a| = 1`.
    pub fn norm(&self, params: &StructureParams<S::Real>) -> Result<f64> {
        let mut sq = 0.0;
        for f in &self.components {
            let n = form_norm(f, params)?;
            sq += n * n;
        }
        Ok(sq.sqrt())
    }
}

impl<S: ComplexScalar> LieValuedForm<S> {
    pub fn type_project(&self, p: usize, q: usize, params: &StructureParams<S::Real>) -> Result<Self> {
        self.try_map_forms(|f| type_project(f, p, q, params))
    }
}

/// `[X∧Y] = Σ X_a∧Y_b ⊗ [T_a, T_b]`.
pub fn bracket_wedge<S: Scalar>(x: &LieValuedForm<S>, y: &LieValuedForm<S>) -> LieValuedForm<S> {
    let mut out = LieValuedForm::zero();
    for a in 0..3 {
        for b in 0..3 {
            if a == b || x.components[a].is_empty() || y.components[b].is_empty() {
                continue;
            }
            let c = 3 - a - b;
            let f = structure_constant(a, b, c);
            let term = x.components[a].wedge(&y.components[b]).scale(&S::from_i64(f));
            out.components[c] = out.components[c].clone() + term;
        }
    }
    out
}

impl<S: Scalar> Add for LieValuedForm<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a0, a1, a2] = self.components;
        let [b0, b1, b2] = rhs.components;
        Self::new([a0 + b0, a1 + b1, a2 + b2])
    }
}

impl<S: Scalar> Sub for LieValuedForm<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Neg for LieValuedForm<S> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map_forms(|x| -x.clone())
    }
}
