//! Sparse elements of the exterior algebra over the invariant coframe.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::coframe::{Blade, CoframeIndex, COFRAME_DIM};
use super::scalar::{ComplexScalar, RealScalar, Scalar};
use super::structure::StructureTable;

/// A (possibly mixed-degree) form `Σ c_I e^I`.
///
/// Exact zero coefficients are never stored. Floating-point round-off is kept
/// until [`Form::chop`] is called, so zero tests on float forms should go
/// through [`Form::is_zero_within`].
#[derive(Clone, Debug, PartialEq)]
pub struct Form<S: Scalar> {
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> Default for Form<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Form<S> {
    pub fn zero() -> Self {
        Form {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(Blade::ONE, c)
    }

    pub fn monomial(blade: Blade, c: S) -> Self {
        let mut f = Self::zero();
        f.add_term(blade, c);
        f
    }

    /// The basis 1-form `e^i`.
    pub fn generator(i: CoframeIndex) -> Self {
        Self::monomial(Blade::generator(i), S::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Blade, S)>>(terms: I) -> Self {
        let mut f = Self::zero();
        for (b, c) in terms {
            f.add_term(b, c);
        }
        f
    }

    fn add_term(&mut self, blade: Blade, c: S) {
        if c.is_exact_zero() {
            return;
        }
        match self.terms.remove(&blade) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_exact_zero() {
                    self.terms.insert(blade, sum);
                }
            }
            None => {
                self.terms.insert(blade, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero_within(&self, tol: f64) -> bool {
        self.terms.values().all(|c| c.is_zero_within(tol))
    }

    /// Largest coefficient modulus.
    pub fn sup_norm(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.norm_sqr_f64().sqrt())
            .fold(0.0, f64::max)
    }

    /// Drops coefficients within `tol` of zero.
    pub fn chop(&self, tol: f64) -> Self {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| !c.is_zero_within(tol))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(b, v)| (*b, v.clone() * c.clone())))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Form<T> {
        Form::from_terms(self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (b1, c1) in &self.terms {
            for (b2, c2) in &other.terms {
                if let Some((b, sign)) = b1.wedge(*b2) {
                    let prod = c1.clone() * c2.clone();
                    out.add_term(b, if sign > 0 { prod } else { -prod });
                }
            }
        }
        out
    }

    /// Distinct degrees present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|b| b.degree()).collect();
        d.dedup();
        d
    }

    /// The degree if the form is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    pub fn degree_part(&self, k: usize) -> Self {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.degree() == k)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// No β₁, β₂ factor in any stored term.
    pub fn is_semibasic(&self) -> bool {
        self.terms.keys().all(|b| b.is_horizontal())
    }

    /// Part of the form that carries a β₁ or β₂ factor.
    pub fn vertical_part(&self) -> Self {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| !b.is_horizontal())
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// Part of the form with no β₁, β₂ factor.
    pub fn horizontal_part(&self) -> Self {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.is_horizontal())
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    pub fn conj(&self) -> Self {
        self.map(|c| c.conj())
    }

    /// Real part, coefficientwise.
    pub fn re(&self) -> Self {
        self.map(|c| S::from_real(c.re()))
    }

    /// Imaginary part, coefficientwise.
    pub fn im(&self) -> Self {
        self.map(|c| S::from_real(c.im()))
    }

    /// Real parts as a form over the real subfield.
    pub fn real_part(&self) -> Form<S::Real> {
        self.map(|c| c.re())
    }

    /// Imaginary parts as a form over the real subfield.
    pub fn imag_part(&self) -> Form<S::Real> {
        self.map(|c| c.im())
    }

    /// Applies the algebra homomorphism determined by `e^i ↦ images[i]`
    /// (each image a 1-form).
    pub fn substitute(&self, images: &[Form<S>; COFRAME_DIM]) -> Self {
        let mut out = Self::zero();
        for (blade, c) in &self.terms {
            let mut acc = Form::constant(c.clone());
            for i in blade.indices() {
                acc = acc.wedge(&images[i]);
            }
            out = out + acc;
        }
        out
    }

    /// Exterior derivative via the graded Leibniz rule on the table.
    pub fn d(&self, table: &StructureTable) -> Self {
        let images: Vec<Form<S>> = CoframeIndex::ALL
            .iter()
            .map(|&i| table.derivative(i).map(S::from_rational))
            .collect();
        let mut out = Self::zero();
        for (blade, c) in &self.terms {
            let idx: Vec<usize> = blade.indices().collect();
            for (pos, &i) in idx.iter().enumerate() {
                let before = Blade::from_indices(&idx[..pos]).unwrap_or_default();
                let after = Blade::from_indices(&idx[pos + 1..]).unwrap_or_default();
                let sign = if pos % 2 == 0 { S::one() } else { -S::one() };
                let term = Form::monomial(before, sign * c.clone())
                    .wedge(&images[i])
                    .wedge(&Form::monomial(after, S::one()));
                out = out + term;
            }
        }
        out
    }

    pub fn to_c64(&self) -> Form<num_complex::Complex64> {
        self.map(|c| c.to_c64())
    }
}

impl<S: ComplexScalar> Form<S> {
    /// Multiplication by the imaginary unit.
    pub fn times_i(&self) -> Self {
        self.scale(&S::i())
    }
}

impl<R: RealScalar> Form<R> {
    /// Complexification of a real form.
    pub fn complexify<C: ComplexScalar<Real = R>>(&self) -> Form<C> {
        self.map(|c| C::from_real(c.clone()))
    }
}

impl<S: Scalar> Add for Form<S> {
    type Output = Form<S>;
    fn add(mut self, rhs: Form<S>) -> Form<S> {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
        self
    }
}

impl<S: Scalar> Add for &Form<S> {
    type Output = Form<S>;
    fn add(self, rhs: &Form<S>) -> Form<S> {
        self.clone() + rhs.clone()
    }
}

impl<S: Scalar> Neg for Form<S> {
    type Output = Form<S>;
    fn neg(self) -> Form<S> {
        self.map(|c| -c.clone())
    }
}

impl<S: Scalar> Sub for Form<S> {
    type Output = Form<S>;
    fn sub(self, rhs: Form<S>) -> Form<S> {
        self + (-rhs)
    }
}

impl<S: Scalar> Sub for &Form<S> {
    type Output = Form<S>;
    fn sub(self, rhs: &Form<S>) -> Form<S> {
        self.clone() - rhs.clone()
    }
}

impl<S: Scalar> fmt::Display for Form<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| format!("({c:?}) {b}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
