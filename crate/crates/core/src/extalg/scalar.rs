//! Coefficient backends for forms.
//!
//! Two families are used throughout the crate: exact rationals
//! ([`Rational`], and the Gaussian rationals `Complex<Rational>`) and
//! double precision (`f64`, [`Complex64`]). Exact backends answer zero tests
//! exactly and ignore the tolerance argument.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// Exact complex numbers with rational real and imaginary parts.
pub type ExactComplex = Complex<Rational>;

/// Default tolerance for floating-point zero tests.
pub const DEFAULT_TOL: f64 = 1e-10;

/// A field element usable as a form coefficient.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// The real subfield (`Self` for real backends).
    type Real: RealScalar;

    /// Whether zero tests are exact for this backend.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn from_real(r: Self::Real) -> Self;

    /// Zero test: exact for rational backends, `|x| <= tol` for floats.
    fn is_zero_within(&self, tol: f64) -> bool;
    fn is_exact_zero(&self) -> bool;

    fn conj(&self) -> Self;
    fn re(&self) -> Self::Real;
    fn im(&self) -> Self::Real;

    /// `|x|^2` as a double, used for residual norms.
    fn norm_sqr_f64(&self) -> f64;
    fn to_c64(&self) -> Complex64;
}

/// Ordered real subfield.
pub trait RealScalar: Scalar<Real = Self> + PartialOrd {
    fn to_f64(&self) -> f64;
    /// Exact conversion for rationals, identity for `f64`. `None` on NaN/inf.
    fn from_f64(x: f64) -> Option<Self>;
    fn abs(&self) -> Self;
    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }
}

/// Complex backends, which carry an imaginary unit.
pub trait ComplexScalar: Scalar {
    fn new(re: Self::Real, im: Self::Real) -> Self;
    fn i() -> Self {
        Self::new(Self::Real::zero(), Self::Real::one())
    }
}

/// A real backend together with its complexification.
pub trait RealField: RealScalar {
    type Complex: ComplexScalar<Real = Self>;
}

impl RealField for f64 {
    type Complex = Complex64;
}

impl RealField for Rational {
    type Complex = ExactComplex;
}

/// `x ≈ y` up to `tol` relative to `max(1, |x|, |y|)`; exact on rational backends.
pub fn approx_eq<R: RealScalar>(x: &R, y: &R, tol: f64) -> bool {
    let diff = x.clone() - y.clone();
    if R::EXACT {
        return diff.is_exact_zero();
    }
    let scale = 1f64.max(x.to_f64().abs()).max(y.to_f64().abs());
    diff.to_f64().abs() <= tol * scale
}

impl Scalar for f64 {
    type Real = f64;
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn from_rational(r: &Rational) -> Self {
        rational_to_f64(r)
    }
    fn from_real(r: f64) -> Self {
        r
    }
    fn is_zero_within(&self, tol: f64) -> bool {
        f64::abs(*self) <= tol
    }
    fn is_exact_zero(&self) -> bool {
        *self == 0.0
    }
    fn conj(&self) -> Self {
        *self
    }
    fn re(&self) -> f64 {
        *self
    }
    fn im(&self) -> f64 {
        0.0
    }
    fn norm_sqr_f64(&self) -> f64 {
        self * self
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
}

impl RealScalar for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x)
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
}

impl Scalar for Rational {
    type Real = Rational;
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn from_real(r: Rational) -> Self {
        r
    }
    fn is_zero_within(&self, _tol: f64) -> bool {
        Zero::is_zero(self)
    }
    fn is_exact_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn re(&self) -> Rational {
        self.clone()
    }
    fn im(&self) -> Rational {
        Zero::zero()
    }
    fn norm_sqr_f64(&self) -> f64 {
        let x = rational_to_f64(self);
        x * x
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }
}

impl RealScalar for Rational {
    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }
    fn from_f64(x: f64) -> Option<Self> {
        Rational::from_float(x)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

impl<R: RealScalar> Scalar for Complex<R>
where
    Complex<R>: Add<Output = Complex<R>>
        + Sub<Output = Complex<R>>
        + Mul<Output = Complex<R>>
        + Div<Output = Complex<R>>
        + Neg<Output = Complex<R>>,
{
    type Real = R;
    const EXACT: bool = R::EXACT;

    fn zero() -> Self {
        Complex::new(R::zero(), R::zero())
    }
    fn one() -> Self {
        Complex::new(R::one(), R::zero())
    }
    fn from_i64(n: i64) -> Self {
        Complex::new(R::from_i64(n), R::zero())
    }
    fn from_rational(r: &Rational) -> Self {
        Complex::new(R::from_rational(r), R::zero())
    }
    fn from_real(r: R) -> Self {
        Complex::new(r, R::zero())
    }
    fn is_zero_within(&self, tol: f64) -> bool {
        if R::EXACT {
            self.re.is_exact_zero() && self.im.is_exact_zero()
        } else {
            self.norm_sqr_f64().sqrt() <= tol
        }
    }
    fn is_exact_zero(&self) -> bool {
        self.re.is_exact_zero() && self.im.is_exact_zero()
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn re(&self) -> R {
        self.re.clone()
    }
    fn im(&self) -> R {
        self.im.clone()
    }
    fn norm_sqr_f64(&self) -> f64 {
        self.re.norm_sqr_f64() + self.im.norm_sqr_f64()
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl<R: RealScalar> ComplexScalar for Complex<R>
where
    Complex<R>: Scalar<Real = R>,
{
    fn new(re: R, im: R) -> Self {
        Complex::new(re, im)
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    ToPrimitive::to_f64(r).unwrap_or_else(|| {
        // numerator/denominator too large for a direct conversion
        let n = ToPrimitive::to_f64(r.numer()).unwrap_or(f64::NAN);
        let d = ToPrimitive::to_f64(r.denom()).unwrap_or(f64::NAN);
        n / d
    })
}

/// Shorthand for the exact rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
