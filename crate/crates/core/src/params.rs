//! Parameters of the invariant almost Hermitian structures.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extalg::scalar::RealScalar;

/// Tolerance for closed-form parameter identities (`A₃² = 2A₁²`,
/// `ε₁ε₂ε₃ = 1`, ...). Looser than the residual tolerance because command-line
/// literals such as `1.41421356` carry about nine significant digits.
pub const PARAM_TOL: f64 = 1e-8;

/// Frame scales `A₁, A₂, A₃ > 0` and shape parameters `ε₁, ε₂, ε₃ ≠ 0`.
///
/// The complex 1-forms `α_i = A_i(η_i + iε_iθ_i)` span the (1,0) forms; the
/// orthonormal coframe is `{Re α_i, Im α_i}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureParams<R = f64> {
    a: [R; 3],
    eps: [R; 3],
}

impl<R: RealScalar> StructureParams<R> {
    pub fn new(a: [R; 3], eps: [R; 3]) -> Result<Self> {
        for (i, ai) in a.iter().enumerate() {
            if !ai.is_positive() {
                return Err(Error::InvalidParams(format!("{} must be positive", ["A₁", "A₂", "A₃"][i])));
            }
        }
        for (i, ei) in eps.iter().enumerate() {
            if ei.is_exact_zero() {
                return Err(Error::InvalidParams(format!("{} must be nonzero", ["ε₁", "ε₂", "ε₃"][i])));
            }
        }
        Ok(StructureParams { a, eps })
    }

    pub fn a(&self) -> &[R; 3] {
        &self.a
    }

    pub fn eps(&self) -> &[R; 3] {
        &self.eps
    }

    pub fn a_i(&self, slot: usize) -> &R {
        &self.a[slot]
    }

    pub fn eps_i(&self, slot: usize) -> &R {
        &self.eps[slot]
    }

    /// `ε₁ε₂ε₃`.
    pub fn eps_product(&self) -> R {
        self.eps[0].clone() * self.eps[1].clone() * self.eps[2].clone()
    }

    /// All `ε_i ∈ {±1}` (within `tol` for float parameters).
    pub fn is_normalized(&self, tol: f64) -> bool {
        self.eps
            .iter()
            .all(|e| (e.abs() - R::one()).is_zero_within(tol))
    }

    /// `(ε₁, ε₂, ε₃) = (1, 1, 1)`, the non-integrable structure with basic Ω.
    pub fn is_nearly_kahler_type(&self, tol: f64) -> bool {
        self.eps.iter().all(|e| (e.clone() - R::one()).is_zero_within(tol))
    }

    pub fn to_f64(&self) -> StructureParams<f64> {
        StructureParams {
            a: self.a.clone().map(|x| x.to_f64()),
            eps: self.eps.clone().map(|x| x.to_f64()),
        }
    }

    /// Relabels the three slots: new slot `i` takes old slot `perm[i]`, and
    /// each `ε` is multiplied by `sign`.
    pub fn relabel(&self, perm: [usize; 3], sign: i64) -> Self {
        let s = R::from_i64(sign);
        StructureParams {
            a: perm.map(|p| self.a[p].clone()),
            eps: perm.map(|p| self.eps[p].clone() * s.clone()),
        }
    }
}

impl StructureParams<f64> {
    pub fn from_f64(a: [f64; 3], eps: [f64; 3]) -> Result<Self> {
        if a.iter().chain(eps.iter()).any(|x| !x.is_finite()) {
            return Err(Error::InvalidParams("parameters must be finite".into()));
        }
        Self::new(a, eps)
    }

    /// `ε = (1, 1, 1)` with the given scales.
    pub fn nearly_kahler_family(a: [f64; 3]) -> Result<Self> {
        Self::from_f64(a, [1.0; 3])
    }
}
