//! Invariant almost Hermitian geometry on the full flag manifold SU(3)/T²
//! and homogeneous gauge theory over it.

pub mod error;
pub mod bundles;
pub mod extalg;
pub mod flaggeom;
pub mod gauge;
pub mod params;
pub mod solver;

pub use error::{Error, Result};
pub use params::{StructureParams, PARAM_TOL};
