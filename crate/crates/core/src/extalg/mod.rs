//! Exterior algebra over the left-invariant coframe of SU(3).

pub mod coframe;
pub mod form;
pub mod frame;
pub mod scalar;
pub mod structure;

pub use coframe::{Blade, CoframeIndex, COFRAME_DIM, HORIZONTAL_MASK, VERTICAL_MASK};
pub use form::Form;
pub use frame::{
    alpha, alpha_bar, complex_frame_blade, form_norm, hodge_star, to_orthonormal, type_project,
    volume_form, ComplexFrameForm,
};
pub use scalar::{
    approx_eq, ratio, ComplexScalar, ExactComplex, Rational, RealField, RealScalar, Scalar, DEFAULT_TOL,
};
pub use structure::{exterior_derivative, StructureTable};
