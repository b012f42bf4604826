//! Invariant connections, Higgs fields and gauge-theoretic residuals.

pub mod connection;
pub mod lie;
pub mod residual;

pub use connection::{
    bianchi_defect, covariant_derivative_higgs, covariant_exterior_derivative, curvature,
    gauge_rotate, r1_curvature_closed_form, HiggsPair, InvariantConnection,
};
pub use lie::{bracket_wedge, structure_constant, LieValuedForm};
pub use residual::{
    dbar_adjoint, dt_residual, full_residual, higgs_to_u, phym_residual, pulled_back_dt_residual,
    u_bracket_identity_defect, u_residual, ResidualReport,
};
