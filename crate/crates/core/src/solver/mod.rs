//! Solution families, the Weyl symmetry and parameter scans.

mod dt;
mod plot;
mod scan;
mod weyl;

pub use dt::{
    amplitude_squared, eps_identity, existence, existence_summary, phi2_closed_form, phym_sign_pattern, solve_dt,
    solve_dt_on_su3, solve_dt_weight, solve_phym, DTSolution, Existence, ExistenceSummary, PhymSolution, RootSummary,
    SOLUTION_TOL,
};
pub use plot::render_svg;
pub use scan::{grid, scan, wall_cross, Mode, PathSpec, ScanRow, ScanTable, Side, Wall, CSV_HEADER, WALL_TOL};
pub use weyl::{weyl_act, WeylElement};
