//! Numerical toolkit for symmetrization of fractional p-Laplacian Dirichlet
//! problems on an interval: special functions and constants, rearrangements
//! and the mass-concentration order, a monotone discretization of the
//! nonlocal operator with energy-descent and direct solvers, and the
//! symmetrized-problem comparison pipeline.

pub mod error;
pub mod grid;
pub mod nonlocal;
pub mod quad;
pub mod rearrange;
pub mod specialfn;
pub mod symmetrize;

pub use error::{Error, Result};
pub use grid::GridFunction;
pub use nonlocal::{
    apply, build_operator, energy, energy_gradient, solve_linear, solve_nonlinear, weak_residual,
    DiscreteOperator, ProblemSpec, SolveInfo, SolverConfig,
};
pub use rearrange::{
    boundary_radii, concentration_compare, concentration_function, decreasing_rearrangement,
    distribution_function, integral_mean, lorentz_norm, radial_profile, riesz_f, schwarz_profile,
    truncation_g, ComparisonOutcome, ConcentrationCurve, ConcentrationOrder, TruncationParams,
};
pub use specialfn::{
    frac_perimeter, gamma_norm_const, gauss_2f1, radial_kernel_theta, theta_diag_product,
    unit_ball_volume, HypergeometricParams, KernelParams,
};
pub use symmetrize::{
    build_g, h_const, key_inequality_check, power_comparison, run_pipeline, theorem_tolerance,
    verify_theorem, ComparisonReport, SolverDiagnostics, SymmetrizedDatum,
};
