//! Manufactured solutions, error norms and mesh-refinement studies.

mod convergence;
mod norms;
mod problems;

pub use convergence::{
    convergence_study, observed_rate, ConvergenceReport, GateCheck, GateReport, LevelRecord, MAX_LEVEL,
    MIN_GATED_LEVELS, RATE_MAX, RATE_MIN, STABILITY_FACTOR,
};
pub use norms::{error_norms, interpolation_errors, l2_norm_of, ErrorNorms};
pub use problems::{
    bubble_on_equilateral, problem_by_name, weighted_bubble_on_equilateral, zero_problem, ManufacturedProblem,
    KNOWN_PROBLEMS,
};
