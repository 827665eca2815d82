//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by solvers, steppers, and the CLI layer.
#[derive(Debug, Error)]
pub enum Error {
    /// A scalar parameter violated its domain (h ≤ 0, m ≤ 0, negative stiffness, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Matrix/vector dimensions do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The mass matrix was not positive definite at the evaluated configuration.
    #[error("mass matrix factorization failed (not positive definite)")]
    NonPositiveDefiniteMass,

    /// A state or force became non-finite; `step` is the first step at which it occurred.
    #[error("non-finite value at step {step}")]
    NonFinite { step: usize },

    /// The doubling heuristic could not produce a strictly feasible start.
    #[error("no strictly feasible start found after {doublings} doublings (malformed constraint matrix?)")]
    FeasibleStart { doublings: usize },

    /// The convex solver stopped without certifying optimality.
    #[error("solver failure: {0}")]
    SolverFailure(String),

    /// Bad CLI input: unknown scenario, malformed config, missing key.
    #[error("bad input: {0}")]
    BadInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
