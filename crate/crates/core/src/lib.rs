//! Multibody constraint solver with an unconditionally stable first-order scheme.
//!
//! Constraint forces for bilateral joints, unilateral limits, and frictional
//! contacts are modeled as stiff spring-dampers and computed *implicitly* each
//! step — one linear solve for purely bilateral systems, one strictly convex
//! QP/QCQP otherwise — then applied through a semi-explicit (symplectic) Euler
//! update of the multibody state. Stiffnesses up to ~10¹⁵ N/m are usable at
//! any step size without the constraint forces destabilizing the integration.
//!
//! Crate layout:
//!
//! - [`msd`] — scalar spring-mass-damper integrator lab (explicit,
//!   semi-implicit, implicit Euler) with iteration-matrix stability analysis
//! - [`dynamics`] — generalized state, system model, constraint blocks,
//!   Delassus operator, semi-explicit state update
//! - [`bilateral`] — closed-form linear path for purely bilateral systems
//! - [`qp`] — strictly convex QP/QCQP interior-point solver with friction
//!   cone support and a KKT residual checker
//! - [`assemble`] — reduction of raw constraint blocks to the solver's
//!   force-space problem, force recovery, and the full dynamics step
//! - [`scenarios`] — canonical experiments (pendulum, range-of-motion limit,
//!   elastic foundation, inclined box, sphere stack)
//! - [`cli`] — config parsing, CSV/manifest output, subcommand drivers

pub mod assemble;
pub mod bilateral;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod msd;
pub mod qp;
pub mod scenarios;

pub use error::Error;
