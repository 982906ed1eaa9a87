//! Steady-state correlations of a dual-cavity magnon system driven by a
//! two-mode squeezed vacuum.
//!
//! Three bosonic modes (magnon `m`, cavities `c1`, `c2`) evolve under
//! linearized quantum Langevin equations. The steady state is a three-mode
//! Gaussian state whose covariance matrix solves an algebraic Lyapunov
//! equation; from it the crate computes logarithmic negativities, the minimal
//! residual contangle and Rényi-2 Gaussian steering.
//!
//! The crate is `no_std` (it needs `alloc`) and performs no IO. File formats,
//! configuration and the command-line interface live in the `cavmag` crate.
//!
//! Layout:
//!
//! - [`numerics`]: small dense linear algebra kernel
//! - [`model`]: physical parameters, noise moments, drift and diffusion matrices
//! - [`steady_state`]: Lyapunov solve and drift stability
//! - [`measures`]: entanglement and steering quantifiers
//! - [`sweep`]: parameter grids and figure presets

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod error;
pub mod measures;
pub mod model;
pub mod numerics;
pub mod steady_state;
pub mod sweep;

pub use error::{Error, Result};
pub use measures::{full_report, CorrelationReport, ModeId};
pub use model::PhysicalParams;
pub use steady_state::{solve_lyapunov, stability, CovarianceMatrix, StabilityReport};
pub use sweep::{figure_preset, run_sweep, FigureId, SweepResult, SweepSpec};
