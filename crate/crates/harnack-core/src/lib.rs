//! Numerical laboratory for positive solutions of
//!
//! ```text
//! u_t − Δu = a·u·log u + V·u,      a ≤ 0,  −ΔV ≤ A,
//! ```
//!
//! on compact flat model manifolds (periodic tori T¹/T², interval with
//! Neumann boundary), together with the machinery needed to certify
//! differential Harnack estimates pointwise along computed trajectories:
//! the gradient bound `Δf − At − n/(2t) ≤ 0` for `f = −log u`, the Li-Yau
//! bound `2tΔf ≤ n`, the bound `2Δf − |∇f|² ≤ 2n/t` for the linear flow,
//! and the Bochner/evolution identities their proofs rest on.
//!
//! Modules:
//! - [`geometry`]: discretized manifolds and exact-order differential
//!   operators (spectral on tori, second-order finite differences with
//!   ghost reflection on the interval).
//! - [`solver`]: positivity-preserving Strang-split IMEX time integration.
//! - [`harnack`]: the certified quantities, proof-ingredient residuals,
//!   and trajectory certification reports.
//! - [`oracles`]: independent reference solutions (closed forms and a
//!   brute-force fine-grid RK4 solver) used to validate everything else.
//!
//! With the default `parallel` feature the pointwise kernels, batched
//! transforms, and per-slice certification fan out through rayon; building
//! with `--no-default-features` gives a bitwise-equivalent sequential path
//! (floating-point max reductions are exact, and sums that reach output
//! files are always accumulated in fixed order).

pub mod error;
mod exec;
pub mod geometry;
pub mod harnack;
pub mod oracles;
pub mod solver;

pub use error::{Error, Result};
pub use geometry::{Geometry, GridKind, ScalarField};
pub use harnack::{certify, CertifyOptions, HarnackReport, Tolerances};
pub use solver::{certify_a, solve, Problem, Trajectory};
