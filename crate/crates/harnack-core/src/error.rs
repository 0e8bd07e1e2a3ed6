//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("field does not live on the given geometry")]
    GeometryMismatch,

    #[error("operation unsupported on this geometry: {0}")]
    UnsupportedGeometry(&'static str),

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("field must be strictly positive (min = {min:e})")]
    NonPositiveInput { min: f64 },

    #[error("non-finite value produced at node {node}")]
    NonFiniteValue { node: usize },

    #[error("solver lost positivity at t = {t}")]
    PositivityLoss { t: f64 },

    #[error("step rejected at t = {t}: relative log change {change:.3} exceeds guard")]
    StepRejected { t: f64, change: f64 },

    #[error("time must be positive (got {t})")]
    NonPositiveTime { t: f64 },

    #[error("slice index {index} is not an interior sample")]
    BoundaryIndex { index: usize },

    #[error("theorem 3 hypothesis violated: V_nu = {v_nu:e} > 0 at the boundary")]
    BoundaryInadmissible { v_nu: f64 },

    #[error("fine-grid reference would need {needed} steps (budget {budget})")]
    CflBudgetExceeded { needed: usize, budget: usize },
}
