use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("overflow: {0}")]
    Overflow(String),

    /// The requested point sits on (or numerically at) a pole of the
    /// superpotential.
    #[error("singular point at x = {x}")]
    Singular { x: f64 },

    #[error("no convergence: {0}")]
    Convergence(String),

    #[error("step-size check failed: {0}")]
    StepSize(String),

    /// An intertwiner annihilated the input state.
    #[error("degenerate image: norm {norm:e} below threshold")]
    Degenerate { norm: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
