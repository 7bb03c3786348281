use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not symmetric: entry ({row},{col}) is {upper} but ({col},{row}) is {lower}")]
    NotSymmetric {
        row: usize,
        col: usize,
        upper: f64,
        lower: f64,
    },

    #[error("not trace-zero: trace is {trace}")]
    NotTraceZero { trace: f64 },

    #[error("not orthogonal: {0}")]
    NotOrthogonal(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
