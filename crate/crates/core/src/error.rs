use thiserror::Error;

/// Errors raised by the probes. Every variant names the offending input so
/// reports can carry the diagnostic verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sequence index must be >= 1, got {0}")]
    IndexOutOfRange(u64),

    #[error("generator base z must be nonzero")]
    ZeroBase,

    #[error("value at index {index} overflows the linear path (log-magnitude {log_magnitude:.3}); use the log-space path")]
    Overflow { index: u64, log_magnitude: f64 },

    #[error("duplicate generator (k={k}, z={re}{im:+}i)")]
    DuplicateGenerator { k: i32, re: f64, im: f64 },

    #[error("truncation length {got} too short: need at least {need}")]
    TruncationTooShort { got: usize, need: usize },

    #[error("numerical rank {rank} < {expected} (separation {separation:.3e}); raise N or use exact mode")]
    IllConditioned {
        rank: usize,
        expected: usize,
        separation: f64,
    },

    #[error("generator is not exactly representable as a Gaussian rational")]
    NotExact,

    #[error("step |h| = {0:e} is below the cancellation floor 1e-12")]
    StepTooSmall(f64),

    #[error("point {re}{im:+}i lies outside the domain")]
    OutsideDomain { re: f64, im: f64 },

    #[error("triangle is degenerate (zero area)")]
    DegenerateTriangle,

    #[error("evaluation point is not strictly inside the circle (|z - z0| = {distance}, r = {radius})")]
    NotInsideCircle { distance: f64, radius: f64 },

    #[error("family provides no closed-form derivative")]
    NoDerivative,

    #[error("precondition violated at index {index}: {reason}")]
    Precondition { index: usize, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
