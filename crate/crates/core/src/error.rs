use thiserror::Error;

/// Failure modes shared by every solver in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("argument outside validated domain: {0}")]
    Domain(String),
    #[error("pole of the gamma function at {0}")]
    Pole(f64),
    #[error("result overflows f64: {0}")]
    Overflow(String),
    #[error("quadrature did not converge: requested {requested:e}, estimated error {achieved:e} ({detail})")]
    NonConvergence {
        requested: f64,
        achieved: f64,
        detail: String,
    },
    #[error("non-finite value encountered at step {step}")]
    NonFinite { step: usize },
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("unsupported exponent alpha = {0}")]
    UnsupportedAlpha(f64),
    #[error("extrapolation unstable: {0}")]
    Extrapolation(String),
    #[error("eigen-decomposition failed: {0}")]
    Eigen(String),
    #[error("singular system: {0}")]
    Singular(String),
    #[error("memory budget exceeded: need {needed} entries, budget {budget}")]
    Budget { needed: u64, budget: u64 },
    #[error("no growth window found: {0}")]
    NoGrowthWindow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
