use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("gamma function pole at z = {0}")]
    GammaPole(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("overflow: {0}")]
    Overflow(String),

    /// A denominator Pochhammer symbol vanished while summing a terminating series.
    #[error("parameter pole in {family}: denominator vanishes at term {term}")]
    ParameterPole { family: &'static str, term: usize },

    #[error("degree {requested} exceeds the exact-mode cap of {cap}")]
    DegreeCap { requested: usize, cap: usize },

    #[error("quadrature did not converge after {subdivisions} panels (estimated error {estimated_error:e})")]
    NonConvergence {
        subdivisions: usize,
        estimated_error: f64,
    },

    #[error("integrand is not finite at x = {0}")]
    NonFinite(f64),

    #[error("envelope does not decay below {threshold:e} within |x| <= {radius}")]
    Truncation { threshold: f64, radius: f64 },

    #[error("three-term structure violated: basis coefficient {index} is {value}")]
    RecurrenceStructure { index: usize, value: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
