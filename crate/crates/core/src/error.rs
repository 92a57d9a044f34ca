use alloc::string::String;

/// Errors produced by the geometry, construction, cover and search routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("point set must contain at least one point")]
    EmptyPointSet,

    #[error("point {index} has a non-finite coordinate")]
    NonFinite { index: usize },

    #[error("invalid radius {0}: must be finite and positive")]
    InvalidRadius(f64),

    #[error("invalid slack {tau} for radius {radius}")]
    InvalidSlack { tau: f64, radius: f64 },

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error(
        "construction failed for n = {n}: circumradius chain infeasible after {attempts} attempts \
         (last epsilon {epsilon:e}, delta {delta:e})"
    )]
    ConstructionFailure {
        n: usize,
        attempts: u32,
        epsilon: f64,
        delta: f64,
    },

    #[error("point set of diameter {diameter} does not embed in the region")]
    EmbeddingFailure { diameter: f64 },

    #[error("certificate '{0}' is not certified")]
    NotCertified(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
