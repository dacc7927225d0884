use thiserror::Error;

/// Errors raised by the sector polynomial routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coefficients must be finite, got ({a}, {b}, {c})")]
    NonFiniteCoefficient { a: f64, b: f64, c: f64 },

    #[error("angle {0} is outside [0, pi/4]")]
    AngleOutOfRange(f64),

    #[error("point ({x}, {y}) is outside the sector 0 <= y <= x")]
    OutsideSector { x: f64, y: f64 },

    #[error("the origin is not a valid evaluation point")]
    Origin,

    #[error("{name} = {value} is outside [{lo}, {hi}]")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("{curve} is not defined at lambda = {lambda} (domain [{lo}, {hi}])")]
    OutsideBranchDomain {
        curve: &'static str,
        lambda: f64,
        lo: f64,
        hi: f64,
    },

    #[error("objective returned non-finite value {value} at {location}")]
    NonFinite { value: f64, location: String },

    #[error("the zero polynomial has no norm ratio")]
    ZeroPolynomial,

    #[error("invalid scan configuration: {0}")]
    InvalidConfig(String),

    #[error("figure {0} does not exist (expected 1..=13)")]
    UnknownFigure(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
