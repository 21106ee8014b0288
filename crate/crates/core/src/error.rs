use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cannot divide by a series with constant term of modulus {0:e}")]
    ZeroConstantTerm(f64),

    #[error("fractional power needs constant term 1, got {re}{im:+}i")]
    ConstantTermNotOne { re: f64, im: f64 },

    #[error("series of order {have} is too short, need order {need}")]
    OrderTooSmall { have: usize, need: usize },

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("not a Schur point: |c0| = {c0_abs}, |c1| = {c1_abs} exceeds 1 - |c0|^2")]
    InvalidSchurPoint { c0_abs: f64, c1_abs: f64 },

    #[error("starlike series must start 0 + z, got {0}")]
    NotNormalized(String),

    #[error("alpha must lie in (1,2], got {0}")]
    InvalidAlpha(f64),

    #[error("lambda = {lambda} lies outside the window ({lo}, {hi}]")]
    OutOfRegime { lambda: f64, lo: f64, hi: f64 },

    #[error("cos(theta0) = {0} is outside [-1, 1]")]
    CosineOutOfRange(f64),

    #[error("lambda = {0} is outside [0, 1]")]
    DomainError(f64),
}
