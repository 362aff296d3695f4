use thiserror::Error;

/// Failures reported by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument list has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("route `{route}` does not cover m = {m}")]
    RouteUnsupported { route: &'static str, m: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precision error: {0}")]
    Precision(String),

    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("root iteration did not converge for m = {m}")]
    Convergence { m: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
