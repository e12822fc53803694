//! Crate-wide error type.

/// Errors raised across mesh construction, assembly, solvers, and the
/// experiment runner. Messages name the offending vertex/cell/field where the
/// failure is local.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid mesh: {0}")]
    InvalidMesh(String),
    #[error("assembly error: {0}")]
    Assembly(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resolution error: {0}")]
    Resolution(String),
    #[error("solver error: {0}")]
    Solver(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
