//! Crate-wide error type.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building graphs, Hamiltonians, or running
/// evolutions. Configuration mistakes and numerical failures map to different
/// process exit codes in the CLI (see [`Error::exit_code`]).
#[derive(Debug, Error)]
pub enum Error {
    #[error("site index {site} out of range for {sites} sites")]
    SiteOutOfRange { site: usize, sites: usize },

    #[error("hop endpoints must differ, got site {0} twice")]
    HopOnSameSite(usize),

    #[error("self-loop at vertex {0} is not a valid edge")]
    SelfLoop(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has no edges")]
    NoEdges,

    #[error("vertex count {0} outside the supported range 2..=6")]
    UnsupportedVertexCount(usize),

    #[error("no built-in graph with id {id} on {sites} sites (census has {count} classes)")]
    UnknownGraphId { id: usize, sites: usize, count: usize },

    #[error("occupation vector has {got} sites, expected {expected}")]
    SiteCountMismatch { got: usize, expected: usize },

    #[error("state {0:?} does not belong to the basis")]
    StateNotInBasis(Vec<u32>),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("eigendecomposition did not converge")]
    EigenFailure,

    #[error("integrator norm drift {drift:.3e} at step {step} exceeds 1e-6; reduce the step size")]
    StepSizeTooLarge { step: usize, drift: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("failed to parse graph file: {0}")]
    GraphFile(#[from] serde_json::Error),
}

impl Error {
    /// CLI exit code: 2 for configuration errors, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::EigenFailure | Error::StepSizeTooLarge { .. } => 3,
            _ => 2,
        }
    }
}
