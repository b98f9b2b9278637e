//! Crate-wide error type.

use thiserror::Error;

use crate::obstruction::ParityCertificate;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Part-size lists must be non-empty with every entry at least 1.
    #[error("invalid part sizes: {0}")]
    InvalidPartSizes(String),

    /// A color shift would produce a color below 1.
    #[error("shifting color {color} by {delta} would leave the valid range")]
    ColorUnderflow { color: u32, delta: i64 },

    /// A coloring document or assignment violates structural requirements
    /// (missing/duplicate edges, colors outside `1..=t`). Distinct from a
    /// mathematically invalid coloring, which is a clean verifier verdict.
    #[error("malformed coloring: {0}")]
    MalformedColoring(String),

    /// Vertex does not belong to the graph.
    #[error("vertex {part}:{index} is not in the graph")]
    InvalidVertex { part: usize, index: usize },

    /// A parity certificate was requested where none exists.
    #[error("no parity obstruction for m={m}, n={n}: gcd(m+1, n+1) = 1")]
    NoObstruction { m: u64, n: u64 },

    /// The graph is proven not interval colorable; carries the certificate.
    #[error("K_{{1,{m},{n}}} is not interval colorable: {certificate}")]
    NotColorable {
        m: u64,
        n: u64,
        certificate: ParityCertificate,
    },

    /// A precondition on an argument failed.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A hard size cap was exceeded (as opposed to a tunable search budget).
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),

    /// A search budget (edge count or node count) was exhausted before the
    /// search completed. Never reported as a "no" verdict.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// A sweep observed disagreement between construction, gcd criterion,
    /// and oracle; the sweep is aborted with this diagnostic.
    #[error("sweep aborted on disagreement: {0}")]
    SweepDisagreement(String),

    /// An existing survey file does not match the requested sweep.
    #[error("survey file mismatch: {0}")]
    SurveyMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
