use thiserror::Error;

/// Errors shared across the toolkit.
///
/// Variants are grouped by how the CLI maps them to exit codes: guard
/// exhaustion is recoverable (rerun with a larger budget), certificate
/// verification failures indicate an internal bug, everything else is a
/// problem with the input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input: at least one face/facet is required")]
    EmptyInput,
    #[error("bad vertex label {0:?}: labels are nonempty, without whitespace or '#'")]
    BadLabel(String),
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("duplicate name {0:?} in set family")]
    DuplicateName(String),
    #[error("{0} is not a face of the dual complex")]
    NotADualFace(String),
    #[error("face {0} lies in {1} facets, not exactly one")]
    NotFree(String, usize),
    #[error("free face has dimension {dim}, need < {d}")]
    DimTooBig { dim: usize, d: usize },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("realization facets do not match the complex: {0}")]
    FacetMismatch(String),
    #[error("invalid obstruction: {0}")]
    InvalidObstruction(String),
    #[error("invalid asteroidal map: {0}")]
    InvalidAsteroidalMap(String),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("internal certificate verification failed: {0}")]
    VerificationFailed(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
