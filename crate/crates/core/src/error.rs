use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported lattice: {0}")]
    UnsupportedLattice(String),

    #[error("invalid lattice data: {0}")]
    InvalidLattice(String),

    #[error("point has wrong dimension (expected {expected}, got {got})")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point lies outside the real span of the lattice")]
    OutsideSpan,

    #[error("negative squared radius")]
    NegativeRadius,

    #[error("enumeration cap exceeded ({0} vectors)")]
    EnumerationCap(usize),

    #[error("covering radius is not stored for lattice `{0}` and no deep holes are available")]
    UnknownCoveringRadius(String),

    #[error("empty shell")]
    EmptyShell,

    #[error("shell has radius zero")]
    ZeroRadiusShell,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("requested tolerance unachievable: {0}")]
    Unachievable(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("profiles are not comparable at the stored depth: {0} vs {1}")]
    UndecidableOrder(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
