use thiserror::Error;

/// Crate-wide error type. Domain preconditions map to dedicated variants;
/// `Internal` flags conditions that indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coordinate vector is zero")]
    ZeroVector,
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("points coincide; they do not span a line")]
    CoincidentPoints,
    #[error("vector does not satisfy the quadric equation")]
    NotOnQuadric,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("cross ratio undefined: fewer than three distinct points")]
    DegenerateCrossRatio,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("form is not anisotropic: rational diagonalization is indefinite")]
    NotAnisotropic,
    #[error("space is not classical: {0}")]
    NotClassical(String),
    #[error("point lies in the center of the projection")]
    CenterPlane,
    #[error("point lies outside the projection domain")]
    OutsideDomain,
    #[error("lines are skew; no common point")]
    SkewLines,
    #[error("lines coincide")]
    EqualLines,
    #[error("line map is not direct")]
    NotDirect,
    #[error("line already belongs to the spread")]
    LineInSpread,
    #[error("lines do not intersect orthogonally")]
    NotRelated,
    #[error("transversal does not meet the base line")]
    TransversalMissesBase,
    #[error("base line and transversal intersect orthogonally; configuration is degenerate")]
    RelatedTransversal,
    #[error("conic is degenerate")]
    DegenerateConic,
    #[error("point lies on the conic")]
    PointOnConic,
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
