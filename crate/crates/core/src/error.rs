use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Predicates never silently degrade: anything that would force an inexact
/// or ambiguous answer (a point on a cutting plane, a zero direction, a cap
/// overrun) is reported as an error instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero normal vector does not define a hyperplane")]
    ZeroNormal,

    #[error("coincident points do not span a line")]
    CoincidentPoints,

    #[error("degenerate input: point #{point} lies exactly on plane #{plane}")]
    PointOnPlane { point: usize, plane: usize },

    #[error("duplicate planes at indices {0} and {1}")]
    DuplicatePlanes(usize, usize),

    #[error("duplicate points at indices {0} and {1}")]
    DuplicatePoints(usize, usize),

    #[error("line does not pass through the required common point")]
    LineMissesPoint,

    #[error("plane index {0} is not part of this arrangement")]
    PlaneNotInArrangement(usize),

    #[error("vertical plane at index {0}: levels are undefined")]
    VerticalPlane(usize),

    #[error("{what} cap exceeded: requested {requested}, cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u128,
        cap: u128,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cutting is not proper: {0}")]
    ImproperCutting(String),
}

pub type Result<T> = std::result::Result<T, Error>;
