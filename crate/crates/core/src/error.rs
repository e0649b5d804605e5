use thiserror::Error;

/// Errors raised while parsing cycle notation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("point {point} appears more than once")]
    RepeatedPoint { point: usize },
    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("malformed cycle notation at byte {offset}: {reason}")]
    Syntax { offset: usize, reason: String },
}

/// Errors raised while reading a group-spec file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct SpecError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("group order exceeds cap of {cap} elements")]
    OrderCap { cap: usize },
    #[error("subgroup count exceeds cap of {cap}")]
    SubgroupCap { cap: usize },
    #[error("degree {degree} exceeds cap of {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("generator {0} is not an element of the group")]
    NotAMember(String),
    #[error("subgroups belong to different parent groups")]
    ParentMismatch,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("construction check failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
