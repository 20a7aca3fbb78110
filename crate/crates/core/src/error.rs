use thiserror::Error;

use crate::lattice::MukaiVector;
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("H^2 must be even and at least 2, got {0}")]
    InvalidH2(i64),
    #[error("alpha^2 must be positive, got {0}")]
    NonPositiveAlpha2(Rat),
    #[error("class {0} is not in the positive half-plane of the heart at this point")]
    NotInHeart(MukaiVector),
    #[error("{0} has rank zero")]
    ZeroRank(MukaiVector),
    #[error("{0} requires positive rank")]
    NonPositiveRank(MukaiVector),
    #[error("{w} is proportional to {v}")]
    Proportional { v: Box<MukaiVector>, w: Box<MukaiVector> },
    #[error("operation needs a semicircular wall")]
    NotSemicircle,
    #[error("ray beta = {beta} lies on the vertical wall of {v}")]
    RayOnVerticalWall { beta: Rat, v: Box<MukaiVector> },
    #[error("ray beta = {beta} is not on the requested side of the vertical wall")]
    WrongSide { beta: Rat },
    #[error("unbounded search window at rank {rank}, c1 = {c1}")]
    UnboundedSearch { rank: i64, c1: String },
    #[error("{0} is not a geometric stability condition")]
    InvalidStabilityPoint(String),
    #[error("v^2 = {0} must be positive")]
    NonPositiveSquare(String),
    #[error("reflection in an isotropic class {0}")]
    IsotropicReflection(MukaiVector),
    #[error("wall image {0} lies outside the closed positive cone")]
    ImageOutsidePositiveCone(MukaiVector),
    #[error("degenerate lattice: every class is orthogonal to v")]
    DegenerateLattice,
    #[error("line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("missing required key `{0}`")]
    MissingKey(String),
    #[error("annotations line {line}: {message}")]
    Annotation { line: usize, message: String },
    #[error("inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Errors caused by user-supplied configuration or annotation files.
    pub fn is_config_error(&self) -> bool {
        matches!(
            self,
            Error::Config { .. }
                | Error::Io { .. }
                | Error::MissingKey(_)
                | Error::Annotation { .. }
                | Error::InvalidH2(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
