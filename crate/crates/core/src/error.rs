use thiserror::Error;

/// Every failure the library reports. The variant name doubles as the
/// stable identifier the command line prints for domain errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("quadratic extension values with different discriminants ({0} vs {1})")]
    MismatchedDiscriminant(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative discriminant {0}")]
    NegativeDiscriminant(String),
    #[error("could not parse rational from {0:?}")]
    ParseRational(String),

    #[error("side lengths must be positive")]
    NonPositiveSide,
    #[error("side lengths ({0}, {1}, {2}) violate the strict triangle inequality")]
    TriangleInequalityViolated(String, String, String),
    #[error("squared side length {0} has no rational square root")]
    IrrationalSide(String),
    #[error("homogeneous coordinates are all zero")]
    DegenerateBarycentric,

    #[error("point at infinity (coordinate sum is zero)")]
    PointAtInfinity,
    #[error("the two points coincide")]
    IdenticalPoints,
    #[error("lines meet at infinity")]
    ParallelLines,
    #[error("duplicate point at index {0}")]
    DuplicatePoint(usize),
    #[error("points are collinear")]
    CollinearPoints,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("defining points of line {0} coincide")]
    CoincidentDefiningPoints(&'static str),
    #[error("triangle is not scalene")]
    NotScalene,
    #[error("theorem check failed: {0}")]
    TheoremViolated(String),

    #[error("invalid sample spec: {0}")]
    InvalidSampleSpec(String),
    #[error("sampler gave up after {0} rejections")]
    ExhaustedRejections(usize),
    #[error("first three points of the circle fit are collinear")]
    CollinearSeed,
    #[error("invalid float policy: tolerances must be positive")]
    InvalidPolicy,
}

impl GeometryError {
    /// Bare variant name, e.g. `TriangleInequalityViolated`.
    pub fn name(&self) -> &'static str {
        use GeometryError::*;
        match self {
            MismatchedDiscriminant(..) => "MismatchedDiscriminant",
            DivisionByZero => "DivisionByZero",
            NegativeDiscriminant(_) => "NegativeDiscriminant",
            ParseRational(_) => "ParseRational",
            NonPositiveSide => "NonPositiveSide",
            TriangleInequalityViolated(..) => "TriangleInequalityViolated",
            IrrationalSide(_) => "IrrationalSide",
            DegenerateBarycentric => "DegenerateBarycentric",
            PointAtInfinity => "PointAtInfinity",
            IdenticalPoints => "IdenticalPoints",
            ParallelLines => "ParallelLines",
            DuplicatePoint(_) => "DuplicatePoint",
            CollinearPoints => "CollinearPoints",
            PreconditionViolated(_) => "PreconditionViolated",
            CoincidentDefiningPoints(_) => "CoincidentDefiningPoints",
            NotScalene => "NotScalene",
            TheoremViolated(_) => "TheoremViolated",
            InvalidSampleSpec(_) => "InvalidSampleSpec",
            ExhaustedRejections(_) => "ExhaustedRejections",
            CollinearSeed => "CollinearSeed",
            InvalidPolicy => "InvalidPolicy",
        }
    }
}

pub type Result<T, E = GeometryError> = std::result::Result<T, E>;
