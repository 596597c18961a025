use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix is not J-unitary")]
    NotUnitary,

    #[error("matrix has non-integral entries")]
    NotIntegral,

    #[error("element does not fix infinity (entry (4,1) is nonzero)")]
    NotInStabilizer,

    #[error("element fixes infinity; it has no isometric sphere")]
    StabilizesInfinity,

    #[error("point is mapped to infinity")]
    MapsToInfinity,

    #[error("entry (1,1) = {0} is not a unit times a positive rational")]
    UnitNormalization(String),

    #[error("matrix is not in U(2; Z[i])")]
    NotInU2,

    #[error("dilation factor must be positive, got {0}")]
    NonPositiveDilation(String),

    #[error("exponent {0} does not fit the evaluator")]
    ExponentTooLarge(String),

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
