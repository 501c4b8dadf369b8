use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("expected arity {expected}, got {found}")]
    WrongArity { expected: usize, found: usize },

    #[error("unsupported arity {0}")]
    UnsupportedArity(usize),

    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("shape violation: {0}")]
    Shape(String),

    #[error("element is not idempotent for the commutative product")]
    NotIdempotent,

    #[error("bilinear map is not skew-symmetric")]
    NotSkew,

    #[error("algebra does not satisfy the Markl-Remm identity")]
    NotPoisson,

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("jet fails its conditions at order {0}")]
    InvalidJet(usize),

    #[error("jet order is capped at {0}")]
    OrderCap(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}
