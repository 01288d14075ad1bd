use thiserror::Error;

use crate::conegeom::FaceSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension {0} is outside the supported range 1..={max}", max = crate::intlat::MAX_DIM)]
    BadDimension(usize),

    #[error("no vectors given")]
    Empty,

    #[error("generators do not span the ambient rational space")]
    NotFullRank,

    #[error("the zero matrix has no invariant factors")]
    ZeroMatrix,

    #[error("lattice is not contained in the enclosing lattice")]
    NotSublattice,

    #[error("lattice is not contained in the integer lattice")]
    NotIntegral,

    #[error("characteristic exponents {first} and {second} are not ordered componentwise")]
    ChainOrder { first: usize, second: usize },

    #[error("characteristic exponent {position} already lies in the previous lattice")]
    NotCharacteristic { position: usize },

    #[error("characteristic exponent {position} has a negative or vanishing coordinate vector")]
    NegativeExponent { position: usize },

    #[error("invalid face index set: {0}")]
    BadFace(String),

    #[error("face {0} is singular and has no barycenter divisor")]
    SingularFace(FaceSet),

    #[error("valuation of an empty support is undefined")]
    EmptySupport,

    #[error("contact exponent is zero or has a negative coordinate")]
    ZeroContact,

    #[error("branch '{from}' lists a contact with '{to}' but not conversely")]
    AsymmetricContact { from: String, to: String },

    #[error("no singular-locus faces given although face {0} of the cone is singular")]
    BMissingSing(FaceSet),

    #[error("duplicate branch label '{0}'")]
    DuplicateLabel(String),

    #[error("unknown branch label '{0}'")]
    UnknownLabel(String),

    #[error("search bound {bound} is below the required {needed}")]
    BoundTooSmall { bound: u64, needed: u64 },

    #[error("{what} exceeds the configured limit {limit}")]
    LimitExceeded { what: String, limit: u64 },

    #[error("integer value out of the supported machine range")]
    Overflow,

    #[error("branch '{label}': {source}")]
    Branch {
        label: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Stable machine-readable code, used in CLI error output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DIMENSION_MISMATCH",
            Error::BadDimension(_) => "BAD_DIMENSION",
            Error::Empty => "EMPTY",
            Error::NotFullRank => "NOT_FULL_RANK",
            Error::ZeroMatrix => "ZERO_MATRIX",
            Error::NotSublattice => "NOT_SUBLATTICE",
            Error::NotIntegral => "NOT_INTEGRAL",
            Error::ChainOrder { .. } => "CHAIN_ORDER",
            Error::NotCharacteristic { .. } => "NOT_CHARACTERISTIC",
            Error::NegativeExponent { .. } => "NEGATIVE_EXPONENT",
            Error::BadFace(_) => "BAD_FACE",
            Error::SingularFace(_) => "SINGULAR_FACE",
            Error::EmptySupport => "EMPTY_SUPPORT",
            Error::ZeroContact => "ZERO_CONTACT",
            Error::AsymmetricContact { .. } => "ASYMMETRIC_CONTACT",
            Error::BMissingSing(_) => "B_MISSING_SING",
            Error::DuplicateLabel(_) => "DUPLICATE_LABEL",
            Error::UnknownLabel(_) => "UNKNOWN_LABEL",
            Error::BoundTooSmall { .. } => "BOUND_TOO_SMALL",
            Error::LimitExceeded { .. } => "LIMIT_EXCEEDED",
            Error::Overflow => "OVERFLOW",
            Error::Branch { source, .. } => source.code(),
        }
    }

    /// Label of the branch the error was raised for, if any.
    pub fn branch(&self) -> Option<&str> {
        match self {
            Error::Branch { label, .. } => Some(label),
            _ => None,
        }
    }

    pub(crate) fn in_branch(self, label: &str) -> Error {
        match self {
            e @ Error::Branch { .. } => e,
            e => Error::Branch {
                label: label.to_string(),
                source: Box::new(e),
            },
        }
    }
}
