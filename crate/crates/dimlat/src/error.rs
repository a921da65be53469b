//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("value must be nonnegative, got {0}")]
    NegativeValue(String),
    #[error("scale factor must be strictly positive, got {0}")]
    NonPositiveScale(String),
    #[error("aleph level {level} exceeds the configured maximum {max}")]
    AlephOutOfRange { level: u32, max: u32 },
    #[error("algebra must have at least one atom")]
    EmptyAlgebra,
    #[error("at most {max} atoms are supported, got {got}")]
    TooManyAtoms { got: usize, max: usize },
    #[error("duplicate atom id `{0}`")]
    DuplicateAtom(String),
    #[error("unknown atom id `{0}`")]
    UnknownAtom(String),
    #[error("unbound name `{0}`")]
    UnboundName(String),
    #[error("representation bounds require an explicit family")]
    RepNeedsExplicit,
    #[error("matrix order of a finite type I atom must be at least 1")]
    ZeroMatrixOrder,
    #[error("atom `{atom}`: {reason}")]
    NotConeClass { atom: String, reason: String },
    #[error("not a projection class at atom `{atom}`: {reason}")]
    NotProjectionClass { atom: String, reason: String },
    #[error("not a representation class at atom `{atom}`: {reason}")]
    NotRepresentationClass { atom: String, reason: String },
    #[error("amplification index must be a positive integer or an aleph, got {0}")]
    BadAmplificationIndex(String),
    #[error("matrix order overflow during amplification")]
    AmplificationOverflow,
    #[error("element does not live over the amplification base")]
    NotOverBase,
    #[error("family must be nonempty")]
    EmptyFamily,
    #[error("described set for atom `{0}` is empty")]
    EmptyDescribedSet(String),
    #[error("empty set has no greatest lower bound")]
    EmptyGlb,
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("chain set not admissible on atom `{atom}`: {reason}")]
    DomainViolation { atom: String, reason: String },
    #[error("malformed formal sum: {0}")]
    MalformedFormalSum(String),
    #[error("first element is not dominated by the second")]
    NotDominated,
    #[error("closure not implemented for this combination: {0}")]
    UnsupportedClosure(String),
    #[error("closure descriptor too large to materialize ({0} points)")]
    ClosureTooLarge(String),
    #[error("rank {rank} exceeds matrix order {order}")]
    RankOutOfBounds { rank: u64, order: u64 },
    #[error("not realizable as an orthogonal sum in this algebra")]
    UnrealizableSum,
    #[error("shape must be nonempty with every order at least 1")]
    BadShape,
    #[error("rank tuples have different shapes")]
    ShapeMismatch,
}
