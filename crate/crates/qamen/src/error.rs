use thiserror::Error;

/// Errors raised across the toolkit. Variants are named after the violated
/// precondition so batch reports can surface them verbatim.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("operation not supported over this field: {0}")]
    UnsupportedField(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("quiver is disconnected")]
    Disconnected,
    #[error("quiver has an oriented cycle")]
    NotAcyclic,
    #[error("quiver is not of Euclidean (extended Dynkin) type")]
    NotEuclidean,
    #[error("Coxeter transformation has no finite order on the quotient lattice")]
    NotFiniteOrder,
    #[error("unknown vertex: {0}")]
    VertexUnknown(String),
    #[error("unknown arrow: {0}")]
    ArrowUnknown(String),
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("representations live over different fields")]
    FieldMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("given family of subspaces is not a subrepresentation: {0}")]
    NotSubrep(String),
    #[error("representation is not over the 2-Kronecker quiver")]
    WrongQuiver,
    #[error("epsilon must be a rational in (0, 1)")]
    BadEpsilon,
    #[error("representation is not a single regular indecomposable")]
    NotRegularIndecomposable,
    #[error("polynomial is not irreducible over the requested field")]
    NotIrreducible,
    #[error("certificates carry different (epsilon, L) parameters")]
    EpsilonMismatch,
    #[error("target epsilon unachievable: effective epsilon {0} exceeds target {1}")]
    EpsilonUnachievable(String, String),
    #[error("functor not supported for certificate pushforward")]
    UnsupportedFunctor,
    #[error("vertex {0} is not a sink/source as required by the reflection")]
    NotSinkOrSource(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
