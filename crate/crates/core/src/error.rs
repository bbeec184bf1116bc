use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected domain {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("not a tensor domain: {0}")]
    NotATensorDomain(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("cannot parse scalar {0:?}")]
    ScalarParse(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a root of unity: {0}")]
    NotARootOfUnity(String),
    #[error("bialgebra axioms fail: {0}")]
    BialgebraAxiomFailure(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("not left normal: {0}")]
    NotLeftNormal(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("word uses generator 1, which is not in the subgroup fixing the first strand")]
    UsesGeneratorOne,
    #[error("tight multimaps admit no action of generator 1")]
    TightSigmaOne,
    #[error("invalid braid word: {0}")]
    InvalidBraidWord(String),
    #[error("extracted braiding differs from the original: {0}")]
    ExtractionMismatch(String),
    #[error("invalid comodule: {0}")]
    InvalidComodule(String),
    #[error("equalizer square fails: {0}")]
    EqualizerSquareFailure(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
