use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid quiver spec {0:?}: {1}")]
    InvalidQuiver(String, String),

    #[error("dimension vector has length {got}, quiver has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vertex {0} out of range for a quiver with {1} vertices")]
    VertexOutOfRange(usize, usize),

    #[error("invalid interval [{lo},{hi}] for a quiver with {n} vertices")]
    InvalidInterval { lo: usize, hi: usize, n: usize },

    #[error("offsets {0:?} violate the slice condition")]
    InvalidSection(Vec<i64>),

    #[error("vertex {0} is neither a sink nor a source of the section")]
    NotSinkOrSource(usize),

    #[error("object set is not silting: {0}")]
    NotSilting(String),

    #[error("object set is not {d}-silting: {detail}")]
    NotDSilting { d: u32, detail: String },

    #[error("mutation failed: {0}")]
    Mutation(String),

    #[error("section {0:?} not reached within depth {1}")]
    Unreachable(Vec<i64>, usize),

    #[error("invalid braid word {0:?}: {1}")]
    InvalidBraidWord(String, String),

    #[error("braid elements live in different groups ({0} vs {1} strands)")]
    StrandMismatch(usize, usize),

    #[error("orbit functor has zero net translation; the orbit category is not finite")]
    ZeroTranslation,

    #[error("operation requires a quiver of type A2, got {0} vertices")]
    NotA2(usize),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A computed quantity contradicts a structural identity. Signals a bug, never bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
