use alloc::string::String;

use thiserror::Error;

use crate::graph::CatalogKey;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex pair ({u}, {v}) for {n} vertices")]
    InvalidPair { u: usize, v: usize, n: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("n = {n} exceeds the vertex limit {max}")]
    VertexLimit { n: usize, max: usize },

    #[error("matrix of order {size} exceeds the size guard {limit}")]
    TooLarge { size: usize, limit: usize },

    #[error("m = {m} is not above N/2 = {total_pairs}/2; use the complement pipeline")]
    OutOfRegime { m: usize, total_pairs: usize },

    #[error("malformed deck: {0}")]
    MalformedDeck(String),

    #[error("not a realizable deck: {0}")]
    NotRealizable(String),

    #[error("vector over {found} where {expected} was required")]
    CatalogMismatch {
        expected: CatalogKey,
        found: CatalogKey,
    },

    #[error("exact division failed: {0}")]
    InexactDivision(String),

    #[error("closed-form spectrum does not annihilate B for N = {ground}, m = {m}, k = {k}")]
    FormulaMismatch { ground: usize, m: usize, k: usize },

    #[error("exact assertion failed: {0}")]
    AssertionFailed(String),
}
