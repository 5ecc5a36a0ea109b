use thiserror::Error;

use crate::index::Index;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain/codomain mismatch: {0}")]
    Mismatch(String),

    #[error("index {index} is not a member of {set}")]
    NotMember { index: Index, set: String },

    #[error("coevaluation on an infinite index set is not row-finite")]
    DualityObstruction,

    #[error("index sets are not pairwise disjoint (index {0} occurs twice)")]
    NotDisjoint(Index),

    #[error("no coherence isomorphism: frontiers differ ({0})")]
    NoCoherence(String),

    #[error("index {0} does not encode a base object")]
    Encoding(Index),

    #[error("empty probe set")]
    EmptyProbes,

    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
