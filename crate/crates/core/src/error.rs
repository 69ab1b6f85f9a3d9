use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("posets must have at least one element")]
    EmptyPoset,

    #[error("element index {index} out of range for a poset of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("cover relation contains a cycle: {cycle:?}")]
    Cycle { cycle: Vec<usize> },

    #[error("poset of size {n} exceeds the configured bound {bound}")]
    TooLarge { n: usize, bound: usize },

    #[error("image has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("isotone map enumeration exceeded the cap of {cap} maps")]
    HomCapExceeded { cap: usize },

    #[error("minimal cover enumeration exceeded the cap of {cap} covers ({partial} pending)")]
    CoverCapExceeded { cap: usize, partial: usize },

    #[error("fixpoints require a self-map; source and target differ")]
    NotEndomorphism,

    #[error("ideal has no generators")]
    EmptyIdeal,

    #[error("grid mismatch: {left:?} vs {right:?}")]
    GridMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("cell ({p}, {q}) lies outside the {rows}x{cols} grid")]
    CellOutOfRange {
        p: usize,
        q: usize,
        rows: usize,
        cols: usize,
    },

    #[error("generators do not form an antichain under divisibility")]
    NotAntichain,

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
