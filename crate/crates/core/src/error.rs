use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {0} exceeds the supported maximum of 256")]
    DegreeTooLarge(usize),

    #[error("image sequence is not a bijection on 0..{degree}: {images:?}")]
    NotABijection { degree: usize, images: Vec<usize> },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("malformed cycle notation {text:?}: {reason}")]
    CycleSyntax { text: String, reason: String },

    #[error("permutation {0} is not an element of the group")]
    NotInGroup(String),

    #[error("{table} table has {rows} rows of lengths {lengths:?}, expected {n}x{n}")]
    ShapeMismatch {
        table: &'static str,
        n: usize,
        rows: usize,
        lengths: Vec<usize>,
    },

    #[error("{table}_{subscript} is not a bijection")]
    NonBijectiveRow {
        table: &'static str,
        subscript: usize,
    },

    #[error("braid relation fails at triple ({x}, {y}, {z})")]
    BraidViolation { x: usize, y: usize, z: usize },

    #[error("the map r is not a bijection of X^2")]
    NotBijective,

    #[error("diagonal map {0} is not a bijection")]
    DiagonalNotBijective(&'static str),

    #[error("solution is not 2-permutational")]
    NotTwoPermutational,

    #[error("solution is not 2-reductive")]
    NotTwoReductive,

    #[error("solution is not square-free")]
    NotSquareFree,

    #[error("solution is not involutive")]
    NotInvolutive,

    #[error("constellation constants do not generate block {block}")]
    GenerationFails { block: usize },

    #[error("invalid constellation: {0}")]
    InvalidConstellation(String),

    #[error("size must be at least 1")]
    EmptySize,

    #[error("size {n} exceeds the oracle cap of {cap}; pass the override to allow it")]
    SizeCapExceeded { n: usize, cap: usize },

    #[error("unknown catalog class {0:?}")]
    UnknownClass(String),

    #[error("malformed catalog: {0}")]
    CatalogFormat(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
