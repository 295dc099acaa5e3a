use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank n = {0}: need n >= 2")]
    InvalidRank(usize),

    #[error("letter {letter} out of range 1..={max} for n = {n}", max = n - 1)]
    InvalidLetter { letter: usize, n: usize },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("operation requires the canonical word of the longest element")]
    UnsupportedWord,

    #[error("entry {entry} out of range 1..={n}")]
    InvalidEntry { entry: usize, n: usize },

    #[error("row is not row-standard: {0}")]
    NotRowStandard(String),

    #[error("row [{rows}:{columns}] is not flagged")]
    NotFlagged { rows: String, columns: String },

    #[error("tableau does not fit the shape: {0}")]
    ShapeMismatch(String),

    #[error("rows do not form a skew diagram (k,...,k)\\lambda")]
    NotSkew,

    #[error("block mismatch: {0}")]
    BlockMismatch(String),

    #[error("invalid section: {0}")]
    InvalidSection(String),

    #[error("invalid minor: |R| = {rows} but |C| = {columns}")]
    InvalidMinor { rows: usize, columns: usize },

    #[error("no value for variable {0}")]
    Evaluation(String),

    #[error("basis failure: {0}")]
    BasisFailure(String),

    #[error("dimension at degree {degree} is {found}, interpolation predicts {expected}")]
    NonPolynomialGrowth {
        degree: usize,
        expected: String,
        found: String,
    },

    #[error("cannot embed point of size {from} into size {to}")]
    Embedding { from: usize, to: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("relation is not a pure binomial: {0}")]
    NotBinomial(String),

    #[error("series coefficient of t^{degree} is {value}, expected 0")]
    NotRationalOfClaimedForm { degree: usize, value: String },

    #[error("need at least {needed} values, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("geometry: {0}")]
    Geometry(String),
}
