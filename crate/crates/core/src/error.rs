use thiserror::Error;

use crate::shapes::Cell;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing and positive, got {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("inner partition {inner:?} is not contained in outer partition {outer:?}")]
    NotContained { outer: Vec<usize>, inner: Vec<usize> },

    #[error("cell ({}, {}) lies outside the shape", .0.row, .0.col)]
    CellOutsideShape(Cell),

    /// The shape has more rows than the ambient parameter allows.
    #[error("shape has {rows} rows but n = {n}; need n >= rows")]
    TooManyRows { rows: usize, n: usize },

    #[error("filling has {found} entries in row {row}, shape expects {expected}")]
    RowLengthMismatch { row: usize, expected: usize, found: usize },

    #[error("tableau is not a valid {class}: {reason}")]
    InvalidTableau { class: String, reason: String },

    #[error("path system is invalid: {0}")]
    InvalidPaths(String),

    #[error("polynomial is not symmetric: leftover monomial {0}")]
    NotSymmetric(String),

    #[error("{what} is not an integer: {value}")]
    NonIntegral { what: &'static str, value: String },

    #[error("empty region has no {0}")]
    EmptyRegion(&'static str),

    #[error("{selector} is not well defined: cells {cells:?} share a column")]
    AmbiguousSelector { selector: &'static str, cells: Vec<(usize, usize)> },

    #[error("jeu de taquin produced a negative value at ({}, {})", .0.row, .0.col)]
    NegativeValue(Cell),

    #[error("sorting invariant violated in round {round}: {detail}")]
    SortInvariant { round: usize, detail: String },

    #[error("unknown format {0:?}")]
    UnknownFormat(String),

    #[error("malformed input: {0}")]
    Parse(String),
}
