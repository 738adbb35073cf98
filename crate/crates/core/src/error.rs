use thiserror::Error;

use crate::algebra::GeneratorId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not invertible")]
    Singular,

    #[error("invalid block specification at `{field}`: {message}")]
    InvalidSpec { field: String, message: String },

    #[error("Q must be diagonal with positive entries: {0}")]
    BadQ(String),

    #[error("F times conj(F) is not +I or -I; product was {0}")]
    NotOrthogonal(String),

    #[error("F is not monomial (exactly one nonzero entry per row and column)")]
    NonMonomial,

    #[error("inconsistent reality relation at entry ({row}, {col}): {detail}")]
    InconsistentReality { row: usize, col: usize, detail: String },

    #[error("presentation layout does not match the block specification: {0}")]
    LayoutMismatch(String),

    #[error("unknown generator {0}")]
    UnknownGenerator(GeneratorId),

    #[error("trace system is infeasible (the relations admit no tracial state)")]
    Infeasible,

    #[error("undetermined: the positivity program for {0} is unbounded")]
    Undetermined(String),

    #[error("degree bound {bound} is smaller than the degree {degree} of the element")]
    BoundTooSmall { bound: usize, degree: usize },

    #[error("renaming is not a bijection onto the target generators: {0}")]
    NonBijective(String),

    #[error("letter {0} is not part of a fundamental matrix layout")]
    NotInLayout(String),

    #[error("numeric: {0}")]
    Numeric(String),

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
