use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("series division by a series with zero known part")]
    SeriesDivision,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported root: {0}")]
    UnsupportedRoot(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("singular matrix, determinant {det} vanishes")]
    Singular { det: String },

    #[error("evaluation error: {0}")]
    Evaluation(String),

    #[error("chart error: {0}")]
    Chart(String),

    #[error("normalization error: {0}")]
    Normalization(String),

    #[error("convention check failed: {0}")]
    Convention(String),

    #[error("internal disagreement: {0}")]
    Disagreement(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("vector field is not unique: {0}")]
    NonUnique(String),

    #[error("seed error: {0}")]
    Seed(String),

    #[error("unsolvable resonance at order {order}: {detail}")]
    Resonance { order: usize, detail: String },

    #[error("insufficient precision: need order {required}, have {available}")]
    Precision { required: usize, available: usize },

    #[error("cache error at offset {offset}: {msg}")]
    Cache { offset: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
