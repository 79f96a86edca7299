use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("denominator vanishes identically at the specialization{}", fmt_at(.at))]
    PoleAtSpecialization { at: Vec<Vec<i64>> },

    #[error("order of the zero scalar is undefined")]
    ZeroInput,

    #[error("invalid enlargement: {0}")]
    InvalidEnlargement(String),

    #[error("intertwiner move s_{index} fixes {lambda:?}")]
    FixedPointMove { index: usize, lambda: Vec<i64> },

    #[error("eigenvector construction did not terminate for {0:?}")]
    NonTermination(Vec<i64>),

    #[error("exact division failed inside an operator: {0}")]
    InternalDivision(String),

    #[error("wheel condition fails: {0}")]
    WheelViolation(String),

    #[error("rewriting order violated: {0}")]
    OrderViolation(String),

    #[error("rewriting left the box: {0}")]
    BoxTooSmall(String),

    #[error("{0}")]
    Parse(String),

    #[error("cache: {0}")]
    Cache(String),
}

fn fmt_at(at: &[Vec<i64>]) -> String {
    if at.is_empty() {
        String::new()
    } else {
        format!(" (terms {at:?})")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
