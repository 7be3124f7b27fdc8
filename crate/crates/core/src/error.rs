use thiserror::Error;

/// Errors raised by the engine. Each variant carries a stable short code
/// (`E_BASIS`, `E_INDEX`, ...) that the command line prints verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("E_BASIS: {0} is not a basis element of this presentation")]
    Basis(String),

    #[error("E_INDEX: {0}")]
    Index(String),

    #[error("E_MISMATCH: {0}")]
    Mismatch(String),

    #[error("E_SIGMA: {0}")]
    Sigma(String),

    #[error("E_CELL: {0}")]
    Cell(String),

    #[error("E_GROUP: {0}")]
    Group(String),

    #[error("E_UNIT: {0}")]
    Unit(String),

    #[error("E_NAME: unknown catalog entry `{0}`")]
    Name(String),

    #[error("E_PARSE: line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("E_RANGE: {0}")]
    Range(String),

    #[error("E_GRADING: {0}")]
    Grading(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Basis(_) => "E_BASIS",
            Error::Index(_) => "E_INDEX",
            Error::Mismatch(_) => "E_MISMATCH",
            Error::Sigma(_) => "E_SIGMA",
            Error::Cell(_) => "E_CELL",
            Error::Group(_) => "E_GROUP",
            Error::Unit(_) => "E_UNIT",
            Error::Name(_) => "E_NAME",
            Error::Parse { .. } => "E_PARSE",
            Error::Range(_) => "E_RANGE",
            Error::Grading(_) => "E_GRADING",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
