use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// The CLI maps each variant onto an exit code through [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: {0}")]
    Pole(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("series does not terminate within {0} terms")]
    NonTerminating(usize),
    #[error("term budget exceeded: {needed} terms requested, budget is {budget}")]
    Budget { needed: u128, budget: u128 },
    #[error("result does not clear to a Laurent polynomial: {0}")]
    NotLaurent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// 2 for usage-type failures, 3 for arithmetic ones.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Budget { .. } | Error::Parse(_) => 2,
            Error::DivisionByZero
            | Error::Pole(_)
            | Error::NonTerminating(_)
            | Error::NotLaurent(_) => 3,
        }
    }

    pub fn is_pole(&self) -> bool {
        matches!(self, Error::Pole(_) | Error::DivisionByZero)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
