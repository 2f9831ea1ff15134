use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse root system `{0}`")]
    SpecSyntax(String),
    #[error("unknown root system family `{0}`")]
    UnknownFamily(char),
    #[error("rank {rank} is not allowed for family {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("letter {letter} at position {position} is outside 1..={rank}")]
    LetterOutOfRange {
        position: usize,
        letter: usize,
        rank: usize,
    },
    #[error("index {index} is outside {min}..={max}")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },
    #[error("malformed word at token {token}: {reason}")]
    WordSyntax { token: usize, reason: String },
    #[error("expected a vector of length {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("integer overflow while {0}")]
    Overflow(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("operation requires a type A root system, got {0}")]
    NotTypeA(String),
}

impl Error {
    pub fn is_overflow(&self) -> bool {
        matches!(self, Error::Overflow(_))
    }
}

pub(crate) fn add(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn sub(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn mul(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}
