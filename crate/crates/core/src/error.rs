use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("word length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("words must have at least one bit")]
    EmptyWord,

    #[error("rotation amount {r} out of range 1..={max} for n = {n}", max = n.saturating_sub(1))]
    RotationOutOfRange { r: usize, n: usize },

    #[error("octal symbol {0} out of range 0..=7")]
    BadSymbol(u8),

    #[error("cannot parse word {input:?}: {reason}")]
    ParseWord { input: String, reason: &'static str },

    #[error("cannot parse pattern {input:?} at offset {offset}: {reason}")]
    ParsePattern {
        input: String,
        offset: usize,
        reason: &'static str,
    },

    #[error("n = {n} exceeds the enumeration limit {limit}")]
    GuardExceeded { n: usize, limit: usize },

    #[error("{0}")]
    Unsupported(&'static str),
}
