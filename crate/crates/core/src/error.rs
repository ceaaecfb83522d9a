use thiserror::Error;

/// Errors reported by the reduction, indexing and oracle routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum McsError {
    #[error("not a subsequence: {needle:?} does not embed into {haystack:?}")]
    NotSubsequence { needle: String, haystack: String },

    /// `input` is the 0-based position of the offending string in the input list.
    #[error("not a common supersequence: input {input} ({text:?}) is not a subsequence")]
    NotCommonSupersequence { input: usize, text: String },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("occurrence capacity exceeded for symbol {symbol:?} (capacity {capacity})")]
    CapacityExceeded { symbol: char, capacity: usize },

    #[error("stored string is inconsistent with the template: {0}")]
    Inconsistent(String),

    #[error("inputs share a non-empty common prefix of length {0}; strip it first")]
    SharedPrefix(usize),

    #[error("search space of {candidates} candidates exceeds the cap of {cap}")]
    SearchSpaceTooLarge { candidates: u128, cap: u128 },
}

pub type Result<T, E = McsError> = std::result::Result<T, E>;
