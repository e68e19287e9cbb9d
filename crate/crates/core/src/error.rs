use thiserror::Error;

/// Errors produced by validation, parsing, and enumeration limits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..={n}: value {value} at position {index} is out of range")]
    ValueOutOfRange { n: usize, index: usize, value: u32 },

    #[error("not a permutation of 1..={n}: value {value} at position {index} is a duplicate")]
    DuplicateValue { n: usize, index: usize, value: u32 },

    #[error("duplicate letter {letter} at position {index}")]
    DuplicateLetter { index: usize, letter: u32 },

    #[error("cannot parse permutation {text:?}: {reason}")]
    ParsePermutation { text: String, reason: String },

    #[error("cannot parse mesh pattern at byte {offset}: {reason}")]
    ParsePattern { offset: usize, reason: String },

    #[error("box ({a},{b}) out of range for pattern of length {k}")]
    BoxOutOfRange { a: u8, b: u8, k: usize },

    #[error("duplicate box ({a},{b})")]
    DuplicateBox { a: u8, b: u8 },

    #[error("unknown pattern name {0:?}")]
    UnknownPatternName(String),

    #[error("length {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("invalid enumeration cap {0:?} (expected a nonnegative integer)")]
    InvalidCap(String),

    #[error("factorial of {n} does not fit in 64 bits")]
    FactorialOverflow { n: usize },

    #[error("rank {rank} out of range for length {n} (must be < {n}!)")]
    RankOutOfRange { n: usize, rank: u64 },

    #[error("antirecord rank {k} out of range 1..={l}")]
    AntirecordRankOutOfRange { k: usize, l: usize },

    #[error("gap counting needs a length-2 pattern on word 21 with box (2,0) shaded, got {pattern}")]
    UnsupportedGapPattern { pattern: String },

    #[error("series division requires a divisor with constant term 1")]
    NonUnitConstantTerm,

    #[error("statistic tuples have different arities: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("unknown statistic kind {0:?}")]
    UnknownStatistic(String),

    #[error("unknown symmetry {0:?} (expected reverse, complement, or inverse)")]
    UnknownSymmetry(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}
