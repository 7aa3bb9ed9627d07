//! Workbench for morphic sequences.
//!
//! Builds infinite words as fixed points of free-monoid morphisms (optionally
//! followed by a coding), analyzes their combinatorial structure, and places
//! them in a ten-property classification lattice.

pub mod analyze;
pub mod corpus;
pub mod dsl;
pub mod generate;
pub mod morphism;
pub mod taxonomy;
pub mod words;

use thiserror::Error;

pub use morphism::{Coding, IncidenceMatrix, Morphism, ShapeReport};
pub use words::{base_k_value, occurrences, Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty alphabet")]
    EmptyAlphabet,
    #[error("invalid letter token {token:?}: {reason}")]
    BadLetter { token: String, reason: String },
    #[error("unknown letter {token:?}")]
    UnknownLetter { token: String },
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("budget exceeded: needed {needed} symbols, budget is {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("morphism is not prolongable on {letter:?}: {reason}")]
    NotProlongable { letter: String, reason: String },
    #[error("letter {token:?} is not a base-{base} digit")]
    NotADigit { token: String, base: u32 },
    #[error("n_max {n_max} too large for word of length {len} (need n_max <= len/2)")]
    WindowTooLarge { n_max: usize, len: usize },
    #[error("range [{start}, {start}+{step}*{count}) runs past word of length {len}")]
    RangeOutOfWord {
        start: usize,
        step: usize,
        count: usize,
        len: usize,
    },
    #[error("morphism is not primitive; letter frequencies need a primitive incidence matrix")]
    NotPrimitive,
    #[error("eigenvector iteration did not converge within {0} rounds")]
    EigenDivergence(u32),
    #[error("decimal precision exhausted: floor(n*alpha+rho) is ambiguous at n={n}")]
    PrecisionExhausted { n: usize },
    #[error("invalid constant: {0}")]
    BadConstant(String),
    #[error("letter values missing for {token:?}")]
    MissingValue { token: String },
    #[error("parse error at line {line}, col {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
