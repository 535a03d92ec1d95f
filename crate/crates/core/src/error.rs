use thiserror::Error;

use crate::coeff::RingSpec;

/// Errors raised across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingSpec, right: RingSpec },
    #[error("{value} is not invertible over {ring}")]
    NotInvertible { value: String, ring: RingSpec },
    #[error("{value} is not an element of {ring}")]
    NotInRing { value: String, ring: RingSpec },
    #[error("{0} is not a prime modulus")]
    InvalidModulus(u64),
    #[error("{0} is not a field")]
    NotAField(RingSpec),
    #[error("operation requires the integers, got {0}")]
    RequiresIntegers(RingSpec),
    #[error("malformed scalar literal {0:?}")]
    ScalarSyntax(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("{name} expects {expected} arguments, got {got}")]
    Arity { name: String, expected: String, got: usize },
    #[error("polynomial is not multidegree-homogeneous")]
    Inhomogeneous,
    #[error("polynomial is not a commutator of two words")]
    MalformedCommutator,
    #[error("generator index {letter} out of range for {count} generators")]
    LetterOutOfRange { letter: usize, count: usize },
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("unit axiom fails: {0}")]
    UnitAxiom(String),
    #[error("associativity fails on basis triple ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("unknown case {0:?}")]
    UnknownCase(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
