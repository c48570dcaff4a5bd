use thiserror::Error;

/// Errors reported by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A truth table was given an output sequence whose length is not `2^arity`.
    #[error("malformed table: arity {arity} needs {expected} output bits, got {got}")]
    MalformedTable {
        /// Declared number of variables.
        arity: usize,
        /// Required number of output bits, `2^arity`.
        expected: usize,
        /// Number of output bits actually supplied.
        got: usize,
    },
    /// Functions must have between 1 and 24 variables.
    #[error("unsupported arity {0}: must be between 1 and 24")]
    UnsupportedArity(usize),
    /// Two values that must share an arity do not.
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch {
        /// The arity required by the receiving value.
        expected: usize,
        /// The arity actually supplied.
        got: usize,
    },
    /// A chain was built from a sequence that is empty or not strictly increasing.
    #[error("invalid chain: vectors must strictly increase (violated at step {step})")]
    InvalidChain {
        /// Index of the offending step; 0 means the sequence was empty.
        step: usize,
    },
    /// The operation requires a monotone function.
    #[error("function is not monotone")]
    NotMonotone,
    /// A formula referenced a variable outside the declared arity.
    #[error("variable x{index} is out of range for arity {arity}")]
    VariableOutOfRange {
        /// 1-based variable index found in the formula.
        index: usize,
        /// Declared number of variables.
        arity: usize,
    },
    /// An exhaustive oracle was asked for more than it can enumerate.
    #[error("oracle limit: {0}")]
    OracleLimit(String),
    /// Formula text failed to parse.
    #[error("syntax error at position {position}: {message}")]
    Syntax {
        /// 1-based byte position of the offending input.
        position: usize,
        /// What the parser expected or found.
        message: String,
    },
    /// A hexadecimal truth-table string failed to parse.
    #[error("invalid hex: {0}")]
    InvalidHex(String),
    /// A truth-table text block failed to parse.
    #[error("invalid table text: {0}")]
    InvalidTableText(String),
    /// Sweeps enumerate every function of the given arity and stay at desk scale.
    #[error("sweep supports 1 to 4 variables, got {0}")]
    SweepArity(usize),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
