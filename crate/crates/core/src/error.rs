//! Crate-wide error types.

use std::fmt;

/// A syntax or consistency error in an input document, with its position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line of the offending token.
    pub line: usize,
    /// 1-based column of the offending token.
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Which enumeration budget a computation ran into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetKind {
    /// Scans over all three-valued interpretations (3^n).
    InterpretationScan,
    /// Scans over all two-valued states (2^n).
    StateScan,
}

impl fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BudgetKind::InterpretationScan => write!(f, "interpretation-scan"),
            BudgetKind::StateScan => write!(f, "state-scan"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    /// A formula was evaluated against a model or assignment it does not
    /// belong to.
    #[error("formula references atom index {index}, but the assignment covers {len} atoms")]
    ForeignAtom { index: usize, len: usize },

    #[error("assignment covers {found} atoms, model has {expected}")]
    AtomCountMismatch { expected: usize, found: usize },

    #[error("{atoms} atoms exceed the {kind} budget of {limit}")]
    BudgetExceeded {
        kind: BudgetKind,
        atoms: usize,
        limit: usize,
    },

    #[error("cycle enumeration exceeded the cap of {0} simple cycles")]
    CycleCapExceeded(usize),

    #[error(
        "function of `{atom}` is not sign-definite: `{parent}` is neither supporting nor attacking"
    )]
    NotSignDefinite { atom: String, parent: String },

    /// The reduct is only defined on two-valued models.
    #[error("interpretation is not a two-valued model of the framework")]
    NotATwoValuedModel,

    #[error("link ({from}, {to}) names an atom outside the framework")]
    DanglingLink { from: String, to: String },

    #[error("acceptance condition of `{atom}` uses `{parent}`, which is not covered by a link")]
    MissingLink { atom: String, parent: String },
}

pub type Result<T> = std::result::Result<T, Error>;
