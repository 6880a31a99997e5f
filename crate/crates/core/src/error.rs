//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by constructors, checks, and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain size must be at least 1")]
    EmptyDomain,

    #[error("element {element} is out of range for domain of size {size}")]
    ElementOutOfRange { element: usize, size: usize },

    #[error("operation table has {actual} entries, expected {expected}")]
    TableSize { expected: usize, actual: usize },

    #[error("domain sizes differ: {left} vs {right}")]
    DomainMismatch { left: usize, right: usize },

    #[error("operation is not conservative")]
    NotConservative,

    #[error("duplicate relation name `{0}`")]
    DuplicateRelation(String),

    #[error("unknown relation `{0}`")]
    UnknownRelation(String),

    #[error("variable index {var} is out of range for {num_vars} variables")]
    ScopeOutOfRange { var: usize, num_vars: usize },

    #[error("relation enumeration needs {cells} candidate cells, limit is {limit}; sample via closure_under instead")]
    RelationSpaceTooLarge { cells: usize, limit: usize },

    #[error("exhaustive operation enumeration is limited to domain size {limit}, got {size}; use sample_maltsev_conservative instead")]
    EnumerationTooLarge { size: usize, limit: usize },

    #[error("search needs a property requirement or a nonempty language; the first projection answers the empty query")]
    TrivialSearch,

    #[error("brute force budget exceeded: {assignments} assignments, limit {budget}")]
    BudgetExceeded { assignments: u128, budget: u128 },

    #[error("witness operation is not a majority operation")]
    WitnessNotMajority,

    #[error("witness operation is not a polymorphism of the language: violates `{relation}`")]
    WitnessNotPolymorphism { relation: String },

    #[error("internal error: greedy extension dead-ended at variable {var} on a path-consistent network")]
    GreedyDeadEnd { var: usize },

    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// A parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
