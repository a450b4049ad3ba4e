//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by matrix and contraction operations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("line contraction index {index} out of range for {lines} lines")]
    LineOutOfRange { index: usize, lines: usize },
    #[error("column contraction index {index} out of range for {columns} columns")]
    ColumnOutOfRange { index: usize, columns: usize },
    #[error("entry at line {line}, column {column} is {value}, not 0/1")]
    NotBinary { line: usize, column: usize, value: u32 },
    #[error("contraction is not valid: two ones merge into one cell")]
    InvalidContraction,
    #[error("line indices must be strictly increasing")]
    UnsortedLines,
    #[error("column indices must be strictly increasing")]
    UnsortedColumns,
    #[error("matrix must have at least one line and one column")]
    EmptyMatrix,
    #[error("row {line} has {found} entries, expected {expected}")]
    RaggedRows { line: usize, expected: usize, found: usize },
}

/// Refusals from solvers guarded against accidental exponential runs.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(
        "instance is {lines}x{columns}; enumeration is limited to p + q <= {limit} \
         (force to override)"
    )]
    TooLarge { lines: usize, columns: usize, limit: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Refusals and failures in the integer-programming layer.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum IlpError {
    #[error(
        "assignment enumeration over {decisions} binary decisions exceeds the \
         limit of {limit}"
    )]
    TooManyAssignments { decisions: usize, limit: usize },
}

/// Errors from instance construction and text formats.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum InstanceError {
    #[error("probability {0} is not within [0, 1]")]
    InvalidProbability(f64),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Text format errors, with 1-based line numbers into the input.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header \"p q\" with two positive integers")]
    BadHeader { line: usize },
    #[error("line {line}: row has {found} characters, expected {expected}")]
    DimensionMismatch { line: usize, expected: usize, found: usize },
    #[error("line {line}: illegal character {found:?} at column {column}")]
    IllegalCharacter { line: usize, column: usize, found: char },
    #[error("line {line}: input ends before all {expected} rows were read")]
    Truncated { line: usize, expected: usize },
    #[error("line {line}: unexpected content after the matrix")]
    TrailingContent { line: usize },
    #[error("line {line}: expected graph header \"p edge <vertices> <edges>\"")]
    BadGraphHeader { line: usize },
    #[error("line {line}: expected edge line \"e <u> <v>\"")]
    BadEdge { line: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range (graph has {vertices} vertices)")]
    VertexOutOfRange { line: usize, vertex: usize, vertices: usize },
    #[error("graph header declares {declared} edges but {found} were read")]
    EdgeCountMismatch { declared: usize, found: usize },
}
