use thiserror::Error;

use crate::shape::Cell;

/// Errors raised when validating partitions, diagrams and cells.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("partition must have at least one part")]
    EmptyPartition,
    #[error("part {0} is not positive")]
    NonPositivePart(usize),
    #[error("parts must be strictly decreasing")]
    NotStrictlyDecreasing,
    #[error("parts must be weakly decreasing")]
    NotWeaklyDecreasing,
    #[error("cell {0} is not in the diagram")]
    CellNotInDiagram(Cell),
    #[error("hook product does not divide n! (internal counting bug)")]
    NonIntegerResult,
}

/// Errors raised by tabloid construction and path comparisons.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TabloidError {
    #[error("expected {expected} rows, found {found}")]
    WrongRowCount { expected: usize, found: usize },
    #[error("row {row} must have {expected} entries, found {found}")]
    WrongRowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entries are not a permutation of 1..=n")]
    NotAPermutation,
    #[error("value {0} is not an entry of the tabloid")]
    ValueOutOfRange(usize),
    #[error("backward paths of {e1} and {e2} give an inconsistent comparison")]
    InconsistentPaths { e1: usize, e2: usize },
}

/// Errors raised by hook-tabloid rewrites and candidate classification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HookError {
    #[error("pointer {pointer} at {cell} matches no rewrite rule")]
    UnhandledPointerForm { cell: Cell, pointer: Cell },
    #[error("rewritten pointer {pointer} for {cell} leaves the diagram")]
    PointerLeavesDiagram { cell: Cell, pointer: Cell },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("cells {first} and {second} both point at entry {value}")]
    MultiplePointers {
        value: usize,
        first: Cell,
        second: Cell,
    },
}

/// Errors raised while running the split or merge pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgoError {
    #[error(transparent)]
    Hook(#[from] HookError),
    #[error(transparent)]
    Tabloid(#[from] TabloidError),
    #[error("no unoccupied diagonal cell in rows {lo}..={hi}")]
    NoUnoccupiedDiagonal { lo: usize, hi: usize },
    #[error("no horizontal candidate available while clearing column {col}")]
    NoHorizontalCandidate { col: usize },
    #[error("no case of the candidate loop matched for entry {entry}")]
    NoCaseMatched { entry: usize },
    #[error("state corrupted: {0}")]
    CorruptState(String),
}

/// Errors raised by the sampler.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SamplerError {
    #[error("tableau class count {classes} exceeds the tabulation guard {limit}")]
    TooManyClasses { classes: u64, limit: u64 },
    #[error(transparent)]
    Tabloid(#[from] TabloidError),
}

/// Errors raised by the brute-force oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error(transparent)]
    Algo(#[from] AlgoError),
}
