use thiserror::Error;

use crate::symmetry::ActionViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex index out of range in entry ({i}, {j}) for n = {n}")]
    IndexOutOfRange { i: i64, j: i64, n: usize },

    #[error("negative weight {w} on pair ({i}, {j})")]
    NegativeWeight { i: usize, j: usize, w: i64 },

    #[error("weight {w} on pair ({i}, {j}) exceeds the input bound {max}")]
    WeightTooLarge {
        i: usize,
        j: usize,
        w: i64,
        max: u64,
    },

    #[error("pair ({i}, {j}) is listed more than once")]
    DuplicatePair { i: usize, j: usize },

    #[error("weight matrix is not symmetric at ({i}, {j})")]
    Asymmetric { i: usize, j: usize },

    #[error("matrix is not square ({rows} rows, row {row} has {len} entries)")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("{p} is not an odd prime")]
    InvalidPrime { p: u64 },

    #[error("operands live in different cyclotomic rings (p = {left} vs p = {right})")]
    MismatchedOrder { left: u32, right: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index {index} out of range (limit {limit})")]
    OutOfRange { index: usize, limit: usize },

    #[error("non-exact division: {0}")]
    InexactDivision(String),

    #[error("invalid action: {}", fmt_violations(.0))]
    InvalidAction(Vec<ActionViolation>),

    #[error(
        "graph is disconnected ({components} components); the check requires a connected graph"
    )]
    Disconnected { components: usize },

    #[error("{what} is {size}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
}

impl Error {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

fn fmt_violations(v: &[ActionViolation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
