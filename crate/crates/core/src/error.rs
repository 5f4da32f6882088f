use thiserror::Error;

use crate::matrix::Violation;
use crate::squared::Infeasible;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition is empty")]
    EmptyPartition,

    #[error("part {index} is zero")]
    ZeroPart { index: usize },

    #[error("parts are not weakly decreasing at position {index} ({prev} < {next})")]
    NotWeaklyDecreasing { index: usize, prev: u64, next: u64 },

    #[error("invalid two-line matrix: {}", join_violations(.0))]
    InvalidMatrix(Vec<Violation>),

    #[error("a single-part partition has no image in M0")]
    SinglePart,

    #[error("matrix is not in M0 (d1 = {d1})")]
    NotInM0 { d1: u64 },

    #[error("single-column matrix has no t-squared partition")]
    SingleColumn,

    #[error("entry sum {ell} exceeds n = {n}")]
    EllExceedsN { ell: u64, n: u64 },

    #[error("system (a = {a}, b = {b}) has no solutions: {reason}")]
    Infeasible { a: u64, b: u64, reason: Infeasible },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("chain check failed for n = {n} at partition {partition:?}: {reason}")]
    ChainMismatch {
        n: u64,
        partition: Vec<u64>,
        reason: String,
    },
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
