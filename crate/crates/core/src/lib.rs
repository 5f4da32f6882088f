//! Partitions, two-line matrices, lattice paths and t-squared partitions.
//!
//! The crate walks the chain
//!
//! ```text
//! partition of n  ->  two-line matrix  ->  lattice path  ->  hooks (distinct odd parts >= 3)
//!                                                         ->  t-squared partition of m
//!                                                         ->  solution of  b = sum x_i, a = sum x_i^2
//! ```
//!
//! and checks, by exhaustive enumeration, the identity
//! `p(n) = sum_{m=1}^{n^2-1} |B(m, n)| + 1`, where `B(m, n)` is the set of
//! canonical solutions for `m` whose matrix has entry sum at most `n`.
//!
//! Module map:
//!
//! - [`partition`]: generation of partitions and an independent `p(n)` counter.
//! - [`matrix`]: the partition <-> two-line matrix codec and the `M0` projection.
//! - [`path`]: lattice paths, hooks and the path weight `P(M)`.
//! - [`squared`]: t-squared partitions, the two-equation systems and frequencies.
//! - [`identity`]: end-to-end verification reports.
//! - [`cache`]: the on-disk frequency cache used by the CLI.
//! - [`cli`]: argument parsing and dispatch for the `partition-lab` binary.

pub mod cache;
pub mod cli;
pub mod error;
pub mod identity;
pub mod matrix;
pub mod partition;
pub mod path;
pub mod squared;

pub use error::{Error, Result};
pub use identity::{
    image_gaps, p_via_main_theorem, structural_check, verify_range, ChainLink, ChainSummary,
    VerificationReport,
};
pub use matrix::{
    ell, lift_from_m0, matrix_to_partition, partition_to_matrix, project_to_m0, validate,
    RawMatrix, Row, TwoLineMatrix, Violation,
};
pub use partition::{count_partitions_oracle, enumerate_partitions, Partition};
pub use path::{hooks, matrix_to_path, weight_p, LatticePath, OddPartition};
pub use squared::{
    admits_tsquared, all_solutions, b_count, b_solutions, decompositions, frequency,
    matrix_from_tsquared, solve_system, tsquared_from_matrix, Infeasible, SquaredPartition,
    SystemSolutionSet,
};
