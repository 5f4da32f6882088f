//! End-to-end checks of `p(n) = sum_{m=1}^{n^2-1} |B(m, n)| + 1`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::project_to_m0;
use crate::partition::{count_partitions_oracle, enumerate_partitions};
use crate::path::weight_p;
use crate::squared::{b_count, b_solutions, frequency, tsquared_from_matrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: u64,
    /// `p(n)` from the pentagonal-number oracle.
    pub p_oracle: u64,
    /// `sum |B(m, n)| + 1`
    pub p_theorem: u64,
    #[serde(rename = "match")]
    pub matched: bool,
    /// `m -> |B(m, n)|` for the non-zero terms, sorted by `m`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub per_m: Option<BTreeMap<u64, u64>>,
}

impl VerificationReport {
    pub fn without_per_m(mut self) -> Self {
        self.per_m = None;
        self
    }
}

/// Only `m = 0, 3 (mod 4)` can carry solutions.
fn admissible(m: u64) -> bool {
    m % 4 == 0 || m % 4 == 3
}

/// Evaluates both sides of the identity for one `n`. The sweep over `m` runs
/// on the current rayon pool.
pub fn p_via_main_theorem(n: u64) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let upper = n.checked_mul(n).ok_or(Error::Overflow("n^2"))?;
    let p_oracle = count_partitions_oracle(n)?;
    let per_m: BTreeMap<u64, u64> = (1..upper)
        .into_par_iter()
        .filter(|&m| admissible(m))
        .map(|m| (m, b_count(m, n)))
        .filter(|&(_, count)| count > 0)
        .collect();
    let p_theorem = per_m
        .values()
        .try_fold(1u64, |acc, &c| acc.checked_add(c))
        .ok_or(Error::Overflow("theorem sum"))?;
    Ok(VerificationReport {
        n,
        p_oracle,
        p_theorem,
        matched: p_oracle == p_theorem,
        per_m: Some(per_m),
    })
}

/// Reports for `n = 1..=n_max`, in order. Mismatches are reported, not raised;
/// the whole range is always scanned.
pub fn verify_range(n_max: u64) -> Result<Vec<VerificationReport>> {
    if n_max == 0 {
        return Err(Error::OutOfRange("n_max must be at least 1".into()));
    }
    (1..=n_max).into_par_iter().map(p_via_main_theorem).collect()
}

/// One partition followed to its solution tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainLink {
    pub partition: Vec<u64>,
    pub m: u64,
    pub a: u64,
    pub b: u64,
    pub tuple: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainSummary {
    pub n: u64,
    /// Partitions of `n` with at least two parts, each mapped to one element of `B`.
    pub elements: u64,
    pub links: Vec<ChainLink>,
}

/// Follows every partition of `n` with at least two parts through
/// `M0` projection, t-squared partition and canonical solution tuple, and
/// checks that the map is injective onto `union_m B(m, n)`.
pub fn structural_check(n: u64) -> Result<ChainSummary> {
    if n < 2 {
        return Err(Error::OutOfRange("n must be at least 2".into()));
    }
    let mismatch = |partition: &[u64], reason: String| Error::ChainMismatch {
        n,
        partition: partition.to_vec(),
        reason,
    };
    let mut image: BTreeSet<(u64, Vec<u64>)> = BTreeSet::new();
    let mut links = Vec::new();
    let mut b_cache: BTreeMap<u64, Vec<(u64, Vec<u64>)>> = BTreeMap::new();
    for p in enumerate_partitions(n).iter().filter(|p| p.len() >= 2) {
        let parts = p.parts();
        let m0 = project_to_m0(p)?;
        let sp = tsquared_from_matrix(&m0)?;
        let m = weight_p(&m0)?;
        if sp.m()? != m {
            return Err(mismatch(
                parts,
                format!("hook sum {m} differs from squared weight {}", sp.m()?),
            ));
        }
        let tuple = sp.to_solution();
        let members = b_cache.entry(m).or_insert_with(|| {
            b_solutions(m, n)
                .into_iter()
                .flat_map(|set| set.solutions.into_iter().map(move |t| (set.b, t)))
                .collect()
        });
        if !members.iter().any(|(b, t)| *b == sp.b() && *t == tuple) {
            return Err(mismatch(parts, format!("tuple {tuple:?} is not in B({m}, {n})")));
        }
        if !image.insert((m, tuple.clone())) {
            return Err(mismatch(parts, format!("tuple {tuple:?} for m = {m} is hit twice")));
        }
        links.push(ChainLink {
            partition: parts.to_vec(),
            m,
            a: sp.a(),
            b: sp.b(),
            tuple,
        });
    }
    let upper = n.checked_mul(n).ok_or(Error::Overflow("n^2"))?;
    let total: u64 = (1..upper).filter(|&m| admissible(m)).map(|m| b_count(m, n)).sum();
    if total != image.len() as u64 {
        return Err(Error::ChainMismatch {
            n,
            partition: Vec::new(),
            reason: format!("image has {} elements but B has {total}", image.len()),
        });
    }
    Ok(ChainSummary {
        n,
        elements: total,
        links,
    })
}

/// Every `m <= limit` outside the image of the path weight, ascending.
pub fn image_gaps(limit: u64) -> Vec<u64> {
    (1..=limit).filter(|&m| frequency(m) == 0).collect()
}
