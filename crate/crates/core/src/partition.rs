//! Unrestricted partitions of an integer.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PartitionRepr", into = "PartitionRepr")]
pub struct Partition {
    parts: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    parts: Vec<u64>,
    #[serde(default)]
    weight: Option<u64>,
}

impl TryFrom<PartitionRepr> for Partition {
    type Error = Error;

    fn try_from(repr: PartitionRepr) -> Result<Self> {
        let p = Partition::new(repr.parts)?;
        match repr.weight {
            Some(w) if w != p.weight() => Err(Error::OutOfRange(format!(
                "declared weight {w} does not match sum of parts {}",
                p.weight()
            ))),
            _ => Ok(p),
        }
    }
}

impl From<Partition> for PartitionRepr {
    fn from(p: Partition) -> Self {
        let weight = Some(p.weight());
        PartitionRepr {
            parts: p.parts,
            weight,
        }
    }
}

impl Partition {
    /// Checks the ordering and positivity of `parts`. The empty sequence is
    /// the unique partition of 0.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&x| x == 0) {
            return Err(Error::ZeroPart { index });
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing {
                index: i + 1,
                prev: parts[i],
                next: parts[i + 1],
            });
        }
        parts
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .ok_or(Error::Overflow("partition weight"))?;
        Ok(Self { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&x| x > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Every partition of `n`, in reverse-lexicographic order of parts:
/// `(5), (4,1), (3,2), (3,1,1), (2,2,1), (2,1,1,1), (1,1,1,1,1)` for `n = 5`.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    out
}

fn descend(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts_unchecked(prefix.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// `p(n)` from Euler's pentagonal-number recurrence.
///
/// Shares no code with [`enumerate_partitions`]. Fails with
/// [`Error::Overflow`] once `p(n)` leaves the `u64` range (first at n = 417).
pub fn count_partitions_oracle(n: u64) -> Result<u64> {
    let len = usize::try_from(n)
        .ok()
        .and_then(|n| n.checked_add(1))
        .ok_or(Error::Overflow("partition table size"))?;
    let mut table: Vec<u64> = Vec::with_capacity(len);
    table.push(1);
    for i in 1..len {
        let mut acc: i128 = 0;
        for k in 1usize.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let sign: i128 = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * i128::from(table[i - g1]);
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                acc += sign * i128::from(table[i - g2]);
            }
        }
        table.push(u64::try_from(acc).map_err(|_| Error::Overflow("p(n)"))?);
    }
    Ok(table[len - 1])
}
