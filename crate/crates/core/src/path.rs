//! The lattice path of a two-line matrix and the hooks obtained by
//! reflecting it across the line `x + y = n`.
//!
//! Here `n` is always the entry sum `l(M)`, so everything is a function of
//! the matrix alone.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{ell, TwoLineMatrix};

/// Points from `Q` on the line `x + y = n_line` down to the origin.
///
/// Zero-length moves (a zero `d_j` or `c_j`) are kept, so the point list has
/// exactly `2s` entries for an `s`-column matrix. Use [`LatticePath::reduced`]
/// to drop repeated points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    pub points: Vec<(u64, u64)>,
    pub n_line: u64,
}

impl LatticePath {
    pub fn start(&self) -> (u64, u64) {
        self.points[0]
    }

    /// The path with consecutive duplicate points removed.
    pub fn reduced(&self) -> Vec<(u64, u64)> {
        let mut out = self.points.clone();
        out.dedup();
        out
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (x, y)) in self.reduced().iter().enumerate() {
            if i > 0 {
                f.write_str(" -> ")?;
            }
            write!(f, "({x},{y})")?;
        }
        Ok(())
    }
}

/// A partition into distinct odd parts, each at least 3.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "OddRepr", into = "OddRepr")]
pub struct OddPartition {
    parts: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct OddRepr {
    parts: Vec<u64>,
    m: u64,
}

impl TryFrom<OddRepr> for OddPartition {
    type Error = Error;

    fn try_from(r: OddRepr) -> Result<Self> {
        let p = OddPartition::new(r.parts)?;
        if p.m()? != r.m {
            return Err(Error::OutOfRange(format!("m = {} does not match parts", r.m)));
        }
        Ok(p)
    }
}

impl From<OddPartition> for OddRepr {
    fn from(p: OddPartition) -> Self {
        // Constructed partitions have a representable weight.
        let m = p.parts.iter().sum();
        OddRepr { parts: p.parts, m }
    }
}

impl OddPartition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = parts.iter().find(|&&x| x < 3 || x % 2 == 0) {
            return Err(Error::OutOfRange(format!("{bad} is not an odd part >= 3")));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::OutOfRange("parts are not strictly decreasing".into()));
        }
        let p = Self { parts };
        p.m()?;
        Ok(p)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The weight; 0 for the empty partition.
    pub fn m(&self) -> Result<u64> {
        self.parts
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .ok_or(Error::Overflow("hook sum"))
    }
}

impl fmt::Display for OddPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
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

/// `Q = (sum d_i, sum_{j<s} c_j)`, then alternately left by `d_s, ..., d_2`
/// and down by `c_{s-1}, ..., c_1`, then `(d_1, 0) -> (0, 0)`.
pub fn matrix_to_path(m: &TwoLineMatrix) -> LatticePath {
    let (top, bottom) = (m.top(), m.bottom());
    let s = m.columns();
    // prefix sums D_k = d_1 + ... + d_k and C_k = c_1 + ... + c_k
    let mut d_prefix = vec![0u64; s + 1];
    let mut c_prefix = vec![0u64; s + 1];
    for k in 0..s {
        d_prefix[k + 1] = d_prefix[k] + bottom[k];
        c_prefix[k + 1] = c_prefix[k] + top[k];
    }
    let mut points = Vec::with_capacity(2 * s);
    points.push((d_prefix[s], c_prefix[s - 1]));
    for k in (1..s).rev() {
        points.push((d_prefix[k], c_prefix[k]));
        points.push((d_prefix[k], c_prefix[k - 1]));
    }
    points.push((0, 0));
    LatticePath {
        points,
        n_line: ell(m),
    }
}

/// The `c_1 + ... + c_{s-1}` hook sizes.
///
/// Block `k` contributes `c_k` consecutive values `2(h_k - i) - 1`,
/// `i = 0..c_k`, where `h_1 = n - d_1` and `h_{k+1} = h_k - c_k - d_{k+1}`.
/// Single-column matrices give the empty partition.
pub fn hooks(m: &TwoLineMatrix) -> Result<OddPartition> {
    let (top, bottom) = (m.top(), m.bottom());
    let s = m.columns();
    let n = ell(m);
    // Block k sums to c_k (2 h_k - c_k); check the total fits before allocating.
    let mut h = n - bottom[0];
    let mut weight = 0u64;
    for k in 0..s - 1 {
        weight = h
            .checked_mul(2)
            .and_then(|twice| (twice - top[k]).checked_mul(top[k]))
            .and_then(|block| weight.checked_add(block))
            .ok_or(Error::Overflow("hook sum"))?;
        h = h - top[k] - bottom[k + 1];
    }
    let total: u64 = top[..s - 1].iter().sum();
    let capacity = usize::try_from(total).map_err(|_| Error::Overflow("hook count"))?;
    let mut parts = Vec::with_capacity(capacity);
    let mut h = n - bottom[0];
    for k in 0..s - 1 {
        for i in 0..top[k] {
            let part = (h - i)
                .checked_mul(2)
                .ok_or(Error::Overflow("hook size"))?
                - 1;
            parts.push(part);
        }
        h = h - top[k] - bottom[k + 1];
    }
    let out = OddPartition { parts };
    debug_assert_eq!(out.m(), Ok(weight));
    Ok(out)
}

/// `P(M)`: the sum of the hooks.
pub fn weight_p(m: &TwoLineMatrix) -> Result<u64> {
    hooks(m)?.m()
}
