//! t-squared partitions and the systems
//!
//! ```text
//! b = x_1 + ... + x_b
//! a = x_1^2 + ... + x_b^2
//! ```
//!
//! A t-squared partition of `m` is `m = b^2 + 2(c_1^2 + ... + c_t^2)` with
//! `b = c_1 + ... + c_t` and every `c_i >= 1`. Sorting the `c_i` and padding
//! with zeros to length `b` gives a canonical solution of the system for
//! `(a, b)`, and the `c_i` are also the non-zero top-row entries of a unique
//! matrix in `M0`. The frequency `f(m)` counts these objects.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{ell, TwoLineMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquaredPartition {
    components: Vec<u64>,
}

impl SquaredPartition {
    pub fn new(components: Vec<u64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::OutOfRange("a t-squared partition needs t >= 1".into()));
        }
        if let Some(index) = components.iter().position(|&c| c == 0) {
            return Err(Error::ZeroPart { index });
        }
        if let Some(i) = components.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing {
                index: i + 1,
                prev: components[i],
                next: components[i + 1],
            });
        }
        let sp = Self { components };
        sp.m()?;
        Ok(sp)
    }

    pub fn components(&self) -> &[u64] {
        &self.components
    }

    pub fn t(&self) -> usize {
        self.components.len()
    }

    /// `c_1 + ... + c_t`
    pub fn b(&self) -> u64 {
        self.components.iter().sum()
    }

    /// `c_1^2 + ... + c_t^2`
    pub fn a(&self) -> u64 {
        self.components.iter().map(|c| c * c).sum()
    }

    /// `b^2 + 2a`
    pub fn m(&self) -> Result<u64> {
        let overflow = || Error::Overflow("t-squared weight");
        let b = self
            .components
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .ok_or_else(overflow)?;
        let a = self
            .components
            .iter()
            .try_fold(0u64, |acc, &c| c.checked_mul(c).and_then(|sq| acc.checked_add(sq)))
            .ok_or_else(overflow)?;
        b.checked_mul(b)
            .and_then(|b2| a.checked_mul(2).and_then(|a2| b2.checked_add(a2)))
            .ok_or_else(overflow)
    }

    /// The canonical solution tuple: components padded with zeros to length `b`.
    pub fn to_solution(&self) -> Vec<u64> {
        let mut tuple = self.components.clone();
        tuple.resize(self.b() as usize, 0);
        tuple
    }

    /// The non-zero prefix of a canonical solution tuple.
    pub fn from_solution(tuple: &[u64]) -> Result<Self> {
        let t = tuple.iter().take_while(|&&x| x > 0).count();
        if tuple[t..].iter().any(|&x| x > 0) {
            return Err(Error::OutOfRange("solution tuple is not weakly decreasing".into()));
        }
        Self::new(tuple[..t].to_vec())
    }
}

impl fmt::Display for SquaredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |sep: &str, sq: bool| {
            self.components
                .iter()
                .map(|c| if sq { format!("{c}²") } else { c.to_string() })
                .collect::<Vec<_>>()
                .join(sep)
        };
        match self.m() {
            Ok(m) => write!(f, "{m} = ({})² + 2({})", join("+", false), join("+", true)),
            Err(_) => write!(f, "({})² + 2({})", join("+", false), join("+", true)),
        }
    }
}

/// Canonical (weakly decreasing, zero-padded to length `b`) solutions of the
/// system for one `(a, b)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemSolutionSet {
    pub a: u64,
    pub b: u64,
    pub solutions: Vec<Vec<u64>>,
}

impl SystemSolutionSet {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    /// `l(M) = b + c_1` for the `M0` matrix of each solution.
    pub fn ell_of(&self, tuple: &[u64]) -> u64 {
        self.b + tuple.first().copied().unwrap_or(0)
    }
}

/// Why a system provably has no non-negative solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Infeasible {
    /// `a` or `b` is zero.
    ZeroArgument,
    /// `x^2 = x (mod 2)` forces `a = b (mod 2)`.
    Parity,
    /// `x^2 >= x` on non-negative integers forces `a >= b`.
    SquaresBelowSum,
    /// `(x_1 + ... + x_b)^2 >= x_1^2 + ... + x_b^2` forces `a <= b^2`.
    SquaresAboveSumSquared,
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Infeasible::ZeroArgument => "a and b must be positive",
            Infeasible::Parity => "a and b differ in parity, but x^2 = x (mod 2)",
            Infeasible::SquaresBelowSum => "a < b, but x^2 >= x for every non-negative x",
            Infeasible::SquaresAboveSumSquared => "a > b^2, but a sum of squares never exceeds the square of the sum",
        })
    }
}

/// The components of an `M0` matrix: its top row without the trailing zero.
pub fn tsquared_from_matrix(m: &TwoLineMatrix) -> Result<SquaredPartition> {
    if !m.is_in_m0() {
        return Err(Error::NotInM0 { d1: m.d1() });
    }
    if m.columns() < 2 {
        return Err(Error::SingleColumn);
    }
    SquaredPartition::new(m.top()[..m.columns() - 1].to_vec())
}

/// Top row `(c_1, ..., c_t, 0)`, bottom row `(0, c_1 - c_2, ..., c_{t-1} - c_t, c_t)`.
pub fn matrix_from_tsquared(sp: &SquaredPartition) -> TwoLineMatrix {
    let c = sp.components();
    let t = c.len();
    let mut top = c.to_vec();
    top.push(0);
    let mut bottom = Vec::with_capacity(t + 1);
    bottom.push(0);
    for j in 0..t {
        bottom.push(c[j] - c.get(j + 1).copied().unwrap_or(0));
    }
    let m = TwoLineMatrix::from_rows_unchecked(top, bottom);
    debug_assert_eq!(ell(&m), sp.b() + c[0]);
    m
}

/// Every `(a, b)` with `m = b^2 + 2a`, `a = b (mod 2)` and `b^2 >= a >= b`,
/// by increasing `b`. Pairs outside these bounds have no solutions.
pub fn decompositions(m: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut b = 1u64;
    while let Some(b2) = b.checked_mul(b).filter(|&b2| b2 < m) {
        let rest = m - b2;
        if rest % 2 == 0 {
            let a = rest / 2;
            if a % 2 == b % 2 && a >= b && a <= b2 {
                out.push((a, b));
            }
        }
        b += 1;
    }
    out
}

fn check_system(a: u64, b: u64) -> std::result::Result<(), Infeasible> {
    if a == 0 || b == 0 {
        Err(Infeasible::ZeroArgument)
    } else if a % 2 != b % 2 {
        Err(Infeasible::Parity)
    } else if a < b {
        Err(Infeasible::SquaresBelowSum)
    } else if b.checked_mul(b).map_or(false, |b2| a > b2) {
        Err(Infeasible::SquaresAboveSumSquared)
    } else {
        Ok(())
    }
}

/// All canonical solutions for `(a, b)`, by depth-first search over weakly
/// decreasing prefixes. Branches try larger values first.
pub fn solve_system(a: u64, b: u64) -> Result<SystemSolutionSet> {
    check_system(a, b).map_err(|reason| Error::Infeasible { a, b, reason })?;
    let mut search = Search {
        len: usize::try_from(b).map_err(|_| Error::Overflow("tuple length"))?,
        prefix: Vec::new(),
        solutions: Vec::new(),
    };
    search.descend(b, a, b);
    Ok(SystemSolutionSet {
        a,
        b,
        solutions: search.solutions,
    })
}

struct Search {
    len: usize,
    prefix: Vec<u64>,
    solutions: Vec<Vec<u64>>,
}

impl Search {
    fn descend(&mut self, sum: u64, squares: u64, max: u64) {
        if sum == 0 {
            if squares == 0 {
                let mut tuple = self.prefix.clone();
                tuple.resize(self.len, 0);
                self.solutions.push(tuple);
            }
            return;
        }
        let slots = (self.len - self.prefix.len()) as u64;
        let top = max.min(sum).min(squares.isqrt());
        for v in (1..=top).rev() {
            let rest_sum = sum - v;
            let rest_sq = squares - v * v;
            if !suffix_feasible(rest_sum, rest_sq, v, slots - 1) {
                continue;
            }
            self.prefix.push(v);
            self.descend(rest_sum, rest_sq, v);
            self.prefix.pop();
        }
    }
}

/// Can `slots` values in `0..=max` have sum `sum` and sum of squares `squares`?
/// Only necessary conditions are tested; the search settles the rest.
fn suffix_feasible(sum: u64, squares: u64, max: u64, slots: u64) -> bool {
    if sum == 0 {
        return squares == 0;
    }
    if slots == 0 || squares < sum || (squares - sum) % 2 != 0 {
        return false;
    }
    // x <= max gives x^2 <= max * x
    if u128::from(squares) > u128::from(max) * u128::from(sum) {
        return false;
    }
    // Cauchy-Schwarz over the (at most min(slots, sum)) non-zero entries
    let nonzero = u128::from(slots.min(sum));
    u128::from(sum) * u128::from(sum) <= nonzero * u128::from(squares)
}

/// `A(m)`: solution sets for every decomposition of `m`, omitting empty ones.
pub fn all_solutions(m: u64) -> Vec<SystemSolutionSet> {
    decompositions(m)
        .into_iter()
        .filter_map(|(a, b)| solve_system(a, b).ok())
        .filter(|set| !set.is_empty())
        .collect()
}

/// `f(m)`, the number of `M0` matrices with path weight `m`.
pub fn frequency(m: u64) -> u64 {
    all_solutions(m).iter().map(|s| s.len() as u64).sum()
}

pub fn admits_tsquared(m: u64) -> bool {
    frequency(m) >= 1
}

/// `B(m, n)`: the solutions whose matrix has entry sum `b + c_1 <= n`.
pub fn b_solutions(m: u64, n: u64) -> Vec<SystemSolutionSet> {
    all_solutions(m)
        .into_iter()
        .filter_map(|mut set| {
            let b = set.b;
            set.solutions.retain(|t| b + t[0] <= n);
            (!set.is_empty()).then_some(set)
        })
        .collect()
}

pub fn b_count(m: u64, n: u64) -> u64 {
    b_solutions(m, n).iter().map(|s| s.len() as u64).sum()
}
