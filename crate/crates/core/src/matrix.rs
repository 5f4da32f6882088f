//! Two-line matrices.
//!
//! A partition `l_1 >= ... >= l_s` of `n` is stored as a `2 x s` matrix
//!
//! ```text
//! c_1 c_2 ... c_s
//! d_1 d_2 ... d_s
//! ```
//!
//! with non-negative entries, `c_s = 0`, `d_s != 0` and
//! `c_j = c_{j+1} + d_{j+1}` for `j < s`. Column `j` sums to part `l_j`, so
//! the entry sum is `n`. The rows are kept as two parallel vectors because
//! every constraint is a recurrence along a row.
//!
//! `M0` is the subset with `d_1 = 0`; its members with entry sum at most `n`
//! are in bijection with the partitions of `n` into at least two parts
//! ([`project_to_m0`] / [`lift_from_m0`]).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Row {
    Top,
    Bottom,
}

/// One broken matrix constraint. Column indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    RowLengthMismatch { top: usize, bottom: usize },
    NegativeEntry { row: Row, column: usize, value: i64 },
    /// `c_s != 0`
    LastTopNonZero { column: usize, value: i64 },
    /// `d_s == 0`
    LastBottomZero { column: usize },
    /// `c_j != c_{j+1} + d_{j+1}`
    Recurrence { column: usize, top: i64, expected: i128 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::Empty => f.write_str("matrix has no columns"),
            Violation::RowLengthMismatch { top, bottom } => {
                write!(f, "rows differ in length (top {top}, bottom {bottom})")
            }
            Violation::NegativeEntry { row, column, value } => {
                let r = match row {
                    Row::Top => 'c',
                    Row::Bottom => 'd',
                };
                write!(f, "{r}_{column} = {value} is negative")
            }
            Violation::LastTopNonZero { column, value } => {
                write!(f, "c_s must be 0 (c_{column} = {value})")
            }
            Violation::LastBottomZero { column } => {
                write!(f, "d_s must be non-zero (d_{column} = 0)")
            }
            Violation::Recurrence {
                column,
                top,
                expected,
            } => write!(
                f,
                "c_{column} != c_{next} + d_{next} ({top} != {expected})",
                next = column + 1
            ),
        }
    }
}

/// An unchecked two-row array, as read from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawMatrix {
    pub top: Vec<i64>,
    pub bottom: Vec<i64>,
}

impl RawMatrix {
    pub fn new(top: Vec<i64>, bottom: Vec<i64>) -> Self {
        Self { top, bottom }
    }
}

/// Checks every constraint and reports all of the broken ones.
pub fn validate(raw: &RawMatrix) -> std::result::Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    let (top, bottom) = (&raw.top, &raw.bottom);
    if top.len() != bottom.len() {
        out.push(Violation::RowLengthMismatch {
            top: top.len(),
            bottom: bottom.len(),
        });
        return Err(out);
    }
    let s = top.len();
    if s == 0 {
        return Err(vec![Violation::Empty]);
    }
    for (row, values) in [(Row::Top, top), (Row::Bottom, bottom)] {
        for (i, &value) in values.iter().enumerate() {
            if value < 0 {
                out.push(Violation::NegativeEntry {
                    row,
                    column: i + 1,
                    value,
                });
            }
        }
    }
    if top[s - 1] != 0 {
        out.push(Violation::LastTopNonZero {
            column: s,
            value: top[s - 1],
        });
    }
    if bottom[s - 1] == 0 {
        out.push(Violation::LastBottomZero { column: s });
    }
    for j in 0..s - 1 {
        let expected = i128::from(top[j + 1]) + i128::from(bottom[j + 1]);
        if i128::from(top[j]) != expected {
            out.push(Violation::Recurrence {
                column: j + 1,
                top: top[j],
                expected,
            });
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// A two-line matrix that satisfies all constraints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct TwoLineMatrix {
    top: Vec<u64>,
    bottom: Vec<u64>,
}

impl TryFrom<RawMatrix> for TwoLineMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        validate(&raw).map_err(Error::InvalidMatrix)?;
        let m = Self {
            top: raw.top.into_iter().map(|x| x as u64).collect(),
            bottom: raw.bottom.into_iter().map(|x| x as u64).collect(),
        };
        m.checked_entry_sum()?;
        Ok(m)
    }
}

impl From<TwoLineMatrix> for RawMatrix {
    fn from(m: TwoLineMatrix) -> Self {
        // Entries are bounded by the entry sum, which fits a partition weight.
        RawMatrix {
            top: m.top.into_iter().map(|x| x as i64).collect(),
            bottom: m.bottom.into_iter().map(|x| x as i64).collect(),
        }
    }
}

impl TwoLineMatrix {
    pub fn new(top: Vec<u64>, bottom: Vec<u64>) -> Result<Self> {
        let to_i64 = |v: &[u64]| -> Result<Vec<i64>> {
            v.iter()
                .map(|&x| i64::try_from(x).map_err(|_| Error::Overflow("matrix entry")))
                .collect()
        };
        let raw = RawMatrix::new(to_i64(&top)?, to_i64(&bottom)?);
        validate(&raw).map_err(Error::InvalidMatrix)?;
        let m = Self { top, bottom };
        m.checked_entry_sum()?;
        Ok(m)
    }

    pub(crate) fn from_rows_unchecked(top: Vec<u64>, bottom: Vec<u64>) -> Self {
        debug_assert!(
            validate(&RawMatrix::new(
                top.iter().map(|&x| x as i64).collect(),
                bottom.iter().map(|&x| x as i64).collect()
            ))
            .is_ok(),
            "{top:?} / {bottom:?}"
        );
        Self { top, bottom }
    }

    /// `c_1, ..., c_s`
    pub fn top(&self) -> &[u64] {
        &self.top
    }

    /// `d_1, ..., d_s`
    pub fn bottom(&self) -> &[u64] {
        &self.bottom
    }

    /// Number of columns `s`, equal to the number of parts.
    pub fn columns(&self) -> usize {
        self.top.len()
    }

    pub fn d1(&self) -> u64 {
        self.bottom[0]
    }

    pub fn is_in_m0(&self) -> bool {
        self.d1() == 0
    }

    /// The same matrix with `d_1` replaced. Constraints never involve `d_1`.
    pub fn with_d1(&self, d1: u64) -> Result<Self> {
        let mut bottom = self.bottom.clone();
        bottom[0] = d1;
        if self.columns() == 1 && d1 == 0 {
            return Err(Error::InvalidMatrix(vec![Violation::LastBottomZero {
                column: 1,
            }]));
        }
        let m = Self {
            top: self.top.clone(),
            bottom,
        };
        m.checked_entry_sum()?;
        Ok(m)
    }

    fn checked_entry_sum(&self) -> Result<u64> {
        self.top
            .iter()
            .chain(&self.bottom)
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .ok_or(Error::Overflow("matrix entry sum"))
    }
}

impl fmt::Display for TwoLineMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .top
            .iter()
            .chain(&self.bottom)
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in [&self.top, &self.bottom].into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str("(")?;
            for x in row {
                write!(f, " {x:>width$}")?;
            }
            f.write_str(" )")?;
        }
        Ok(())
    }
}

/// The unique matrix whose column sums are the parts of `p`:
/// `c_j = l_{j+1}`, `d_j = l_j - l_{j+1}` for `j < s`, `c_s = 0`, `d_s = l_s`.
pub fn partition_to_matrix(p: &Partition) -> Result<TwoLineMatrix> {
    let parts = p.parts();
    if parts.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let s = parts.len();
    let mut top = Vec::with_capacity(s);
    let mut bottom = Vec::with_capacity(s);
    for j in 0..s {
        let next = parts.get(j + 1).copied().unwrap_or(0);
        top.push(next);
        bottom.push(parts[j] - next);
    }
    Ok(TwoLineMatrix::from_rows_unchecked(top, bottom))
}

/// Column sums.
pub fn matrix_to_partition(m: &TwoLineMatrix) -> Partition {
    let parts = m.top.iter().zip(&m.bottom).map(|(c, d)| c + d).collect();
    Partition::from_parts_unchecked(parts)
}

/// Entry sum `l(M)`, i.e. the weight of the associated partition.
pub fn ell(m: &TwoLineMatrix) -> u64 {
    let direct: u64 = m.top.iter().sum::<u64>() + m.bottom.iter().sum::<u64>();
    // (c_1 + d_1) + c_1 + ... + c_{s-1}
    let via_first_column = m.top[0] + m.bottom[0] + m.top[..m.columns() - 1].iter().sum::<u64>();
    debug_assert_eq!(direct, via_first_column);
    direct
}

/// Maps a partition with at least two parts to the `M0` matrix of
/// `(l_2, l_2, l_3, ..., l_r)`. The entry sum drops by `l_1 - l_2`.
pub fn project_to_m0(p: &Partition) -> Result<TwoLineMatrix> {
    let parts = p.parts();
    match parts.len() {
        0 => return Err(Error::EmptyPartition),
        1 => return Err(Error::SinglePart),
        _ => {}
    }
    let mut squashed = parts.to_vec();
    squashed[0] = parts[1];
    let m = partition_to_matrix(&Partition::from_parts_unchecked(squashed))?;
    debug_assert!(m.is_in_m0());
    Ok(m)
}

/// Inverse of [`project_to_m0`]: adds `n - l(M)` to the first part.
pub fn lift_from_m0(m: &TwoLineMatrix, n: u64) -> Result<Partition> {
    if !m.is_in_m0() {
        return Err(Error::NotInM0 { d1: m.d1() });
    }
    let l = ell(m);
    if l > n {
        return Err(Error::EllExceedsN { ell: l, n });
    }
    let mut parts = matrix_to_partition(m).into_parts();
    parts[0] += n - l;
    Ok(Partition::from_parts_unchecked(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn mat(top: &[u64], bottom: &[u64]) -> TwoLineMatrix {
        TwoLineMatrix::new(top.to_vec(), bottom.to_vec()).unwrap()
    }

    fn part(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn encodes_worked_examples() {
        assert_eq!(
            partition_to_matrix(&part(&[6, 5, 2, 2])).unwrap(),
            mat(&[5, 2, 2, 0], &[1, 3, 0, 2])
        );
        assert_eq!(partition_to_matrix(&part(&[5])).unwrap(), mat(&[0], &[5]));
        assert_eq!(
            partition_to_matrix(&part(&[2, 2, 1])).unwrap(),
            mat(&[2, 1, 0], &[0, 1, 1])
        );
        assert_eq!(
            partition_to_matrix(&part(&[])),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn decodes_worked_examples() {
        assert_eq!(
            matrix_to_partition(&mat(&[5, 2, 2, 0], &[1, 3, 0, 2])).parts(),
            &[6, 5, 2, 2]
        );
        assert_eq!(matrix_to_partition(&mat(&[0], &[5])).parts(), &[5]);
        assert_eq!(
            matrix_to_partition(&mat(&[1, 1, 0], &[2, 0, 1])).parts(),
            &[3, 1, 1]
        );
    }

    #[test]
    fn validate_reports_every_violation() {
        assert_eq!(
            validate(&RawMatrix::new(vec![2, 1, 1, 0], vec![0, 1, 0, 1])),
            Ok(())
        );

        let errs = validate(&RawMatrix::new(vec![1, 0], vec![1, 0])).unwrap_err();
        assert!(errs.contains(&Violation::LastBottomZero { column: 2 }));
        // c_1 = 1 but c_2 + d_2 = 0 as well
        assert!(errs.contains(&Violation::Recurrence {
            column: 1,
            top: 1,
            expected: 0
        }));

        let errs = validate(&RawMatrix::new(vec![3, 1, 0], vec![0, 1, 1])).unwrap_err();
        assert_eq!(
            errs,
            vec![Violation::Recurrence {
                column: 1,
                top: 3,
                expected: 2
            }]
        );
        assert_eq!(errs[0].to_string(), "c_1 != c_2 + d_2 (3 != 2)");

        let errs = validate(&RawMatrix::new(vec![1, -1], vec![2, 0])).unwrap_err();
        assert!(errs.contains(&Violation::NegativeEntry {
            row: Row::Top,
            column: 2,
            value: -1
        }));
        assert!(errs.contains(&Violation::LastTopNonZero {
            column: 2,
            value: -1
        }));

        assert_eq!(
            validate(&RawMatrix::new(vec![], vec![])),
            Err(vec![Violation::Empty])
        );
        assert_eq!(
            validate(&RawMatrix::new(vec![0], vec![1, 2])),
            Err(vec![Violation::RowLengthMismatch { top: 1, bottom: 2 }])
        );
    }

    #[test]
    fn ell_examples() {
        assert_eq!(ell(&mat(&[5, 2, 2, 0], &[1, 3, 0, 2])), 15);
        assert_eq!(ell(&mat(&[4, 1, 1, 0], &[0, 3, 0, 1])), 10);
        assert_eq!(ell(&mat(&[0], &[5])), 5);
    }

    #[test]
    fn project_examples() {
        assert_eq!(
            project_to_m0(&part(&[4, 1, 1])).unwrap(),
            mat(&[1, 1, 0], &[0, 0, 1])
        );
        assert_eq!(
            project_to_m0(&part(&[2, 2, 1])).unwrap(),
            mat(&[2, 1, 0], &[0, 1, 1])
        );
        let m = project_to_m0(&part(&[3, 2])).unwrap();
        assert_eq!(m, mat(&[2, 0], &[0, 2]));
        assert_eq!(ell(&m), 4);
        assert_eq!(project_to_m0(&part(&[5])), Err(Error::SinglePart));
    }

    #[test]
    fn lift_examples() {
        assert_eq!(
            lift_from_m0(&mat(&[1, 1, 0], &[0, 0, 1]), 6).unwrap().parts(),
            &[4, 1, 1]
        );
        assert_eq!(
            lift_from_m0(&mat(&[2, 0], &[0, 2]), 5).unwrap().parts(),
            &[3, 2]
        );
        let p = lift_from_m0(&mat(&[2, 1, 0], &[0, 1, 1]), 5).unwrap();
        assert_eq!(p.parts()[0], p.parts()[1]);
        assert_eq!(
            lift_from_m0(&mat(&[1, 0], &[2, 1]), 9),
            Err(Error::NotInM0 { d1: 2 })
        );
        assert_eq!(
            lift_from_m0(&mat(&[2, 0], &[0, 2]), 3),
            Err(Error::EllExceedsN { ell: 4, n: 3 })
        );
    }

    #[test]
    fn round_trips_up_to_30() {
        for n in 1..=30 {
            let mut images = std::collections::BTreeSet::new();
            let list = enumerate_partitions(n);
            for p in &list {
                let m = partition_to_matrix(p).unwrap();
                assert_eq!(&matrix_to_partition(&m), p);
                assert_eq!(ell(&m), n);
                assert_eq!(m.columns(), p.len());
                if m.columns() >= 2 {
                    assert!(m.top()[..m.columns() - 1].iter().all(|&c| c >= 1));
                }
                assert!(m.top().windows(2).all(|w| w[0] >= w[1]));

                if p.len() >= 2 {
                    let m0 = project_to_m0(p).unwrap();
                    assert_eq!(ell(&m0), n - (p.parts()[0] - p.parts()[1]));
                    assert_eq!(&lift_from_m0(&m0, n).unwrap(), p);
                    assert!(images.insert(m0));
                }
            }
            assert_eq!(images.len(), list.len() - 1, "n = {n}");
        }
    }

    #[test]
    fn json_shape_is_fixed() {
        let m = mat(&[5, 2, 2, 0], &[1, 3, 0, 2]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"top":[5,2,2,0],"bottom":[1,3,0,2]}"#);
        assert_eq!(serde_json::from_str::<TwoLineMatrix>(&s).unwrap(), m);
        let err = serde_json::from_str::<TwoLineMatrix>(r#"{"top":[1,0],"bottom":[1,0]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("d_s must be non-zero"), "{err}");
    }

    #[test]
    fn with_d1_keeps_constraints() {
        let m = mat(&[2, 1, 1, 0], &[0, 1, 0, 1]);
        let shifted = m.with_d1(7).unwrap();
        assert_eq!(shifted.bottom(), &[7, 1, 0, 1]);
        assert_eq!(ell(&shifted), ell(&m) + 7);
        assert!(mat(&[0], &[5]).with_d1(0).is_err());
    }

    #[test]
    fn display_layout() {
        assert_eq!(
            mat(&[1, 1, 0], &[2, 0, 1]).to_string(),
            "( 1 1 0 )\n( 2 0 1 )"
        );
    }
}
