//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the solver, the partition enumerator or `matrix_from_tsquared`.

#![allow(dead_code)]

use partition_lab::TwoLineMatrix;

/// Every weakly decreasing tuple of positive integers summing to `b`.
pub fn positive_tuples(b: u64) -> Vec<Vec<u64>> {
    fn rec(rest: u64, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        let mut v = 1;
        while v <= cap.min(rest) {
            cur.push(v);
            rec(rest - v, v, cur, out);
            cur.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    rec(b, b, &mut Vec::new(), &mut out);
    out
}

pub fn squared_weight(c: &[u64]) -> u64 {
    let b: u64 = c.iter().sum();
    b * b + 2 * c.iter().map(|x| x * x).sum::<u64>()
}

/// `counts[m]` = number of positive tuples `c` with `b^2 + 2 sum c_i^2 = m`,
/// over every `b` with `b^2 <= m_max`.
pub fn brute_force_frequencies(m_max: u64) -> Vec<u64> {
    let mut counts = vec![0u64; m_max as usize + 1];
    let mut b = 1;
    while b * b <= m_max {
        for c in positive_tuples(b) {
            let m = squared_weight(&c);
            if m <= m_max {
                counts[m as usize] += 1;
            }
        }
        b += 1;
    }
    counts
}

/// The `M0` matrix with top row `(c_1, ..., c_t, 0)`, written out directly
/// from the column constraints.
pub fn m0_matrix(c: &[u64]) -> TwoLineMatrix {
    let mut top = c.to_vec();
    top.push(0);
    let mut bottom = vec![0];
    for j in 1..top.len() {
        bottom.push(top[j - 1] - top[j]);
    }
    TwoLineMatrix::new(top, bottom).expect("valid M0 matrix")
}

/// Every `M0` matrix with entry sum at most `max_ell`, paired with its components.
pub fn m0_matrices(max_ell: u64) -> Vec<(Vec<u64>, TwoLineMatrix)> {
    let mut out = Vec::new();
    for b in 1..max_ell {
        for c in positive_tuples(b) {
            if b + c[0] <= max_ell {
                let m = m0_matrix(&c);
                out.push((c, m));
            }
        }
    }
    out
}
