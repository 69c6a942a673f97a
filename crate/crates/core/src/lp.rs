//! Exact rational linear-programming feasibility (phase-1 simplex).
//!
//! Solves "does `A z = b, z >= 0` have a solution" with Bland's rule, so the
//! pivoting terminates and the outcome is deterministic. Used by fan
//! validation to decide whether two full-dimensional simplicial cones share
//! an interior point.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::scalar::LatticeInt;

/// Feasibility of `A z = b` with `z >= 0`, exact over the rationals.
pub fn feasible_eq_nonneg<T: LatticeInt>(a: &[Vec<Ratio<T>>], b: &[Ratio<T>]) -> bool {
    let m = a.len();
    assert_eq!(m, b.len());
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    assert!(a.iter().all(|row| row.len() == n));

    // tableau columns: n structural vars, m artificials, rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<Ratio<T>>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Ratio<T>> = Vec::with_capacity(width);
        let flip = b[i].is_negative();
        for v in &a[i] {
            row.push(if flip { -v.clone() } else { v.clone() });
        }
        for j in 0..m {
            row.push(if i == j { Ratio::one() } else { Ratio::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // objective: minimize the sum of artificials; reduced-cost row for the
    // artificial basis is minus the sum of the constraint rows on the
    // structural columns
    let mut obj: Vec<Ratio<T>> = vec![Ratio::zero(); width];
    for row in &t {
        for (o, v) in obj.iter_mut().zip(row) {
            *o = o.clone() - v.clone();
        }
    }
    for o in obj.iter_mut().take(n + m).skip(n) {
        *o = Ratio::zero();
    }

    // Bland: entering = lowest-index column with negative reduced cost
    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        // leaving: minimum ratio, ties by lowest basis variable index
        let mut leave: Option<usize> = None;
        for (i, row) in t.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = row[width - 1].clone() / row[enter].clone();
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let best = t[l][width - 1].clone() / t[l][enter].clone();
                    if ratio < best || (ratio == best && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let Some(pivot_row) = leave else {
            // cannot happen: the phase-1 objective is bounded below by zero,
            // so an improving column always admits a ratio test
            return false;
        };
        // pivot
        let p = t[pivot_row][enter].clone();
        for v in t[pivot_row].iter_mut() {
            *v = v.clone() / p.clone();
        }
        let pivot_line = t[pivot_row].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == pivot_row || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_line) {
                let sub = f.clone() * pv.clone();
                *x = x.clone() - sub;
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (o, pv) in obj.iter_mut().zip(&pivot_line) {
                let sub = f.clone() * pv.clone();
                *o = o.clone() - sub;
            }
        }
        basis[pivot_row] = enter;
    }

    // feasible iff every artificial ended at zero
    t.iter()
        .enumerate()
        .all(|(i, row)| basis[i] < n || row[width - 1].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use num_bigint::BigInt;

    type Q = Ratio<BigInt>;

    fn q(v: i64) -> Q {
        rat_int(v)
    }

    #[test]
    fn trivially_feasible() {
        // x = 2
        let a = vec![vec![q(1)]];
        assert!(feasible_eq_nonneg(&a, &[q(2)]));
        // x = -2 has no nonnegative solution
        assert!(!feasible_eq_nonneg(&a, &[q(-2)]));
    }

    #[test]
    fn two_constraints() {
        // x + y = 1, x - y = 0  => x = y = 1/2
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        assert!(feasible_eq_nonneg(&a, &[q(1), q(0)]));
        // x + y = 1, x + y = 2 inconsistent
        let a = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        assert!(!feasible_eq_nonneg(&a, &[q(1), q(2)]));
    }

    #[test]
    fn rational_data() {
        // 2/3 x = 5/7 feasible with x = 15/14
        let a: Vec<Vec<Q>> = vec![vec![rat(2, 3)]];
        assert!(feasible_eq_nonneg(&a, &[rat(5, 7)]));
    }

    #[test]
    fn degenerate_zero_rhs() {
        // x - y = 0 with x, y >= 0 is feasible (x = y = 0)
        let a = vec![vec![q(1), q(-1)]];
        assert!(feasible_eq_nonneg(&a, &[q(0)]));
    }
}
