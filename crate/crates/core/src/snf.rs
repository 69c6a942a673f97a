//! Smith normal form and integral linear solving.
//!
//! `snf` diagonalizes an integer matrix with unimodular row and column
//! transforms, `U * A * V = S`, where the diagonal is nonnegative and each
//! entry divides the next. Pivots are chosen by smallest nonzero absolute
//! value with ties broken by lowest `(row, col)`, which makes the output a
//! deterministic function of the input.


use crate::matrix::Matrix;
use crate::scalar::LatticeInt;

/// Outcome of `U * A * V = S`.
#[derive(Clone, Debug)]
pub struct SnfResult<T> {
    /// Unimodular, `rows x rows`.
    pub u: Matrix<T>,
    /// Diagonal with the divisibility chain, same shape as the input.
    pub s: Matrix<T>,
    /// Unimodular, `cols x cols`.
    pub v: Matrix<T>,
    /// The nonzero diagonal entries of `s`, in order.
    pub invariant_factors: Vec<T>,
}

impl<T: LatticeInt> SnfResult<T> {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

struct Workspace<T> {
    s: Matrix<T>,
    u: Matrix<T>,
    v: Matrix<T>,
}

impl<T: LatticeInt> Workspace<T> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    fn negate_row(&mut self, i: usize) {
        self.s.negate_row(i);
        self.u.negate_row(i);
    }

    fn add_scaled_row(&mut self, dst: usize, src: usize, factor: &T) {
        self.s.add_scaled_row(dst, src, factor);
        self.u.add_scaled_row(dst, src, factor);
    }

    fn add_scaled_col(&mut self, dst: usize, src: usize, factor: &T) {
        self.s.add_scaled_col(dst, src, factor);
        self.v.add_scaled_col(dst, src, factor);
    }

    /// Smallest-|value| nonzero entry of the trailing submatrix, ties by (row, col).
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                if self.s[(i, j)].is_zero() {
                    continue;
                }
                best = match best {
                    None => Some((i, j)),
                    Some(b) if self.s[(i, j)].abs() < self.s[b].abs() => Some((i, j)),
                    keep => keep,
                };
            }
        }
        best
    }

    /// Clears row and column `t`, leaving a positive pivot at `(t, t)`.
    /// Returns false if the trailing submatrix is already zero.
    fn reduce_stage(&mut self, t: usize) -> bool {
        loop {
            let Some((pi, pj)) = self.pivot(t) else {
                return false;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            if self.s[(t, t)].is_negative() {
                self.negate_row(t);
            }
            let mut clean = true;
            for i in t + 1..self.s.rows() {
                if self.s[(i, t)].is_zero() {
                    continue;
                }
                let q = num_integer::Integer::div_floor(&self.s[(i, t)], &self.s[(t, t)]);
                if !q.is_zero() {
                    self.add_scaled_row(i, t, &(-q));
                }
                if !self.s[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..self.s.cols() {
                if self.s[(t, j)].is_zero() {
                    continue;
                }
                let q = num_integer::Integer::div_floor(&self.s[(t, j)], &self.s[(t, t)]);
                if !q.is_zero() {
                    self.add_scaled_col(j, t, &(-q));
                }
                if !self.s[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                return true;
            }
            // leftover remainders are strictly smaller than the pivot, so the
            // loop terminates; re-select and go again.
        }
    }
}

/// Smith normal form of an integer matrix (any shape, including empty).
pub fn snf<T: LatticeInt>(a: &Matrix<T>) -> SnfResult<T> {
    let mut w = Workspace {
        s: a.clone(),
        u: Matrix::identity(a.rows()),
        v: Matrix::identity(a.cols()),
    };
    let dim = a.rows().min(a.cols());
    let mut rank = 0usize;
    for t in 0..dim {
        if !w.reduce_stage(t) {
            break;
        }
        rank = t + 1;
    }
    // enforce the divisibility chain on the diagonal
    loop {
        let mut violation = None;
        for i in 0..rank.saturating_sub(1) {
            let a_i = w.s[(i, i)].clone();
            let b_i = w.s[(i + 1, i + 1)].clone();
            if !b_i.is_multiple_of(&a_i) {
                violation = Some(i);
                break;
            }
        }
        let Some(i) = violation else { break };
        // fold the offending entry into column i and re-diagonalize from i on
        let one = T::one();
        w.add_scaled_col(i, i + 1, &one);
        for t in i..rank {
            w.reduce_stage(t);
        }
    }
    let invariant_factors = (0..rank).map(|i| w.s[(i, i)].clone()).collect();
    SnfResult {
        u: w.u,
        s: w.s,
        v: w.v,
        invariant_factors,
    }
}

/// Finds an integer solution of `A x = b`, if any.
///
/// The system is solved rationally through the Smith form and the
/// transformed right-hand side is checked for integrality: with
/// `U A V = S` and `c = U b`, a solution exists iff `s_i | c_i` on the
/// diagonal and `c_i = 0` beyond the rank, and then `x = V y`.
pub fn solve_integral<T: LatticeInt>(a: &Matrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let normal = snf(a);
    let c = normal.u.mul_vec(b);
    let rank = normal.rank();
    let mut y = vec![T::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < rank {
            let s_i = &normal.s[(i, i)];
            if !ci.is_multiple_of(s_i) {
                return None;
            }
            y[i] = ci.clone() / s_i.clone();
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(normal.v.mul_vec(&y))
}
