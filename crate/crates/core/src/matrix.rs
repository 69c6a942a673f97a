//! Dense integer matrices over a [`LatticeInt`] scalar.
//!
//! Row-major storage, value semantics, exact arithmetic throughout. Besides
//! the ring operations this module provides the fraction-free Bareiss
//! determinant and the unique row Hermite normal form, both of which the
//! lattice algorithms build on.

use std::fmt;
use std::ops::{Index, IndexMut};


use crate::error::{Error, Result};
use crate::scalar::LatticeInt;

/// Rectangular integer matrix; dimensions may be zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: LatticeInt> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows in matrix".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from `i64` literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from(v)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out: Matrix<T> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
            })
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    // Bareiss guarantees exact divisibility by the previous pivot.
                    m[(i, j)] = num / prev.clone();
                }
                m[(i, k)] = T::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs() == T::one()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)].clone();
        }
    }

    /// `row_dst += factor * row_src`.
    pub fn add_scaled_row(&mut self, dst: usize, src: usize, factor: &T) {
        assert_ne!(dst, src);
        for j in 0..self.cols {
            let add = factor.clone() * self[(src, j)].clone();
            self[(dst, j)] = self[(dst, j)].clone() + add;
        }
    }

    /// `col_dst += factor * col_src`.
    pub fn add_scaled_col(&mut self, dst: usize, src: usize, factor: &T) {
        assert_ne!(dst, src);
        for i in 0..self.rows {
            let add = factor.clone() * self[(i, src)].clone();
            self[(i, dst)] = self[(i, dst)].clone() + add;
        }
    }

    /// Unique row Hermite normal form: pivots positive, entries above each
    /// pivot reduced into `[0, pivot)`, zero rows at the bottom.
    pub fn hnf_rows(&self) -> Self {
        let mut h = self.clone();
        let mut r = 0usize;
        for col in 0..h.cols {
            if r == h.rows {
                break;
            }
            if (r..h.rows).all(|i| h[(i, col)].is_zero()) {
                continue;
            }
            loop {
                let mut best: Option<usize> = None;
                for i in r..h.rows {
                    if h[(i, col)].is_zero() {
                        continue;
                    }
                    best = match best {
                        None => Some(i),
                        Some(b) if h[(i, col)].abs() < h[(b, col)].abs() => Some(i),
                        keep => keep,
                    };
                }
                let pivot_row = best.expect("nonzero entry exists");
                h.swap_rows(r, pivot_row);
                if h[(r, col)].is_negative() {
                    h.negate_row(r);
                }
                let mut clean = true;
                for i in r + 1..h.rows {
                    if h[(i, col)].is_zero() {
                        continue;
                    }
                    let q = num_integer::Integer::div_floor(&h[(i, col)], &h[(r, col)]);
                    if !q.is_zero() {
                        h.add_scaled_row(i, r, &(-q));
                    }
                    if !h[(i, col)].is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            for i in 0..r {
                let q = num_integer::Integer::div_floor(&h[(i, col)], &h[(r, col)]);
                if !q.is_zero() {
                    h.add_scaled_row(i, r, &(-q));
                }
            }
            r += 1;
        }
        h
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} matrix", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "{:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}
