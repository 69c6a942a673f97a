//! The divisor class group and the grading of the homogeneous coordinate ring.
//!
//! The class group is the cokernel of the pairing map `M -> Z^r`,
//! `m -> (<n_i, m>)_i`, computed through the Smith normal form of the ray
//! matrix. Monomial exponent vectors acquire degrees through a canonical
//! projection onto cokernel coordinates; two monomials have the same degree
//! exactly when their exponent difference is an integral combination of the
//! rays, and we keep both routes (lattice solve and projection) as mutually
//! checking implementations.
//!
//! The morphism multidegree condition appears in the literature in two
//! readings: the lattice identity `sum_i d_i n_i = 0` (equivalently
//! `sum_i d_i <n_i, m> = 0` for *every* dual vector `m`) and the weaker
//! existential variant requiring the pairing to vanish for *some* `m`.
//! This module implements the identity form, the one under which degree
//! vectors add and stabilization steps compose; callers wanting the
//! existential reading can test single pairings through the ray matrix.

use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::matrix::Matrix;
use crate::scalar::rat_pow;
use crate::snf::{snf, solve_integral};
use crate::{Int, IntMatrix, Rat};

/// The class group `A_{n-1}(X)` presented as rank, torsion and a projection
/// onto free cokernel coordinates.
#[derive(Clone, Debug)]
pub struct ClassGroup {
    /// Free rank of the cokernel; `r - n` for smooth complete fans.
    pub rank: usize,
    /// Torsion invariant factors (empty for smooth complete fans).
    pub invariant_factors: Vec<Int>,
    /// `rank x r` matrix mapping exponent vectors to cokernel coordinates;
    /// rows are the Hermite-canonical basis of the left kernel of the ray
    /// matrix, so the output is independent of normal-form internals.
    pub projection: IntMatrix,
}

/// Degree of a monomial in cokernel coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    pub coords: Vec<Int>,
}

/// A tuple of polynomial degrees, one per ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiDegree {
    pub entries: Vec<i64>,
}

impl MultiDegree {
    pub fn new(entries: Vec<i64>) -> Self {
        MultiDegree { entries }
    }

    pub fn min_entry(&self) -> i64 {
        self.entries.iter().copied().min().unwrap_or(0)
    }
}

/// An element of `(Q*)^r` proposed as a member of the quotient group `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GElement {
    pub mu: Vec<Rat>,
}

/// Class group as the cokernel of the ray pairing map.
pub fn class_group(fan: &Fan) -> ClassGroup {
    let rays = fan.ray_matrix();
    let r = rays.rows();
    let normal = snf(&rays);
    let rank_of_image = normal.rank();
    let torsion: Vec<Int> = normal
        .invariant_factors
        .iter()
        .filter(|f| !f.is_one())
        .cloned()
        .collect();
    // rows of U beyond the image rank span the saturated left kernel;
    // Hermite normalization makes the basis canonical
    let kernel_rows: Vec<Vec<Int>> = (rank_of_image..r)
        .map(|i| normal.u.row(i).to_vec())
        .collect();
    let projection = if kernel_rows.is_empty() {
        Matrix::zero(0, r)
    } else {
        Matrix::from_rows(kernel_rows)
            .expect("kernel rows are rectangular")
            .hnf_rows()
    };
    ClassGroup {
        rank: r - rank_of_image,
        invariant_factors: torsion,
        projection,
    }
}

impl ClassGroup {
    /// Degree of the monomial with the given exponent vector.
    pub fn monomial_degree(&self, exponents: &[Int]) -> DivisorClass {
        DivisorClass {
            coords: self.projection.mul_vec(exponents),
        }
    }
}

/// Whether two exponent vectors have the same degree, decided by solving
/// `a - b = B m` over the integers.
pub fn same_degree(fan: &Fan, a: &[Int], b: &[Int]) -> Result<bool> {
    let r = fan.ray_count();
    if a.len() != r || b.len() != r {
        return Err(Error::Shape(format!(
            "exponent vectors must have length {r}"
        )));
    }
    let diff: Vec<Int> = a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect();
    Ok(solve_integral(&fan.ray_matrix(), &diff).is_some())
}

/// The morphism multidegree condition: all entries nonnegative and
/// `sum_i d_i n_i = 0` in the lattice.
pub fn valid_morphism_degree(fan: &Fan, d: &MultiDegree) -> Result<bool> {
    let r = fan.ray_count();
    if d.entries.len() != r {
        return Err(Error::Shape(format!("degree vector must have length {r}")));
    }
    if let Some(bad) = d.entries.iter().find(|&&v| v < 0) {
        return Err(Error::Input(format!("negative degree entry {bad}")));
    }
    let n = fan.dim();
    let mut sum = vec![Int::zero(); n];
    for (ray, &coeff) in fan.rays().iter().zip(&d.entries) {
        for (acc, c) in sum.iter_mut().zip(ray) {
            *acc += Int::from(coeff) * c;
        }
    }
    Ok(sum.iter().all(Zero::is_zero))
}

/// Membership in `G`: for every lattice basis vector `e_j` of the dual,
/// `prod_i mu_i^{<n_i, e_j>} = 1` exactly.
pub fn g_membership(fan: &Fan, mu: &GElement) -> Result<bool> {
    let r = fan.ray_count();
    if mu.mu.len() != r {
        return Err(Error::Shape(format!("group element must have length {r}")));
    }
    if mu.mu.iter().any(Zero::is_zero) {
        return Err(Error::Input("group element with a zero entry".into()));
    }
    for j in 0..fan.dim() {
        let mut prod: Rat = Ratio::one();
        for (i, value) in mu.mu.iter().enumerate() {
            let exp = fan.rays()[i][j]
                .to_i64()
                .ok_or_else(|| Error::Input("ray coordinate exceeds i64".into()))?;
            prod *= rat_pow(value, exp);
        }
        if !prod.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the `G` element determined by a character value per free cokernel
/// coordinate: `mu_i = prod_c lambda_c^{P[c][i]}`.
pub fn g_element_from_character(class: &ClassGroup, lambda: &[Rat]) -> Result<GElement> {
    if lambda.len() != class.rank {
        return Err(Error::Shape(format!(
            "character needs {} values",
            class.rank
        )));
    }
    if lambda.iter().any(Zero::is_zero) {
        return Err(Error::Input("character value zero".into()));
    }
    let r = class.projection.cols();
    let mut mu = Vec::with_capacity(r);
    for i in 0..r {
        let mut value: Rat = Ratio::one();
        for (c, l) in lambda.iter().enumerate() {
            let exp = class.projection[(c, i)]
                .to_i64()
                .ok_or_else(|| Error::Input("projection entry exceeds i64".into()))?;
            value *= rat_pow(l, exp);
        }
        mu.push(value);
    }
    Ok(GElement { mu })
}
