//! Primitive collections of edge generators and the exceptional set `Y`.
//!
//! A set of rays is primitive when it does not lie in any cone of the fan
//! but every proper subset does. The union of the coordinate subspaces
//! `{x_i = 0, i in C}` over the primitive collections `C` is exactly the
//! exceptional set removed in the homogeneous-coordinate quotient, and the
//! smallest collection cardinality `k` drives the stability range.

use crate::error::{Error, Result};
use crate::fan::Fan;

/// An inclusion-minimal set of ray indices not contained in any cone.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimitiveCollection {
    pub ray_indices: Vec<usize>,
}

/// The decomposition of `Y` into coordinate subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDecomposition {
    /// One stratum `{x : x_i = 0 for i in the collection}` per collection,
    /// sorted by cardinality then lexicographically.
    pub strata: Vec<PrimitiveCollection>,
    /// Smallest collection cardinality.
    pub k: usize,
    /// Complex dimension of the largest stratum, `r - k`.
    pub y_complex_dim: usize,
}

fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0u64, |m, &i| m | 1u64 << i)
}

fn is_submask(small: u64, big: u64) -> bool {
    small & !big == 0
}

fn indices_of(mask: u64, r: usize) -> Vec<usize> {
    (0..r).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Subset enumeration in increasing cardinality with supersets of found
/// collections pruned. Exhaustive, which doubles as its own oracle at the
/// scales the fan presentation allows.
pub fn primitive_collections(fan: &Fan) -> Result<YDecomposition> {
    let r = fan.ray_count();
    if r > 63 {
        return Err(Error::Input(format!("{r} rays exceed the supported 63")));
    }
    let cone_masks: Vec<u64> = fan.max_cones().iter().map(|c| mask_of(c)).collect();
    let contained_in_some_cone = |s: u64| cone_masks.iter().any(|&cone| is_submask(s, cone));

    // next size-k combination of {0..r-1} in lexicographic order
    fn advance(subset: &mut [usize], r: usize) -> bool {
        let k = subset.len();
        for i in (0..k).rev() {
            if subset[i] < r - k + i {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    let mut found: Vec<u64> = Vec::new();
    let mut strata = Vec::new();
    for cardinality in 1..=r {
        let mut subset: Vec<usize> = (0..cardinality).collect();
        loop {
            let s = mask_of(&subset);
            let minimal = !found.iter().any(|&f| is_submask(f, s));
            if minimal && !contained_in_some_cone(s) {
                found.push(s);
                strata.push(PrimitiveCollection {
                    ray_indices: subset.clone(),
                });
            }
            if !advance(&mut subset, r) {
                break;
            }
        }
    }
    if strata.is_empty() {
        return Err(Error::Input(
            "fan has no primitive collection; every ray subset lies in a cone".into(),
        ));
    }
    strata.sort_by(|a, b| {
        (a.ray_indices.len(), &a.ray_indices).cmp(&(b.ray_indices.len(), &b.ray_indices))
    });
    let k = strata[0].ray_indices.len();
    Ok(YDecomposition {
        strata,
        k,
        y_complex_dim: r - k,
    })
}

/// Independent membership test for `Y` through the cone monomials: a point
/// whose zero coordinates are exactly `zero_pattern` lies in `Y` iff every
/// maximal cone omits some index of the pattern (its monomial
/// `prod_{i not in cone} x_i` then vanishes).
pub fn y_membership_oracle(fan: &Fan, zero_pattern: &[usize]) -> bool {
    let pattern = mask_of(zero_pattern);
    fan.max_cones()
        .iter()
        .all(|cone| !is_submask(pattern, mask_of(cone)))
}

impl YDecomposition {
    /// Whether a zero pattern contains some primitive collection, i.e. the
    /// corresponding points lie in `Y` by the union formula.
    pub fn pattern_in_y(&self, zero_pattern: &[usize]) -> bool {
        let pattern = mask_of(zero_pattern);
        self.strata
            .iter()
            .any(|c| is_submask(mask_of(&c.ray_indices), pattern))
    }
}

/// All `2^r` zero patterns of a fan, for exhaustive cross-checks.
pub fn all_patterns(r: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..(1u64 << r)).map(move |mask| indices_of(mask, r))
}
