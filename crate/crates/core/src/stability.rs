//! Stability ranges and discriminant-filtration dimension bookkeeping.
//!
//! For a smooth compact target with smallest primitive-collection size `k`,
//! domain dimension `m < k` and multidegree `d`, the inclusion of the
//! polynomial morphism space into the continuous mapping space induces
//! homology isomorphisms in all dimensions below `min(d) * (2k - 2m - 1) - 1`.
//! This module computes that bound, the curve-case comparison value, and
//! the dimensions entering its proof-side bookkeeping: the affine strata of
//! the simplicial resolution of the discriminant, the labelled
//! configuration spaces, and the truncation dimension, all tied together by
//! an exact arithmetic identity that doubles as an internal cross-check.
//!
//! Every quantity here is plain integer arithmetic; the geometric content
//! (the resolution itself, spectral sequences, homology of the mapping
//! space) is out of scope by design.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::grading::{valid_morphism_degree, MultiDegree};
use crate::primitive::primitive_collections;

/// Bidegrees of an `r`-tuple of polynomials in the holomorphic and
/// antiholomorphic variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BidegreeProfile {
    pub m: usize,
    pub p: Vec<i64>,
    pub q: Vec<i64>,
}

impl BidegreeProfile {
    pub fn new(m: usize, p: Vec<i64>, q: Vec<i64>) -> Result<Self> {
        if p.len() != q.len() {
            return Err(Error::Shape("bidegree vectors differ in length".into()));
        }
        if p.iter().chain(&q).any(|&v| v < 0) {
            return Err(Error::Input("negative bidegree entry".into()));
        }
        Ok(BidegreeProfile { m, p, q })
    }

    /// Profile of a holomorphic tuple: `q = 0`.
    pub fn holomorphic(m: usize, degrees: &MultiDegree) -> Result<Self> {
        let q = vec![0; degrees.entries.len()];
        BidegreeProfile::new(m, degrees.entries.clone(), q)
    }

    /// Smallest holomorphic degree, the `p` of the truncation bound.
    pub fn p_min(&self) -> i64 {
        self.p.iter().copied().min().unwrap_or(0)
    }

    /// Whether `sum (p_i - q_i) n_i = 0`, the condition for the profile to
    /// describe maps into the variety.
    pub fn map_valid(&self, fan: &Fan) -> Result<bool> {
        use num_traits::Zero;
        let r = fan.ray_count();
        if self.p.len() != r {
            return Err(Error::Shape(format!("profile length must be {r}")));
        }
        let n = fan.dim();
        let mut sum = vec![crate::Int::zero(); n];
        for ((ray, &pi), &qi) in fan.rays().iter().zip(&self.p).zip(&self.q) {
            for (acc, c) in sum.iter_mut().zip(ray) {
                *acc += crate::Int::from(pi - qi) * c;
            }
        }
        Ok(sum.iter().all(Zero::is_zero))
    }
}

/// One filtration stage of the simplicial resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationStage {
    pub l: i64,
    /// Real rank of the affine stratum over the configuration space.
    pub stratum_real_dim: i64,
    /// Dimension of the configuration space of `l` labelled points.
    pub config_dim: i64,
}

/// Dimension bookkeeping of the truncated resolution for one profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationProfile {
    /// Complex dimension `N` of the ambient polynomial space.
    pub n_complex_dim: i64,
    pub r: usize,
    pub m: usize,
    pub k: usize,
    pub p_min: i64,
    pub per_l: Vec<FiltrationStage>,
    pub truncation_dim: i64,
}

/// The stability range and its curve-case comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub k: usize,
    pub m: usize,
    pub d_min: i64,
    /// Homology isomorphisms hold strictly below this dimension; absent
    /// when `m >= k` (no bound asserted).
    pub theorem_bound: Option<i64>,
    /// The previously known curve-case stabilization dimension, `d_min`;
    /// emitted for `m = 1` only.
    pub guest_bound: Option<i64>,
    pub applicable: bool,
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial fits in i64")
}

/// Complex dimension of the affine space of `(p, q)`-polynomials in `m + 1`
/// variables with fixed restriction to the hyperplane `z_m = 0`: all
/// bihomogeneous monomials minus those containing neither `z_m` nor its
/// conjugate.
pub fn polyspace_dim(m: usize, p: i64, q: i64) -> i64 {
    assert!(m >= 1, "domain dimension must be at least 1");
    assert!(p >= 0 && q >= 0, "bidegrees must be nonnegative");
    let m = m as i64;
    binomial(p + m, m) * binomial(q + m, m) - binomial(p + m - 1, m - 1) * binomial(q + m - 1, m - 1)
}

/// Real rank of the `l`-th stratum: `2(N - r*l) + l - 1`.
pub fn stratum_real_dim(n_complex_dim: i64, r: i64, l: i64) -> i64 {
    2 * (n_complex_dim - r * l) + l - 1
}

/// Dimension of the configuration space of `l` labelled points: `2l(m + r - k)`.
pub fn config_space_dim(l: i64, m: i64, r: i64, k: i64) -> i64 {
    2 * l * (m + r - k)
}

/// Dimension below which the truncated resolution models the discriminant:
/// `2N + p(2m - 2k + 1)`.
pub fn truncation_dimension(n_complex_dim: i64, p_min: i64, m: i64, k: i64) -> i64 {
    2 * n_complex_dim + p_min * (2 * m - 2 * k + 1)
}

/// Closed form of the stability threshold: `d(2k - 2m - 1) - 1`.
pub fn stability_threshold(d_min: i64, k: i64, m: i64) -> i64 {
    d_min * (2 * k - 2 * m - 1) - 1
}

/// Stability range for morphisms of the given multidegree.
pub fn stability_bound(fan: &Fan, m: usize, degrees: &MultiDegree) -> Result<StabilityReport> {
    if !valid_morphism_degree(fan, degrees)? {
        return Err(Error::Input(
            "degrees do not satisfy the lattice relation".into(),
        ));
    }
    let k = primitive_collections(fan)?.k;
    let d_min = degrees.min_entry();
    let applicable = m < k;
    Ok(StabilityReport {
        k,
        m,
        d_min,
        theorem_bound: applicable.then(|| stability_threshold(d_min, k as i64, m as i64)),
        guest_bound: (m == 1).then_some(d_min),
        applicable,
    })
}

/// Dimension bookkeeping for one bidegree profile: the ambient dimension
/// `N`, all stages `l = 1..=p_min`, and the truncation dimension. The
/// closing identity `stratum(p) + config(p) + 1 = truncation` is asserted.
pub fn filtration_profile(fan: &Fan, profile: &BidegreeProfile) -> Result<FiltrationProfile> {
    if !profile.map_valid(fan)? {
        return Err(Error::Input(
            "profile does not satisfy the lattice relation".into(),
        ));
    }
    let k = primitive_collections(fan)?.k;
    let m = profile.m;
    if m == 0 {
        return Err(Error::Input(
            "filtration bookkeeping needs domain dimension at least 1".into(),
        ));
    }
    if m >= k {
        return Err(Error::Input(format!(
            "domain dimension {m} must be smaller than k = {k}"
        )));
    }
    let r = fan.ray_count();
    let n: i64 = profile
        .p
        .iter()
        .zip(&profile.q)
        .map(|(&p, &q)| polyspace_dim(m, p, q))
        .sum();
    let p_min = profile.p_min();
    let per_l: Vec<FiltrationStage> = (1..=p_min)
        .map(|l| FiltrationStage {
            l,
            stratum_real_dim: stratum_real_dim(n, r as i64, l),
            config_dim: config_space_dim(l, m as i64, r as i64, k as i64),
        })
        .collect();
    let truncation_dim = truncation_dimension(n, p_min, m as i64, k as i64);
    if let Some(last) = per_l.last() {
        assert_eq!(
            last.stratum_real_dim + last.config_dim + 1,
            truncation_dim,
            "filtration identity"
        );
    }
    Ok(FiltrationProfile {
        n_complex_dim: n,
        r,
        m,
        k,
        p_min,
        per_l,
        truncation_dim,
    })
}

/// Stable range recovered through the duality index shift `2N - l - 1`:
/// homology of the compactified discriminant is stable above the truncation
/// dimension, so the mapping-space range is `2N - 1 - truncation`, which
/// must coincide with the closed form `p_min(2k - 2m - 1) - 1`.
pub fn stable_range_from_duality(profile: &FiltrationProfile) -> i64 {
    2 * profile.n_complex_dim - 1 - profile.truncation_dim
}

/// Thom-isomorphism degree shift between two profiles related by a
/// stabilization step: `2(N_after - N_before)`.
pub fn stab_rank_shift(
    fan: &Fan,
    before: &BidegreeProfile,
    after: &BidegreeProfile,
) -> Result<i64> {
    if before.m != after.m || before.p.len() != after.p.len() {
        return Err(Error::Shape("profiles differ in shape".into()));
    }
    if before.m == 0 {
        return Err(Error::Input(
            "rank shifts need domain dimension at least 1".into(),
        ));
    }
    let step: Vec<i64> = after
        .p
        .iter()
        .zip(&before.p)
        .map(|(a, b)| a - b)
        .collect();
    let step_q: Vec<i64> = after
        .q
        .iter()
        .zip(&before.q)
        .map(|(a, b)| a - b)
        .collect();
    if step != step_q {
        return Err(Error::Input(
            "profiles are not related by a single step on both bidegrees".into(),
        ));
    }
    if step.iter().any(|&v| v < 0) {
        return Err(Error::Input("negative step entries".into()));
    }
    if !valid_morphism_degree(fan, &MultiDegree::new(step))? {
        return Err(Error::Input("step is not a lattice relation".into()));
    }
    let dim_of = |profile: &BidegreeProfile| -> i64 {
        profile
            .p
            .iter()
            .zip(&profile.q)
            .map(|(&p, &q)| polyspace_dim(profile.m, p, q))
            .sum()
    };
    Ok(2 * (dim_of(after) - dim_of(before)))
}
