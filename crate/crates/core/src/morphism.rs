//! Candidate morphisms from projective `m`-space in homogeneous coordinates.
//!
//! A candidate is an `r`-tuple of homogeneous polynomials of multidegree
//! `d` with `sum d_i n_i = 0`. It defines a morphism exactly when its value
//! tuple avoids the exceptional set away from the origin, which decomposes
//! into one common-zero test per primitive collection: for curves the test
//! is the iterated binary-form gcd, in higher dimension it is the Gröbner
//! engine. Two candidates of the same shape present the same morphism when
//! they differ by an element of `G`, tested coefficient-exactly.
//!
//! A tuple may carry `P_i = 0` in a slot; the input is accepted and simply
//! refuted wherever `i` meets a primitive collection (the values then land
//! in a forbidden coordinate subspace identically).

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fan::{catalog, parse_fan, Fan};
use crate::grading::{class_group, g_membership, valid_morphism_degree, GElement, MultiDegree};
use crate::groebner::{vanishes_only_at_origin, IdealBasis, ZeroLocusVerdict};
use crate::poly::{
    gcd_binary_forms, monomials_of_degree, poly_from_json, poly_to_json, rational_projective_root,
};
use crate::primitive::{primitive_collections, PrimitiveCollection};
use crate::rng::Rng;
use crate::scalar::factorize;
use crate::stability::BidegreeProfile;
use crate::{HomogPoly, Int, Rat};

/// An `r`-tuple of homogeneous polynomials claimed to define a morphism.
#[derive(Clone, Debug)]
pub struct MorphismCandidate {
    fan: Fan,
    m: usize,
    degrees: MultiDegree,
    polys: Vec<HomogPoly>,
}

/// Outcome of the per-collection common-zero test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CollectionStatus {
    Clear,
    /// The collection's polynomials share a zero away from the origin; the
    /// witness is attached when a rational point was found.
    Violated(Option<Vec<Rat>>),
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Morphism,
    NotMorphism,
    Unknown,
}

/// Full verification outcome.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub per_collection: Vec<(PrimitiveCollection, CollectionStatus)>,
    /// Witness of the first violated collection, when rational.
    pub witness: Option<Vec<Rat>>,
}

/// A stabilization step: nonnegative integers with `sum a_i n_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationStep {
    pub a: Vec<i64>,
}

impl MorphismCandidate {
    /// Validates the shape: degrees satisfy the lattice relation, and every
    /// nonzero polynomial is homogeneous of the declared degree in `m + 1`
    /// variables. Zero polynomials are accepted (and will be refuted).
    pub fn new(
        fan: Fan,
        m: usize,
        degrees: MultiDegree,
        polys: Vec<HomogPoly>,
    ) -> Result<MorphismCandidate> {
        if !valid_morphism_degree(&fan, &degrees)? {
            return Err(Error::Input(
                "degrees do not satisfy the lattice relation".into(),
            ));
        }
        let r = fan.ray_count();
        if polys.len() != r {
            return Err(Error::Shape(format!(
                "expected {r} polynomials, got {}",
                polys.len()
            )));
        }
        for (i, p) in polys.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if p.nvars() != m + 1 {
                return Err(Error::Shape(format!(
                    "polynomial {i} has {} variables, expected {}",
                    p.nvars(),
                    m + 1
                )));
            }
            if p.degree() != Some(degrees.entries[i] as usize) {
                return Err(Error::Shape(format!(
                    "polynomial {i} has degree {:?}, expected {}",
                    p.degree(),
                    degrees.entries[i]
                )));
            }
        }
        Ok(MorphismCandidate {
            fan,
            m,
            degrees,
            polys,
        })
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn domain_dim(&self) -> usize {
        self.m
    }

    pub fn degrees(&self) -> &MultiDegree {
        &self.degrees
    }

    pub fn polys(&self) -> &[HomogPoly] {
        &self.polys
    }

    /// The candidate scaled coordinatewise by a group element.
    pub fn scaled_by(&self, g: &GElement) -> Result<MorphismCandidate> {
        if g.mu.len() != self.polys.len() {
            return Err(Error::Shape("group element length mismatch".into()));
        }
        MorphismCandidate::new(
            self.fan.clone(),
            self.m,
            self.degrees.clone(),
            self.polys
                .iter()
                .zip(&g.mu)
                .map(|(p, mu)| p.scale(mu))
                .collect(),
        )
    }

    /// Replaces one coefficient by itself plus one; used by perturbation
    /// tests. The term is addressed by polynomial index and exponent vector.
    pub fn perturbed(&self, poly_index: usize, exps: &[u32]) -> Result<MorphismCandidate> {
        let mut polys = self.polys.clone();
        let bump = HomogPoly::term(self.m + 1, exps, Ratio::one());
        polys[poly_index] = polys[poly_index].add(&bump);
        MorphismCandidate::new(self.fan.clone(), self.m, self.degrees.clone(), polys)
    }
}

/// Tests the nonvanishing condition collection by collection.
pub fn verify(c: &MorphismCandidate, budget: u64) -> Result<Verdict> {
    for (i, p) in c.polys.iter().enumerate() {
        if !p.is_zero() && p.degree() != Some(c.degrees.entries[i] as usize) {
            return Err(Error::Shape(format!("polynomial {i} degree mismatch")));
        }
    }
    let decomposition = primitive_collections(&c.fan)?;
    let mut per_collection = Vec::with_capacity(decomposition.strata.len());
    for collection in &decomposition.strata {
        let status = collection_status(c, &collection.ray_indices, budget);
        per_collection.push((collection.clone(), status));
    }
    let mut status = VerdictStatus::Morphism;
    let mut witness = None;
    for (_, s) in &per_collection {
        match s {
            CollectionStatus::Violated(w) => {
                if status != VerdictStatus::NotMorphism {
                    witness = w.clone();
                }
                status = VerdictStatus::NotMorphism;
            }
            CollectionStatus::Unknown => {
                if status == VerdictStatus::Morphism {
                    status = VerdictStatus::Unknown;
                }
            }
            CollectionStatus::Clear => {}
        }
    }
    if status != VerdictStatus::NotMorphism {
        witness = None;
    }
    Ok(Verdict {
        status,
        per_collection,
        witness,
    })
}

fn collection_status(c: &MorphismCandidate, indices: &[usize], budget: u64) -> CollectionStatus {
    // a nonzero constant in the collection can never vanish
    if indices
        .iter()
        .any(|&i| c.polys[i].is_nonzero_constant())
    {
        return CollectionStatus::Clear;
    }
    let live: Vec<&HomogPoly> = indices
        .iter()
        .map(|&i| &c.polys[i])
        .filter(|p| !p.is_zero())
        .collect();
    if live.is_empty() {
        // every polynomial of the collection is identically zero
        let mut point = vec![Rat::zero(); c.m + 1];
        point[0] = Rat::one();
        return CollectionStatus::Violated(Some(point));
    }
    if c.m == 0 {
        // on the punctured affine line a nonzero form c*z0^d has no zero
        return CollectionStatus::Clear;
    }
    if c.m == 1 {
        let mut gcd = live[0].clone();
        for p in &live[1..] {
            gcd = gcd_binary_forms(&gcd, p).expect("nonzero binary forms");
            if gcd.is_nonzero_constant() {
                return CollectionStatus::Clear;
            }
        }
        if gcd.degree().unwrap_or(0) == 0 {
            return CollectionStatus::Clear;
        }
        let witness = rational_projective_root(&gcd).map(|(s, t)| {
            let point = vec![s, t];
            debug_assert!(live.iter().all(|p| p.eval(&point).is_zero()));
            point
        });
        return CollectionStatus::Violated(witness);
    }
    let basis = IdealBasis::new(live.into_iter().cloned().collect())
        .expect("nonempty generator list");
    match vanishes_only_at_origin(&basis, budget) {
        ZeroLocusVerdict::OnlyOrigin => CollectionStatus::Clear,
        ZeroLocusVerdict::CommonZero(w) => CollectionStatus::Violated(w),
        ZeroLocusVerdict::Unknown => CollectionStatus::Unknown,
    }
}

/// Decides whether two candidates of identical shape present the same
/// morphism, i.e. differ coordinatewise by an element of `G`.
///
/// Indices where both polynomials vanish leave the corresponding ratio
/// free; the partial ratio vector is then completed to a group element, if
/// possible, through the character description of `G` (one rational value
/// per free class-group coordinate, matched prime by prime and sign by
/// sign).
pub fn same_morphism(c1: &MorphismCandidate, c2: &MorphismCandidate) -> Result<bool> {
    if !c1.fan.same_structure(&c2.fan) || c1.m != c2.m || c1.degrees != c2.degrees {
        return Err(Error::Shape(
            "candidates must share fan, domain dimension and degrees".into(),
        ));
    }
    let r = c1.fan.ray_count();
    let mut determined: Vec<(usize, Rat)> = Vec::new();
    let mut any_free = false;
    for i in 0..r {
        let (p, q) = (&c1.polys[i], &c2.polys[i]);
        match (p.is_zero(), q.is_zero()) {
            (true, true) => any_free = true,
            (true, false) | (false, true) => return Ok(false),
            (false, false) => {
                let (_, pl) = p.leading_term().expect("nonzero");
                let (_, ql) = q.leading_term().expect("nonzero");
                let ratio = pl.clone() / ql.clone();
                if *p != q.scale(&ratio) {
                    return Ok(false);
                }
                determined.push((i, ratio));
            }
        }
    }
    if !any_free {
        let mu = GElement {
            mu: determined.into_iter().map(|(_, v)| v).collect(),
        };
        return g_membership(&c1.fan, &mu);
    }
    completes_to_g(&c1.fan, &determined)
}

/// Whether fixed nonzero ratios at the given indices extend to an element
/// of `G`: solves `prod_c lambda_c^{P[c][i]} = mu_i` for characters
/// `lambda`, one exact linear system per prime plus one over GF(2) for the
/// signs.
fn completes_to_g(fan: &Fan, determined: &[(usize, Rat)]) -> Result<bool> {
    let cg = class_group(fan);
    if !cg.invariant_factors.is_empty() {
        return Err(Error::Input(
            "equality up to G needs a torsion-free class group".into(),
        ));
    }
    if determined.is_empty() {
        return Ok(true); // all ratios free: any character works
    }
    let rank = cg.rank;
    let rows: Vec<Vec<Int>> = determined
        .iter()
        .map(|(i, _)| (0..rank).map(|c| cg.projection[(c, *i)].clone()).collect())
        .collect();
    let system = crate::matrix::Matrix::from_rows(rows.clone()).expect("rectangular");

    // one integral solve per prime appearing in any ratio
    let mut primes: Vec<Int> = Vec::new();
    for (_, mu) in determined {
        for part in [mu.numer().abs(), mu.denom().abs()] {
            for (p, _) in factorize(&part) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
    }
    for prime in &primes {
        let rhs: Vec<Int> = determined
            .iter()
            .map(|(_, mu)| {
                let vn = factorize(&mu.numer().abs())
                    .into_iter()
                    .find(|(p, _)| p == prime)
                    .map_or(0, |(_, e)| e as i64);
                let vd = factorize(&mu.denom().abs())
                    .into_iter()
                    .find(|(p, _)| p == prime)
                    .map_or(0, |(_, e)| e as i64);
                Int::from(vn - vd)
            })
            .collect();
        if crate::snf::solve_integral(&system, &rhs).is_none() {
            return Ok(false);
        }
    }

    // signs over GF(2)
    let two = Int::from(2);
    let gf2_rows: Vec<(Vec<bool>, bool)> = determined
        .iter()
        .zip(&rows)
        .map(|((_, mu), row)| {
            let coeffs = row
                .iter()
                .map(|v| !v.mod_floor(&two).is_zero())
                .collect();
            (coeffs, mu.is_negative())
        })
        .collect();
    Ok(gf2_solvable(gf2_rows))
}

fn gf2_solvable(mut rows: Vec<(Vec<bool>, bool)>) -> bool {
    let ncols = rows.first().map_or(0, |(r, _)| r.len());
    let mut pivot = 0usize;
    for col in 0..ncols {
        let Some(found) = (pivot..rows.len()).find(|&i| rows[i].0[col]) else {
            continue;
        };
        rows.swap(pivot, found);
        let (pivot_coeffs, pivot_rhs) = rows[pivot].clone();
        for (i, (coeffs, rhs)) in rows.iter_mut().enumerate() {
            if i != pivot && coeffs[col] {
                for (c, p) in coeffs.iter_mut().zip(&pivot_coeffs) {
                    *c ^= *p;
                }
                *rhs ^= pivot_rhs;
            }
        }
        pivot += 1;
    }
    rows.iter().all(|(coeffs, rhs)| coeffs.iter().any(|&b| b) || !rhs)
}

use num_integer::Integer;

/// Draws a candidate with independent uniform integer coefficients in
/// `[-bound, bound]`, resampling any polynomial that comes out identically
/// zero. Deterministic for a fixed seed.
pub fn sample(
    fan: &Fan,
    m: usize,
    degrees: &MultiDegree,
    bound: i64,
    seed: u64,
) -> Result<MorphismCandidate> {
    if bound < 1 {
        return Err(Error::Input("coefficient bound must be at least 1".into()));
    }
    if !valid_morphism_degree(fan, degrees)? {
        return Err(Error::Input(
            "degrees do not satisfy the lattice relation".into(),
        ));
    }
    let mut rng = Rng::new(seed);
    let mut polys = Vec::with_capacity(fan.ray_count());
    for &d in &degrees.entries {
        let monomials = monomials_of_degree(m + 1, d as u32);
        let poly = loop {
            let p = HomogPoly::new(
                m + 1,
                monomials
                    .iter()
                    .map(|e| (e.clone(), Rat::from_integer(Int::from(rng.int_in(-bound, bound))))),
            )
            .expect("sampled terms are homogeneous");
            if !p.is_zero() {
                break p;
            }
        };
        polys.push(poly);
    }
    MorphismCandidate::new(fan.clone(), m, degrees.clone(), polys)
}

/// Bidegree profile of the candidate's image under the stabilization map:
/// a holomorphic tuple of degree `d` becomes a `(d + a, a)` tuple. The
/// antiholomorphic factors are never materialized; only the profile is
/// produced.
pub fn stabilize_profile(
    c: &MorphismCandidate,
    step: &StabilizationStep,
) -> Result<BidegreeProfile> {
    validate_step(&c.fan, step)?;
    let p: Vec<i64> = c
        .degrees
        .entries
        .iter()
        .zip(&step.a)
        .map(|(d, a)| d + a)
        .collect();
    BidegreeProfile::new(c.m, p, step.a.clone())
}

/// Checks the step invariant: nonnegative entries, `sum a_i n_i = 0`.
pub fn validate_step(fan: &Fan, step: &StabilizationStep) -> Result<()> {
    if step.a.iter().any(|&v| v < 0) {
        return Err(Error::Input("negative step entries".into()));
    }
    if !valid_morphism_degree(fan, &MultiDegree::new(step.a.clone()))? {
        return Err(Error::Input("step is not a lattice relation".into()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// morphism JSON files

/// Serializes a candidate; the fan is referenced by name.
pub fn morphism_to_json(c: &MorphismCandidate) -> serde_json::Value {
    serde_json::json!({
        "fan": c.fan.name(),
        "m": c.m,
        "degrees": c.degrees.entries,
        "polynomials": c.polys.iter().map(poly_to_json).collect::<Vec<_>>(),
    })
}

/// Parses a morphism file. The fan comes from `fan_override` when given;
/// otherwise the file's `fan` field is resolved as a catalog name first and
/// as a fan-file path second.
pub fn parse_morphism(text: &str, fan_override: Option<Fan>) -> Result<MorphismCandidate> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("morphism file: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("morphism file must be a JSON object".into()))?;
    let fan = match fan_override {
        Some(fan) => fan,
        None => {
            let reference = obj
                .get("fan")
                .and_then(|v| v.as_str())
                .ok_or_else(|| Error::Parse("missing `fan` reference".into()))?;
            resolve_fan_reference(reference)?
        }
    };
    let m = obj
        .get("m")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| Error::Parse("missing integer `m`".into()))? as usize;
    let degrees: Vec<i64> = obj
        .get("degrees")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::Parse("missing `degrees` array".into()))?
        .iter()
        .map(|v| v.as_i64().ok_or_else(|| Error::Parse(format!("bad degree {v}"))))
        .collect::<Result<_>>()?;
    let polys_json = obj
        .get("polynomials")
        .and_then(|v| v.as_array())
        .ok_or_else(|| Error::Parse("missing `polynomials` array".into()))?;
    let polys: Vec<HomogPoly> = polys_json
        .iter()
        .map(|p| poly_from_json(m + 1, p))
        .collect::<Result<_>>()?;
    MorphismCandidate::new(fan, m, MultiDegree::new(degrees), polys)
}

/// Catalog name first, fan-file path (relative to the working directory)
/// second.
pub fn resolve_fan_reference(reference: &str) -> Result<Fan> {
    if let Ok(fan) = catalog(reference) {
        return Ok(fan);
    }
    match std::fs::read_to_string(reference) {
        Ok(text) => parse_fan(&text),
        Err(e) => Err(Error::Input(format!(
            "`{reference}` is neither a catalog name nor a readable fan file: {e}"
        ))),
    }
}
