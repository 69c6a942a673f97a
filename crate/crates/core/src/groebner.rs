//! Buchberger's algorithm and the common-zero test for homogeneous ideals.
//!
//! The engine is deliberately small: graded-lex order, normal pair
//! selection (smallest lcm first), the coprime-leading-term criterion, and
//! content removal on every new basis element to keep coefficients from
//! exploding. A step budget turns runaway computations into an honest
//! `Unknown` instead of an exception, because callers must distinguish
//! "unverified" from "refuted".
//!
//! For a homogeneous ideal the common zero locus is a cone, so it reduces
//! to the origin exactly when the initial ideal contains a pure power of
//! every variable; that is the certificate behind the `OnlyOrigin` verdict.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{gcd_binary_forms, grlex_cmp, rational_projective_root, Poly};
use crate::rng::Rng;
use crate::scalar::LatticeInt;

/// A list of homogeneous generators in one variable set.
#[derive(Clone, Debug)]
pub struct IdealBasis<T: LatticeInt> {
    generators: Vec<Poly<T>>,
    nvars: usize,
}

impl<T: LatticeInt> IdealBasis<T> {
    /// Requires at least one generator; all generators share the variable
    /// count (zero polynomials are allowed and carry no constraint).
    pub fn new(generators: Vec<Poly<T>>) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::Input("empty generator list".into()));
        };
        let nvars = first.nvars();
        if generators.iter().any(|g| g.nvars() != nvars) {
            return Err(Error::Shape("generators mix variable counts".into()));
        }
        Ok(IdealBasis { generators, nvars })
    }

    pub fn generators(&self) -> &[Poly<T>] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
}

/// Verdict of [`vanishes_only_at_origin`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroLocusVerdict<T: LatticeInt> {
    /// Certified: the only common zero is the origin.
    OnlyOrigin,
    /// Certified: a nontrivial common zero exists; a rational witness point
    /// is attached when the structured search found one (a common zero may
    /// exist without any rational witness).
    CommonZero(Option<Vec<Ratio<T>>>),
    /// Budget exhausted before either certificate was reached.
    Unknown,
}

type Line<T> = (Vec<Ratio<T>>, Vec<Ratio<T>>);

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn exp_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn exp_sub(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Fully reduces `p` against `basis` (leading-term division, repeated).
/// After every division step the intermediate is divided by its content,
/// with the accumulated remainder rescaled alongside, so the result is the
/// normal form up to a positive rational scalar. Zero-testing and ideal
/// membership are unaffected; coefficient growth is.
pub fn reduce<T: LatticeInt>(mut p: Poly<T>, basis: &[Poly<T>]) -> Poly<T> {
    let nvars = p.nvars();
    let mut remainder = Poly::zero(nvars);
    'outer: while !p.is_zero() {
        let (pm, pc) = {
            let (m, c) = p.leading_term().expect("nonzero");
            (m.clone(), c.clone())
        };
        for b in basis {
            let Some((bm, bc)) = b.leading_term() else {
                continue;
            };
            if divides(bm, &pm) {
                let factor = pc.clone() / bc.clone();
                let shift = exp_sub(&pm, bm);
                p = p.sub(&b.mul_term(&shift, &factor));
                if let Some(scale) = p.content_scale() {
                    p = p.scale(&scale);
                    remainder = remainder.scale(&scale);
                }
                continue 'outer;
            }
        }
        let lead = Poly::term(nvars, &pm, pc.clone());
        remainder = if remainder.is_zero() {
            lead.clone()
        } else {
            remainder.add(&lead)
        };
        p = p.sub(&lead);
    }
    remainder
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial<T: LatticeInt>(f: &Poly<T>, g: &Poly<T>) -> Poly<T> {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = exp_lcm(fm, gm);
    let a = f.mul_term(&exp_sub(&lcm, fm), &(Ratio::one() / fc.clone()));
    let b = g.mul_term(&exp_sub(&lcm, gm), &(Ratio::one() / gc.clone()));
    a.sub(&b)
}

/// Buchberger with normal pair selection. Returns `None` when the step
/// budget runs out (each processed S-pair costs one step).
pub fn buchberger<T: LatticeInt>(generators: &[Poly<T>], budget: u64) -> Option<Vec<Poly<T>>> {
    let mut basis: Vec<Poly<T>> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.primitive_part())
        .collect();
    if basis.is_empty() {
        return Some(basis);
    }
    let mut pairs: Vec<(Vec<u32>, usize, usize)> = Vec::new();
    let queue_pair = |pairs: &mut Vec<(Vec<u32>, usize, usize)>, basis: &[Poly<T>], i: usize, j: usize| {
        let (mi, _) = basis[i].leading_term().expect("nonzero");
        let (mj, _) = basis[j].leading_term().expect("nonzero");
        // coprime leading terms reduce to zero: skip
        if mi.iter().zip(mj.iter()).all(|(a, b)| *a.min(b) == 0) {
            return;
        }
        pairs.push((exp_lcm(mi, mj), i, j));
    };
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            queue_pair(&mut pairs, &basis, i, j);
        }
    }
    let mut steps = 0u64;
    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| grlex_cmp(&a.0, &b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)))
            .map(|(idx, _)| idx)
            .expect("nonempty");
        let (_, i, j) = pairs.swap_remove(best);
        steps += 1;
        if steps > budget {
            return None;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let reduced = reduce(s, &basis);
        if reduced.is_zero() {
            continue;
        }
        let new_index = basis.len();
        basis.push(reduced.primitive_part());
        for k in 0..new_index {
            queue_pair(&mut pairs, &basis, k, new_index);
        }
    }
    Some(basis)
}

/// Self-check: every S-polynomial of the basis reduces to zero.
pub fn is_groebner_basis<T: LatticeInt>(basis: &[Poly<T>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i].is_zero() || basis[j].is_zero() {
                continue;
            }
            let s = s_polynomial(&basis[i], &basis[j]);
            if !reduce(s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Whether the leading terms contain a pure power of every variable. For a
/// homogeneous ideal this certifies that the zero locus is at most the
/// origin; an element with constant leading term makes the ideal the unit
/// ideal, which certifies an empty zero locus.
fn initial_ideal_covers_all_variables<T: LatticeInt>(basis: &[Poly<T>], nvars: usize) -> bool {
    let leading: Vec<Vec<u32>> = basis
        .iter()
        .filter_map(|g| g.leading_term().map(|(m, _)| m.clone()))
        .collect();
    if leading.iter().any(|m| m.iter().all(|&e| e == 0)) {
        return true;
    }
    (0..nvars).all(|t| {
        leading
            .iter()
            .any(|m| m[t] > 0 && m.iter().enumerate().all(|(s, &e)| s == t || e == 0))
    })
}

/// Evaluates all generators at a point; true when all vanish.
fn all_vanish<T: LatticeInt>(gens: &[Poly<T>], point: &[Ratio<T>]) -> bool {
    gens.iter().all(|g| g.eval(point).is_zero())
}

struct LineScan<T: LatticeInt> {
    witness: Option<Vec<Ratio<T>>>,
    certified: bool,
}

/// Restricts the generators to the line `s*u + t*v` and looks for a common
/// root of the restrictions.
fn scan_line<T: LatticeInt>(gens: &[Poly<T>], u: &[Ratio<T>], v: &[Ratio<T>]) -> LineScan<T> {
    let restrictions: Vec<Poly<T>> = gens.iter().map(|g| g.restrict_to_line(u, v)).collect();
    if restrictions.iter().all(Poly::is_zero) {
        // the whole line lies in the zero locus
        return LineScan {
            witness: Some(u.to_vec()),
            certified: true,
        };
    }
    let mut gcd: Option<Poly<T>> = None;
    for r in restrictions.iter().filter(|r| !r.is_zero()) {
        gcd = Some(match gcd {
            None => r.clone(),
            Some(acc) => gcd_binary_forms(&acc, r).expect("nonzero forms"),
        });
        if gcd.as_ref().is_some_and(Poly::is_nonzero_constant) {
            return LineScan {
                witness: None,
                certified: false,
            };
        }
    }
    let gcd = gcd.expect("at least one nonzero restriction");
    // the restrictions share a projective root on this line, hence the
    // generators share a zero away from the origin
    if let Some((s, t)) = rational_projective_root(&gcd) {
        let point: Vec<Ratio<T>> = u
            .iter()
            .zip(v)
            .map(|(a, b)| a.clone() * s.clone() + b.clone() * t.clone())
            .collect();
        if point.iter().any(|c| !c.is_zero()) && all_vanish(gens, &point) {
            return LineScan {
                witness: Some(point),
                certified: true,
            };
        }
    }
    LineScan {
        witness: None,
        certified: true,
    }
}

/// Decides whether the common zero locus of a homogeneous ideal is `{0}`.
///
/// Structured witness search first: all 0/1-support points, restrictions to
/// coordinate planes, then a handful of deterministic rational lines. A
/// completed Gröbner basis then certifies `OnlyOrigin` through pure powers
/// in the initial ideal, or `CommonZero` when some variable has none. The
/// budget bounds the number of S-pair reductions.
pub fn vanishes_only_at_origin<T: LatticeInt>(
    basis: &IdealBasis<T>,
    budget: u64,
) -> ZeroLocusVerdict<T> {
    let nvars = basis.nvars();
    let gens: Vec<Poly<T>> = basis
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    if gens.is_empty() {
        // every generator is identically zero
        let mut point = vec![Ratio::zero(); nvars];
        point[0] = Ratio::one();
        return ZeroLocusVerdict::CommonZero(Some(point));
    }
    if gens.iter().any(Poly::is_nonzero_constant) {
        return ZeroLocusVerdict::OnlyOrigin;
    }
    if nvars == 1 {
        // a nonzero form c*z0^d vanishes only at the origin
        return ZeroLocusVerdict::OnlyOrigin;
    }

    // 0/1-support points
    for mask in 1u64..(1u64 << nvars) {
        let point: Vec<Ratio<T>> = (0..nvars)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    Ratio::one()
                } else {
                    Ratio::zero()
                }
            })
            .collect();
        if all_vanish(&gens, &point) {
            return ZeroLocusVerdict::CommonZero(Some(point));
        }
    }

    // coordinate planes, then deterministic rational lines
    let mut certified_no_witness = false;
    let mut lines: Vec<Line<T>> = Vec::new();
    for s in 0..nvars {
        for t in s + 1..nvars {
            let mut u = vec![Ratio::zero(); nvars];
            let mut v = vec![Ratio::zero(); nvars];
            u[s] = Ratio::one();
            v[t] = Ratio::one();
            lines.push((u, v));
        }
    }
    if nvars > 2 {
        let mut rng = Rng::new(0x70121c);
        let mut added = 0;
        while added < 12 {
            let u: Vec<Ratio<T>> = (0..nvars)
                .map(|_| Ratio::from_integer(T::from(rng.int_in(-3, 3))))
                .collect();
            let v: Vec<Ratio<T>> = (0..nvars)
                .map(|_| Ratio::from_integer(T::from(rng.int_in(-3, 3))))
                .collect();
            let independent = (0..nvars).any(|i| {
                (i + 1..nvars).any(|j| {
                    u[i].clone() * v[j].clone() != u[j].clone() * v[i].clone()
                })
            });
            if independent {
                lines.push((u, v));
                added += 1;
            }
        }
    }
    for (u, v) in &lines {
        let scan = scan_line(&gens, u, v);
        if let Some(point) = scan.witness {
            return ZeroLocusVerdict::CommonZero(Some(point));
        }
        certified_no_witness |= scan.certified;
    }
    if certified_no_witness {
        return ZeroLocusVerdict::CommonZero(None);
    }

    match buchberger(&gens, budget) {
        None => ZeroLocusVerdict::Unknown,
        Some(gb) => {
            if initial_ideal_covers_all_variables(&gb, nvars) {
                ZeroLocusVerdict::OnlyOrigin
            } else {
                // the set of standard monomials is infinite, so the zero
                // locus has positive dimension over the complex numbers
                ZeroLocusVerdict::CommonZero(None)
            }
        }
    }
}
