//! Exact multivariate homogeneous polynomials over the rationals.
//!
//! Terms are kept in a map keyed by exponent vectors; within one
//! homogeneous polynomial the graded-lexicographic order coincides with the
//! plain lexicographic order of the keys, so the map order is the term
//! order. Coefficients are reduced fractions and never zero.
//!
//! For binary forms this module provides the gcd (via dehomogenization with
//! explicit bookkeeping of the coordinate factors, so roots at infinity are
//! handled exactly) and the Sylvester resultant, which are two independent
//! routes to "do these forms share a projective root".

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{divisors, LatticeInt};
use crate::Int;

/// A homogeneous polynomial; the zero polynomial has no terms and no degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<T: LatticeInt> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Ratio<T>>,
}

/// Graded-lexicographic comparison of exponent vectors.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl<T: LatticeInt> Poly<T> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// Collects terms, dropping zero coefficients; all exponent vectors
    /// must have length `nvars` and equal total degree.
    pub fn new(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Ratio<T>)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Vec<u32>, Ratio<T>> = BTreeMap::new();
        for (exps, coeff) in terms {
            if exps.len() != nvars {
                return Err(Error::Shape(format!(
                    "exponent vector {exps:?} has length {}, expected {nvars}",
                    exps.len()
                )));
            }
            let entry = map.entry(exps).or_insert_with(Ratio::zero);
            *entry = entry.clone() + coeff;
        }
        map.retain(|_, c| !c.is_zero());
        let mut degrees = map.keys().map(|e| e.iter().sum::<u32>());
        if let Some(first) = degrees.next() {
            if degrees.any(|d| d != first) {
                return Err(Error::Input("polynomial is not homogeneous".into()));
            }
        }
        Ok(Poly { nvars, terms: map })
    }

    pub fn constant(nvars: usize, c: Ratio<T>) -> Self {
        if c.is_zero() {
            Poly::zero(nvars)
        } else {
            Poly {
                nvars,
                terms: BTreeMap::from([(vec![0; nvars], c)]),
            }
        }
    }

    pub fn term(nvars: usize, exps: &[u32], c: Ratio<T>) -> Self {
        Poly::new(nvars, [(exps.to_vec(), c)]).expect("single term is homogeneous")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .next()
            .map(|e| e.iter().sum::<u32>() as usize)
    }

    pub fn is_nonzero_constant(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Ratio<T>)> {
        self.terms.iter()
    }

    /// Largest term in graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Ratio<T>)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, exps: &[u32]) -> Ratio<T> {
        self.terms.get(exps).cloned().unwrap_or_else(Ratio::zero)
    }

    pub fn scale(&self, c: &Ratio<T>) -> Self {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Ratio::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            assert_eq!(a, b, "adding homogeneous polynomials of unequal degree");
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(Ratio::zero);
            *entry = entry.clone() + c.clone();
        }
        terms.retain(|_, c| !c.is_zero());
        Poly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut terms: BTreeMap<Vec<u32>, Ratio<T>> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(e).or_insert_with(Ratio::zero);
                *entry = entry.clone() + ca.clone() * cb.clone();
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Multiplies by the single term `c * x^exps`.
    pub fn mul_term(&self, exps: &[u32], c: &Ratio<T>) -> Self {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| {
                    (
                        e.iter().zip(exps).map(|(x, y)| x + y).collect(),
                        v.clone() * c.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly::constant(self.nvars, Ratio::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[Ratio<T>]) -> Ratio<T> {
        assert_eq!(point.len(), self.nvars, "evaluation point length");
        let mut total = Ratio::zero();
        for (exps, coeff) in &self.terms {
            let mut value = coeff.clone();
            for (e, p) in exps.iter().zip(point) {
                for _ in 0..*e {
                    value = value * p.clone();
                }
            }
            total = total + value;
        }
        total
    }

    /// Leading coefficient normalized to one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, lc)) => self.scale(&(Ratio::one() / lc.clone())),
        }
    }

    /// The positive factor that rescales the coefficients to coprime
    /// integers; `None` for the zero polynomial.
    pub fn content_scale(&self) -> Option<Ratio<T>> {
        if self.is_zero() {
            return None;
        }
        let mut denom_lcm = T::one();
        let mut numer_gcd = T::zero();
        for c in self.terms.values() {
            denom_lcm = num_integer::Integer::lcm(&denom_lcm, c.denom());
            numer_gcd = num_integer::Integer::gcd(&numer_gcd, c.numer());
        }
        Some(Ratio::new(denom_lcm, numer_gcd))
    }

    /// Clears denominators and divides by the content, leaving coprime
    /// integer coefficients with a positive leading one.
    pub fn primitive_part(&self) -> Self {
        let Some((_, lead)) = self.leading_term() else {
            return self.clone();
        };
        let mut factor = self.content_scale().expect("nonzero");
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Restriction along the parametrized line `z = s*u + t*v`, as a binary
    /// form in `(s, t)`.
    pub fn restrict_to_line(&self, u: &[Ratio<T>], v: &[Ratio<T>]) -> Poly<T> {
        assert_eq!(u.len(), self.nvars);
        assert_eq!(v.len(), self.nvars);
        let mut out = Poly::zero(2);
        for (exps, coeff) in &self.terms {
            let mut factor = Poly::constant(2, coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let line = Poly::new(
                    2,
                    [(vec![1, 0], u[i].clone()), (vec![0, 1], v[i].clone())],
                )
                .expect("linear binary form");
                factor = factor.mul(&line.pow(e));
            }
            out = if out.is_zero() {
                factor
            } else if factor.is_zero() {
                out
            } else {
                out.add(&factor)
            };
        }
        out
    }
}

impl<T: LatticeInt> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in self.terms.iter().rev() {
            let negative = coeff.is_negative();
            let mag = coeff.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("z{i}")
                    } else {
                        format!("z{i}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<T: LatticeInt> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// univariate helpers for the binary-form algorithms

fn uni_trim<T: LatticeInt>(v: &mut Vec<Ratio<T>>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn uni_rem<T: LatticeInt>(mut a: Vec<Ratio<T>>, b: &[Ratio<T>]) -> Vec<Ratio<T>> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    while a.len() > db {
        let da = a.len() - 1;
        let quo = a[da].clone() / lead.clone();
        if !quo.is_zero() {
            for i in 0..=db {
                let sub = quo.clone() * b[i].clone();
                a[da - db + i] = a[da - db + i].clone() - sub;
            }
        }
        a.pop();
        uni_trim(&mut a);
        if a.is_empty() {
            break;
        }
    }
    a
}

fn uni_gcd_monic<T: LatticeInt>(mut a: Vec<Ratio<T>>, mut b: Vec<Ratio<T>>) -> Vec<Ratio<T>> {
    uni_trim(&mut a);
    uni_trim(&mut b);
    while !b.is_empty() {
        let r = uni_rem(a, &b);
        a = b;
        b = r;
    }
    let lead = a.last().cloned().unwrap_or_else(Ratio::one);
    a.into_iter().map(|c| c / lead.clone()).collect()
}

/// Splits a nonzero binary form as `z0^b * z1^a * core` and returns
/// `(b, a, core dehomogenized at z1 = 1)`; the core has nonzero constant
/// and leading coefficients.
fn split_binary<T: LatticeInt>(f: &Poly<T>) -> (u32, u32, Vec<Ratio<T>>) {
    assert_eq!(f.nvars(), 2);
    assert!(!f.is_zero());
    let b = f.terms.keys().map(|e| e[0]).min().unwrap();
    let a = f.terms.keys().map(|e| e[1]).min().unwrap();
    let core_deg = f.degree().unwrap() as u32 - a - b;
    let mut uni = vec![Ratio::zero(); core_deg as usize + 1];
    for (exps, coeff) in &f.terms {
        uni[(exps[0] - b) as usize] = coeff.clone();
    }
    (b, a, uni)
}

/// Monic gcd of two binary forms over the rationals. The result has
/// degree >= 1 exactly when the forms share a projective root over the
/// complex numbers (the gcd is invariant under field extension).
pub fn gcd_binary_forms<T: LatticeInt>(f: &Poly<T>, g: &Poly<T>) -> Result<Poly<T>> {
    if f.nvars() != 2 || g.nvars() != 2 {
        return Err(Error::Input("binary-form gcd needs two variables".into()));
    }
    if f.is_zero() && g.is_zero() {
        return Err(Error::Input("gcd of two zero forms".into()));
    }
    if f.is_zero() {
        return Ok(g.monic());
    }
    if g.is_zero() {
        return Ok(f.monic());
    }
    let (bf, af, uf) = split_binary(f);
    let (bg, ag, ug) = split_binary(g);
    let core = uni_gcd_monic(uf, ug);
    let e = core.len() as u32 - 1;
    let z0 = bf.min(bg);
    let z1 = af.min(ag);
    Poly::new(
        2,
        core.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (vec![z0 + i as u32, z1 + e - i as u32], c)),
    )
}

/// Exact determinant by Gaussian elimination over the rationals.
fn rat_det<T: LatticeInt>(mut m: Vec<Vec<Ratio<T>>>) -> Ratio<T> {
    let n = m.len();
    let mut det: Ratio<T> = Ratio::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return Ratio::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det = det * pivot.clone();
        let pivot_line = m[k].clone();
        for row in m.iter_mut().skip(k + 1) {
            if row[k].is_zero() {
                continue;
            }
            let factor = row[k].clone() / pivot.clone();
            for (x, pv) in row.iter_mut().zip(&pivot_line).skip(k) {
                let sub = factor.clone() * pv.clone();
                *x = x.clone() - sub;
            }
        }
    }
    det
}

/// Sylvester resultant of two nonzero binary forms; zero exactly when they
/// share a projective root. The full formal degrees are used, so a common
/// root at `[1:0]` shows up as vanishing top coefficients.
pub fn resultant_binary<T: LatticeInt>(f: &Poly<T>, g: &Poly<T>) -> Result<Ratio<T>> {
    if f.nvars() != 2 || g.nvars() != 2 {
        return Err(Error::Input("resultant needs two variables".into()));
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::Input("resultant of a zero form".into()));
    }
    let df = f.degree().unwrap();
    let dg = g.degree().unwrap();
    if df + dg == 0 {
        return Ok(Ratio::one());
    }
    // coefficient sequences by descending z0 exponent
    let coeffs = |p: &Poly<T>, d: usize| -> Vec<Ratio<T>> {
        (0..=d)
            .map(|j| p.coeff(&[(d - j) as u32, j as u32]))
            .collect()
    };
    let cf = coeffs(f, df);
    let cg = coeffs(g, dg);
    let size = df + dg;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..dg {
        let mut row = vec![Ratio::zero(); size];
        for (j, c) in cf.iter().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..df {
        let mut row = vec![Ratio::zero(); size];
        for (j, c) in cg.iter().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    Ok(rat_det(rows))
}

/// A rational projective root `(s : t)` of a nonzero binary form, if one
/// exists: coordinate factors give the coordinate points, and the
/// dehomogenized core is scanned with the rational root theorem.
pub fn rational_projective_root<T: LatticeInt>(f: &Poly<T>) -> Option<(Ratio<T>, Ratio<T>)> {
    assert_eq!(f.nvars(), 2);
    assert!(!f.is_zero());
    let (b, a, uni) = split_binary(f);
    if b > 0 {
        return Some((Ratio::zero(), Ratio::one()));
    }
    if a > 0 {
        return Some((Ratio::one(), Ratio::zero()));
    }
    if uni.len() == 1 {
        return None; // nonzero constant
    }
    let mut denom_lcm = T::one();
    for c in &uni {
        denom_lcm = num_integer::Integer::lcm(&denom_lcm, c.denom());
    }
    let ints: Vec<T> = uni
        .iter()
        .map(|c| c.numer().clone() * (denom_lcm.clone() / c.denom().clone()))
        .collect();
    let constant = ints.first().unwrap().abs();
    let leading = ints.last().unwrap().abs();
    let eval = |x: &Ratio<T>| -> Ratio<T> {
        let mut acc = Ratio::zero();
        for c in ints.iter().rev() {
            acc = acc * x.clone() + Ratio::from_integer(c.clone());
        }
        acc
    };
    for p in divisors(&constant) {
        for q in divisors(&leading) {
            for sign in [T::one(), -T::one()] {
                let x = Ratio::new(sign.clone() * p.clone(), q.clone());
                if eval(&x).is_zero() {
                    return Some((x, Ratio::one()));
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// term-list JSON format shared by the CLI and the morphism files

/// Serializes to `[{"coeff": "p/q", "exponents": [..]}, ...]` in descending
/// term order.
pub fn poly_to_json(p: &Poly<Int>) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = p
        .terms
        .iter()
        .rev()
        .map(|(exps, coeff)| {
            let c = if coeff.denom().is_one() {
                coeff.numer().to_string()
            } else {
                format!("{}/{}", coeff.numer(), coeff.denom())
            };
            serde_json::json!({ "coeff": c, "exponents": exps })
        })
        .collect();
    serde_json::Value::Array(terms)
}

/// Parses the term-list format; the variable count is supplied by the
/// caller so that zero polynomials (empty lists) have a definite arity.
pub fn poly_from_json(nvars: usize, value: &serde_json::Value) -> Result<Poly<Int>> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Parse("polynomial must be an array of terms".into()))?;
    let mut terms = Vec::with_capacity(items.len());
    for item in items {
        let obj = item
            .as_object()
            .ok_or_else(|| Error::Parse("term must be an object".into()))?;
        if obj.len() != 2 {
            return Err(Error::Parse(
                "term must have exactly `coeff` and `exponents`".into(),
            ));
        }
        let coeff_text = obj
            .get("coeff")
            .and_then(|v| v.as_str())
            .ok_or_else(|| Error::Parse("term needs a string `coeff`".into()))?;
        let coeff = parse_rat(coeff_text)?;
        let exps = obj
            .get("exponents")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("term needs an `exponents` array".into()))?;
        let mut e = Vec::with_capacity(exps.len());
        for v in exps {
            let n = v
                .as_u64()
                .ok_or_else(|| Error::Parse(format!("bad exponent {v}")))?;
            e.push(u32::try_from(n).map_err(|_| Error::Parse(format!("exponent {n} too large")))?);
        }
        terms.push((e, coeff));
    }
    Poly::new(nvars, terms)
}

/// All exponent vectors of total degree `d` in `nvars` variables, in
/// lexicographically descending order of the vectors.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>, remaining: u32, slots: usize) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=remaining).rev() {
            prefix.push(e);
            rec(out, prefix, remaining - e, slots - 1);
            prefix.pop();
        }
    }
    assert!(nvars >= 1);
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::new(), d, nvars);
    out
}

/// Parses `p` or `p/q` into a reduced rational.
pub fn parse_rat(text: &str) -> Result<crate::Rat> {
    let parse_int = |s: &str| -> Result<Int> {
        s.trim()
            .parse::<Int>()
            .map_err(|_| Error::Parse(format!("bad integer `{s}`")))
    };
    match text.split_once('/') {
        None => Ok(Ratio::from_integer(parse_int(text)?)),
        Some((n, d)) => {
            let denom = parse_int(d)?;
            if denom.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Ratio::new(parse_int(n)?, denom))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use crate::scalar::{rat, rat_int};
    use crate::Rat;

    type P = Poly<Int>;

    fn q(v: i64) -> Rat {
        rat_int(v)
    }

    /// coefficient c on z0^a z1^b, in two variables
    fn t2(c: i64, a: u32, b: u32) -> (Vec<u32>, Rat) {
        (vec![a, b], q(c))
    }

    fn form(terms: Vec<(Vec<u32>, Rat)>) -> P {
        Poly::new(2, terms).unwrap()
    }

    #[test]
    fn construction_and_invariants() {
        let p = form(vec![t2(1, 2, 0), t2(-1, 0, 2)]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.num_terms(), 2);
        let z = p.sub(&p);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert!(Poly::<Int>::new(2, vec![t2(1, 2, 0), t2(1, 0, 1)]).is_err());
        assert!(Poly::<Int>::new(3, vec![t2(1, 2, 0)]).is_err());
        // coefficients that cancel are dropped
        let c = Poly::<Int>::new(2, vec![t2(1, 1, 1), t2(-1, 1, 1)]).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn leading_term_is_grlex() {
        let p = form(vec![t2(5, 1, 2), t2(3, 2, 1), t2(7, 0, 3)]);
        let (exps, coeff) = p.leading_term().unwrap();
        assert_eq!(exps, &vec![2, 1]);
        assert_eq!(coeff, &q(3));
        assert_eq!(grlex_cmp(&[2, 1], &[1, 2]), Ordering::Greater);
        assert_eq!(grlex_cmp(&[1, 1], &[3, 0]), Ordering::Less);
    }

    #[test]
    fn eval_exact() {
        let p = form(vec![t2(1, 2, 0), t2(-1, 0, 2)]);
        assert_eq!(p.eval(&[q(3), q(2)]), q(5));
        assert_eq!(p.eval(&[rat(1, 2), rat(1, 3)]), rat(5, 36));
    }

    #[test]
    fn gcd_shared_monomials() {
        let f = form(vec![t2(1, 2, 1)]);
        let g = form(vec![t2(1, 1, 2)]);
        assert_eq!(gcd_binary_forms(&f, &g).unwrap(), form(vec![t2(1, 1, 1)]));
    }

    #[test]
    fn gcd_coprime_forms() {
        // root sets {±i} and {±1} are disjoint
        let f = form(vec![t2(1, 2, 0), t2(1, 0, 2)]);
        let g = form(vec![t2(1, 2, 0), t2(-1, 0, 2)]);
        let d = gcd_binary_forms(&f, &g).unwrap();
        assert_eq!(d, P::constant(2, q(1)));
    }

    #[test]
    fn gcd_shared_linear_factor() {
        // (z0 - z1)^2 and (z0 - z1)(z0 + z1)
        let f = form(vec![t2(1, 2, 0), t2(-2, 1, 1), t2(1, 0, 2)]);
        let g = form(vec![t2(1, 2, 0), t2(-1, 0, 2)]);
        let d = gcd_binary_forms(&f, &g).unwrap();
        assert_eq!(d, form(vec![t2(1, 1, 0), t2(-1, 0, 1)]));
    }

    #[test]
    fn gcd_infinity_root() {
        let f = form(vec![t2(1, 1, 1)]);
        let g = form(vec![t2(1, 0, 2)]);
        assert_eq!(gcd_binary_forms(&f, &g).unwrap(), form(vec![t2(1, 0, 1)]));
    }

    #[test]
    fn gcd_with_zero_and_errors() {
        let f = form(vec![t2(2, 1, 0)]);
        let z = P::zero(2);
        assert_eq!(gcd_binary_forms(&f, &z).unwrap(), form(vec![t2(1, 1, 0)]));
        assert!(gcd_binary_forms(&z, &z).is_err());
    }

    #[test]
    fn resultant_examples() {
        let f = form(vec![t2(1, 2, 0), t2(-1, 0, 2)]);
        let g = form(vec![t2(1, 2, 0), t2(1, 0, 2)]);
        assert_eq!(resultant_binary(&f, &g).unwrap(), q(4));

        let z0 = form(vec![t2(1, 1, 0)]);
        let z1 = form(vec![t2(1, 0, 1)]);
        assert_eq!(resultant_binary(&z0, &z1).unwrap().abs(), q(1));

        let fz = form(vec![t2(1, 1, 1)]);
        let gz = form(vec![t2(1, 2, 0)]);
        assert_eq!(resultant_binary(&fz, &gz).unwrap(), q(0));

        assert!(resultant_binary(&z0, &P::zero(2)).is_err());
    }

    #[test]
    fn gcd_and_resultant_agree_on_random_forms() {
        let mut rng = Rng::new(0x9c0f);
        let sample = |rng: &mut Rng, d: u32| -> P {
            loop {
                let p = Poly::new(2, (0..=d).map(|i| (vec![i, d - i], q(rng.int_in(-9, 9)))))
                    .unwrap();
                if !p.is_zero() {
                    break p;
                }
            }
        };
        for round in 0..500 {
            let df = rng.below(6) as u32 + 1;
            let dg = rng.below(6) as u32 + 1;
            let f = sample(&mut rng, df);
            let g = sample(&mut rng, dg);
            let gcd_nontrivial = gcd_binary_forms(&f, &g).unwrap().degree().unwrap() >= 1;
            let res_zero = resultant_binary(&f, &g).unwrap().is_zero();
            assert_eq!(gcd_nontrivial, res_zero, "round {round}: {f} vs {g}");
        }
    }

    #[test]
    fn gcd_multiplicative_in_common_factor() {
        let mut rng = Rng::new(0x6cd);
        let sample = |rng: &mut Rng, d: u32| -> P {
            loop {
                let p = Poly::new(2, (0..=d).map(|i| (vec![i, d - i], q(rng.int_in(-5, 5)))))
                    .unwrap();
                if !p.is_zero() {
                    break p;
                }
            }
        };
        for _ in 0..100 {
            let (df, dg, dh) = (
                rng.below(4) as u32 + 1,
                rng.below(4) as u32 + 1,
                rng.below(3) as u32 + 1,
            );
            let f = sample(&mut rng, df);
            let g = sample(&mut rng, dg);
            let h = sample(&mut rng, dh);
            let lhs = gcd_binary_forms(&f.mul(&h), &g.mul(&h)).unwrap();
            let rhs = gcd_binary_forms(&f, &g).unwrap().mul(&h).monic();
            assert_eq!(lhs, rhs, "{f} {g} {h}");
        }
    }

    #[test]
    fn rational_roots() {
        // (z0 - 2 z1)(z0 + z1)
        let f = form(vec![t2(1, 2, 0), t2(-1, 1, 1), t2(-2, 0, 2)]);
        let (s, t) = rational_projective_root(&f).unwrap();
        assert!(f.eval(&[s, t]).is_zero());

        let g = form(vec![t2(1, 2, 0), t2(1, 0, 2)]);
        assert!(rational_projective_root(&g).is_none());

        let h = form(vec![t2(1, 1, 0)]);
        assert_eq!(rational_projective_root(&h), Some((q(0), q(1))));
        let h = form(vec![t2(1, 0, 1)]);
        assert_eq!(rational_projective_root(&h), Some((q(1), q(0))));

        let k = form(vec![t2(3, 1, 0), t2(-2, 0, 1)]);
        let (s, t) = rational_projective_root(&k).unwrap();
        assert_eq!(s / t, rat(2, 3));
    }

    #[test]
    fn line_restriction() {
        // f = z0 z2 restricted to z = s(1,0,0) + t(0,1,1) is s*t
        let f = Poly::<Int>::new(3, vec![(vec![1, 0, 1], q(1))]).unwrap();
        let u = [q(1), q(0), q(0)];
        let v = [q(0), q(1), q(1)];
        assert_eq!(f.restrict_to_line(&u, &v), form(vec![t2(1, 1, 1)]));
    }

    #[test]
    fn primitive_part_normalizes() {
        let p = form(vec![(vec![2, 0], rat(-4, 6)), (vec![0, 2], rat(2, 3))]);
        let prim = p.primitive_part();
        assert_eq!(prim, form(vec![t2(1, 2, 0), t2(-1, 0, 2)]));
    }

    #[test]
    fn json_round_trip() {
        let p = Poly::<Int>::new(
            3,
            vec![
                (vec![2, 1, 0], rat(-7, 3)),
                (vec![0, 1, 2], q(5)),
                (vec![1, 1, 1], q(1)),
            ],
        )
        .unwrap();
        let j = poly_to_json(&p);
        assert_eq!(poly_from_json(3, &j).unwrap(), p);

        let z = poly_from_json(4, &serde_json::json!([])).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.nvars(), 4);

        assert!(
            poly_from_json(2, &serde_json::json!([{ "coeff": "1/0", "exponents": [1, 0] }]))
                .is_err()
        );
        assert!(
            poly_from_json(2, &serde_json::json!([{ "coeff": "x", "exponents": [1, 0] }]))
                .is_err()
        );
        assert!(
            poly_from_json(2, &serde_json::json!([{ "coeff": "1", "exponents": [1] }])).is_err()
        );
    }
}
