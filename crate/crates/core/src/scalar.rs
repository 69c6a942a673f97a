//! Scalar abstraction for the exact kernels.
//!
//! Every algorithm in the matrix, normal-form, polynomial and Gröbner
//! modules is generic over an integer scalar implementing [`LatticeInt`];
//! rationals are always `Ratio<T>` over the same scalar. The crate root
//! pins the concrete arbitrary-precision aliases ([`crate::Int`],
//! [`crate::Rat`]). Fixed-width types such as `i64` satisfy the bound and
//! are handy in tests, but the public domain types use big integers so
//! that no operation can overflow. There is no floating point anywhere.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;

/// An exact integer scalar: ℤ with Euclidean division, gcd and sign.
pub trait LatticeInt:
    Integer + Signed + Clone + Hash + Debug + Display + From<i64> + 'static
{
}

impl<T> LatticeInt for T where
    T: Integer + Signed + Clone + Hash + Debug + Display + From<i64> + 'static
{
}

/// Shorthand for the rational type built over a scalar.
pub type RatOf<T> = Ratio<T>;

/// Rational from an integer literal.
pub fn rat_int<T: LatticeInt>(n: i64) -> Ratio<T> {
    Ratio::from_integer(T::from(n))
}

/// Rational `n/d` in lowest terms (`d` must be nonzero).
pub fn rat<T: LatticeInt>(n: i64, d: i64) -> Ratio<T> {
    Ratio::new(T::from(n), T::from(d))
}

/// `base^exp` for a nonzero rational base and a (possibly negative) integer exponent.
pub fn rat_pow<T: LatticeInt>(base: &Ratio<T>, exp: i64) -> Ratio<T> {
    assert!(!base.is_zero(), "zero base with integer exponent");
    let mut acc: Ratio<T> = Ratio::from_integer(T::one());
    let positive = if exp >= 0 {
        base.clone()
    } else {
        acc.clone() / base.clone()
    };
    let mut n = exp.unsigned_abs();
    let mut sq = positive;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * sq.clone();
        }
        sq = sq.clone() * sq;
        n >>= 1;
    }
    acc
}

use num_traits::Zero;

/// Prime factorization of a positive integer by trial division.
pub fn factorize<T: LatticeInt>(n: &T) -> Vec<(T, u32)> {
    assert!(n.is_positive(), "factorize expects a positive integer");
    let mut n = n.clone();
    let mut out: Vec<(T, u32)> = Vec::new();
    let mut d = T::from(2);
    while (d.clone() * d.clone()) <= n {
        let mut e = 0u32;
        while n.is_multiple_of(&d) {
            n = n / d.clone();
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d = d + T::one();
    }
    if n > T::one() {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of a positive integer.
pub fn divisors<T: LatticeInt>(n: &T) -> Vec<T> {
    let mut out = vec![T::one()];
    for (p, e) in factorize(n) {
        let base: Vec<T> = out.clone();
        let mut power = T::one();
        for _ in 0..e {
            power = power * p.clone();
            out.extend(base.iter().map(|d| d.clone() * power.clone()));
        }
    }
    out.sort();
    out
}
