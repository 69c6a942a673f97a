//! Exact-arithmetic toolkit for fans of smooth compact toric varieties and
//! for the spaces of polynomial morphisms from a complex projective space
//! into such a variety, presented in Cox homogeneous coordinates.
//!
//! The crate covers:
//!
//! - fan validation (simplicial, smooth, complete) with a built-in catalog
//!   and a JSON file format;
//! - primitive collections of edge generators and the decomposition of the
//!   exceptional set `Y` they induce;
//! - the divisor class group as a lattice cokernel, monomial degrees, the
//!   morphism multidegree condition and membership in the quotient group `G`;
//! - exact homogeneous polynomial algebra over the rationals: binary-form
//!   gcd and resultants, and a Buchberger engine for common-zero tests;
//! - verification of candidate morphisms (the values must avoid `Y` away
//!   from the origin), equality of candidates up to `G`, seeded sampling;
//! - the homological stability range for morphism spaces and the dimension
//!   bookkeeping of the underlying discriminant filtration.
//!
//! All arithmetic is exact: integers are arbitrary precision and rationals
//! are reduced fractions. The numeric kernels are generic over the scalar
//! type through [`scalar::LatticeInt`]; the aliases below pin the concrete
//! types used by the domain layer.

pub mod error;
pub mod fan;
pub mod grading;
pub mod groebner;
pub mod lp;
pub mod matrix;
pub mod morphism;
pub mod poly;
pub mod primitive;
pub mod rng;
pub mod scalar;
pub mod snf;
pub mod stability;

/// Exact integer scalar used by the domain types.
pub type Int = num_bigint::BigInt;
/// Exact rational scalar: reduced fraction with positive denominator.
pub type Rat = num_rational::BigRational;
/// Integer matrix over [`Int`].
pub type IntMatrix = matrix::Matrix<Int>;
/// Homogeneous polynomial with [`Rat`] coefficients.
pub type HomogPoly = poly::Poly<Int>;

pub use error::{Error, Result};
pub use fan::{Cone, Fan, ValidationReport};
pub use grading::{ClassGroup, DivisorClass, GElement, MultiDegree};
pub use groebner::{IdealBasis, ZeroLocusVerdict};
pub use morphism::{CollectionStatus, MorphismCandidate, StabilizationStep, Verdict, VerdictStatus};
pub use primitive::{PrimitiveCollection, YDecomposition};
pub use snf::SnfResult;
pub use stability::{BidegreeProfile, FiltrationProfile, FiltrationStage, StabilityReport};
