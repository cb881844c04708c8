//! Gelfand–Kirillov dimensions of simple highest weight modules over the
//! classical Lie algebras `sl(n)`, `so(2n+1)`, `sp(2n)` and `so(2n)`, and
//! reducibility of scalar-type generalized Verma modules for every maximal
//! parabolic.
//!
//! The core computations are generic over an exact [`Scalar`]. The aliases
//! below pick the concrete rational types: [`Rational`] (arbitrary
//! precision) is what the CLI and the sweeps use, [`Rational64`] is a
//! faster choice when the coordinates are known to stay small.

pub mod closedform;
pub mod error;
pub mod gkdim;
pub mod rootdata;
pub mod scalar;
pub mod sweep;
pub mod tableaux;

pub use error::{Error, Result};
pub use rootdata::{LieAlgebra, LieType, ParabolicChoice, Root, SpinConvention};
pub use scalar::Scalar;
pub use tableaux::{Partition, RowParityCounts};

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Rational with `i64` numerator and denominator.
pub type Rational64 = num_rational::Ratio<i64>;
/// Rational with `i128` numerator and denominator.
pub type Rational128 = num_rational::Ratio<i128>;

/// A weight with arbitrary-precision coordinates.
pub type Weight = rootdata::Weight<Rational>;
/// A weight with `i64` rational coordinates.
pub type Weight64 = rootdata::Weight<Rational64>;

pub type ClassDecomposition = gkdim::ClassDecomposition<Rational>;
pub type ReducibilitySet = closedform::ReducibilitySet<Rational>;
pub type HalfLattice = closedform::HalfLattice<Rational>;
