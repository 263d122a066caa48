//! Exact generation, verification and analysis of Galileo sequences.
//!
//! A Galileo sequence is a positive sequence `a_1, a_2, ...` whose partial
//! sums satisfy `S_{2n} = k * S_n` for a fixed ratio `k > 1`. Everything on
//! the discrete side is computed over [`Rational`] so that the global
//! relation and its local form `a_{2n-1} + a_{2n} = k * a_n` can be compared
//! exactly.
//!
//! Module map:
//! - [`sequence`]: prefixes, partial sums, the global and local verifiers
//! - [`generators`]: polynomial, Tattersall and splitting-factor families
//! - [`tree`]: splitting-factor extraction, tree paths and path products
//! - [`analysis`]: dilation/monomial test, polynomial classifier, growth bounds
//! - [`search`]: exhaustive enumeration of monotone integer prefixes
//! - [`continuous`]: Galileo functions and quadrature checks of the integral relation
//! - [`bfile`]: the `index value` line format shared by every tool

pub mod analysis;
pub mod bfile;
pub mod continuous;
pub mod error;
pub mod generators;
pub mod search;
pub mod sequence;
pub mod tree;

pub use error::{Error, Result};
pub use sequence::{
    check_global, check_local, partial_sums, Failure, PartialSums, Relation, SequencePrefix, VerificationReport,
};

/// Exact rational scalar used throughout the discrete modules.
pub type Rational = num_rational::BigRational;

/// Shorthand for building a [`Rational`] from a small integer.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Shorthand for building a [`Rational`] from a small fraction.
///
/// Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
