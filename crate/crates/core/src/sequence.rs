//! Sequence prefixes, partial sums and the two defining relations.
//!
//! A prefix of length `N` can only witness the relations for `n <= N / 2`;
//! every [`VerificationReport`] records that range so an unverifiable tail is
//! never mistaken for a verified one.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// Finite prefix `a_1..a_N` of a candidate Galileo sequence with ratio `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePrefix {
    terms: Vec<Rational>,
    k: Rational,
}

impl SequencePrefix {
    /// Builds a prefix, rejecting empty input, non-positive terms and `k <= 1`.
    pub fn new(terms: Vec<Rational>, k: Rational) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptyPrefix);
        }
        if k <= Rational::one() {
            return Err(Error::RatioNotAboveOne { k: k.to_string() });
        }
        if let Some(pos) = terms.iter().position(|t| !t.is_positive()) {
            return Err(Error::NonPositiveTerm { index: pos + 1 });
        }
        Ok(Self { terms, k })
    }

    pub fn from_integers(terms: &[i64], k: i64) -> Result<Self> {
        Self::new(terms.iter().map(|&t| crate::int(t)).collect(), crate::int(k))
    }

    pub fn terms(&self) -> &[Rational] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Rational> {
        self.terms
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// 1-based term access: `term(1)` is `a_1`.
    pub fn term(&self, n: usize) -> &Rational {
        &self.terms[n - 1]
    }

    /// Largest `n` for which both relations can be checked, `floor(N / 2)`.
    pub fn verifiable_up_to(&self) -> usize {
        self.terms.len() / 2
    }

    /// True when every term and `k` are integers.
    pub fn is_integer_sequence(&self) -> bool {
        self.k.is_integer() && self.terms.iter().all(|t| t.is_integer())
    }

    pub fn is_non_decreasing(&self) -> bool {
        self.terms.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.terms.windows(2).all(|w| w[0] < w[1])
    }

    /// Copy truncated to the first `len` terms.
    pub fn truncated(&self, len: usize) -> Result<Self> {
        Self::new(self.terms[..len.min(self.terms.len())].to_vec(), self.k.clone())
    }
}

/// Exact partial sums `S_1..S_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSums(Vec<Rational>);

impl PartialSums {
    /// 1-based access: `get(n)` is `S_n`.
    pub fn get(&self, n: usize) -> &Rational {
        &self.0[n - 1]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn partial_sums(prefix: &SequencePrefix) -> PartialSums {
    let mut acc = Rational::zero();
    PartialSums(
        prefix
            .terms
            .iter()
            .map(|t| {
                acc += t;
                acc.clone()
            })
            .collect(),
    )
}

/// Which identity a report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `S_{2n} = k S_n`
    Global,
    /// `a_{2n-1} + a_{2n} = k a_n`
    Local,
    /// `S_{2^r m} = k^r S_m` for `m` odd
    ScaleInvariance,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Global => "global",
            Relation::Local => "local",
            Relation::ScaleInvariance => "scale-invariance",
        })
    }
}

/// A failing index together with the exact residual `lhs - rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub index: usize,
    pub residual: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub relation: Relation,
    /// Indices `1..=verified_up_to` were examined.
    pub verified_up_to: usize,
    /// Every failing index in increasing order; empty on success.
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

/// `lhs == k * rhs` by cross-multiplication, skipping the gcd of a
/// normalized product.
fn equals_k_times(lhs: &Rational, k: &Rational, rhs: &Rational) -> bool {
    lhs.numer() * k.denom() * rhs.denom() == k.numer() * rhs.numer() * lhs.denom()
}

/// Checks `S_{2n} = k S_n` for every `n` with `2n <= N`.
pub fn check_global(prefix: &SequencePrefix) -> VerificationReport {
    let sums = partial_sums(prefix);
    let upto = prefix.verifiable_up_to();
    let failures = (1..=upto)
        .filter_map(|n| {
            let (lhs, rhs) = (sums.get(2 * n), sums.get(n));
            if equals_k_times(lhs, &prefix.k, rhs) {
                return None;
            }
            Some(Failure {
                index: n,
                residual: lhs - &prefix.k * rhs,
            })
        })
        .collect();
    VerificationReport {
        relation: Relation::Global,
        verified_up_to: upto,
        failures,
    }
}

/// Checks `a_{2n-1} + a_{2n} = k a_n` for every `n` with `2n <= N`.
pub fn check_local(prefix: &SequencePrefix) -> VerificationReport {
    let upto = prefix.verifiable_up_to();
    let failures = (1..=upto)
        .filter_map(|n| {
            let pair = prefix.term(2 * n - 1) + prefix.term(2 * n);
            if equals_k_times(&pair, &prefix.k, prefix.term(n)) {
                return None;
            }
            Some(Failure {
                index: n,
                residual: pair - &prefix.k * prefix.term(n),
            })
        })
        .collect();
    VerificationReport {
        relation: Relation::Local,
        verified_up_to: upto,
        failures,
    }
}
