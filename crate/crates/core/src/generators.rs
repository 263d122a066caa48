//! Concrete Galileo families as exact prefixes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed};

use crate::{int, Error, Rational, Result, SequencePrefix};

/// Parameters of `a_n = C (n^d - (n-1)^d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFamilyParams {
    pub c: Rational,
    pub d: u32,
}

impl PolyFamilyParams {
    /// `d >= 1` keeps `k = 2^d > 1`; `C > 0` keeps the terms positive.
    pub fn new(c: Rational, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter(
                "d must be at least 1 (d = 0 gives k = 1)".into(),
            ));
        }
        if !c.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "C = {c} must be positive for a positive sequence"
            )));
        }
        Ok(Self { c, d })
    }

    pub fn k(&self) -> Rational {
        Rational::from_integer(BigInt::one() << self.d)
    }
}

fn pow_int(base: u64, exp: u32) -> BigInt {
    Pow::pow(BigInt::from(base), exp)
}

pub fn poly_family(params: &PolyFamilyParams, len: usize) -> Result<SequencePrefix> {
    if len == 0 {
        return Err(Error::InvalidParameter("length must be at least 1".into()));
    }
    let d = params.d;
    let terms = (1..=len as u64)
        .map(|n| &params.c * Rational::from_integer(pow_int(n, d) - pow_int(n - 1, d)))
        .collect();
    SequencePrefix::new(terms, params.k())
}

/// Integer ratio `k >= 4` for the Tattersall floor recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TattersallParams {
    pub k: u64,
}

impl TattersallParams {
    pub fn new(k: u64) -> Result<Self> {
        if k <= 3 {
            return Err(Error::InvalidParameter(format!(
                "Tattersall recursion needs k > 3, got {k}"
            )));
        }
        Ok(Self { k })
    }
}

/// `a_1 = 1`, `a_2 = k - 1`, then for `n >= 2`
/// `a_{2n-1} = floor((k a_n - 1) / 2)` and `a_{2n} = floor(k a_n / 2) + 1`.
///
/// The recursion is not applied at `n = 1`: for odd `k` it would give
/// `a_2 = floor(k/2) + 1 != k - 1`.
pub fn tattersall(params: TattersallParams, len: usize) -> Result<SequencePrefix> {
    if len < 2 {
        return Err(Error::InvalidParameter(
            "Tattersall prefixes need length at least 2".into(),
        ));
    }
    let k = BigInt::from(params.k);
    let two = BigInt::from(2);
    let mut terms: Vec<BigInt> = Vec::with_capacity(len);
    terms.push(BigInt::one());
    terms.push(&k - 1);
    while terms.len() < len {
        // next index i = terms.len() + 1 is odd, parent n = (i + 1) / 2
        let parent = &terms[(terms.len() + 2) / 2 - 1];
        let ka = &k * parent;
        let left = Integer::div_floor(&(&ka - 1u32), &two);
        let right = Integer::div_floor(&ka, &two) + 1u32;
        terms.push(left);
        if terms.len() < len {
            terms.push(right);
        }
    }
    SequencePrefix::new(
        terms.into_iter().map(Rational::from_integer).collect(),
        int(params.k as i64),
    )
}

/// Builds a prefix from `a_1`, `k` and a splitting-factor callback.
///
/// `a_2 = (k - 1) a_1`; for `n >= 2` the callback is queried exactly once and
/// must return positive `(b_n, c_n)` with `b_n + c_n = k`, giving
/// `a_{2n-1} = b_n a_n` and `a_{2n} = c_n a_n`. A bad pair aborts with the
/// node index. The callback must be deterministic.
pub fn from_splitting<F>(a1: Rational, k: Rational, mut factors: F, len: usize) -> Result<SequencePrefix>
where
    F: FnMut(u64) -> (Rational, Rational),
{
    if len == 0 {
        return Err(Error::InvalidParameter("length must be at least 1".into()));
    }
    if !a1.is_positive() {
        return Err(Error::NonPositiveTerm { index: 1 });
    }
    if k <= Rational::one() {
        return Err(Error::RatioNotAboveOne { k: k.to_string() });
    }
    let mut terms = Vec::with_capacity(len);
    terms.push(a1);
    if len > 1 {
        terms.push((&k - Rational::one()) * &terms[0]);
    }
    while terms.len() < len {
        let node = (terms.len() as u64 + 2) / 2;
        let (b, c) = factors(node);
        validate_pair(node, &b, &c, &k)?;
        let parent = terms[node as usize - 1].clone();
        terms.push(b * &parent);
        if terms.len() < len {
            terms.push(c * parent);
        }
    }
    SequencePrefix::new(terms, k)
}

pub(crate) fn validate_pair(node: u64, b: &Rational, c: &Rational, k: &Rational) -> Result<()> {
    if !b.is_positive() || !c.is_positive() {
        return Err(Error::InvalidSplitting {
            node,
            reason: format!("factors ({b}, {c}) must both be positive"),
        });
    }
    if &(b + c) != k {
        return Err(Error::InvalidSplitting {
            node,
            reason: format!("{b} + {c} != k = {k}"),
        });
    }
    Ok(())
}

/// `b_n = c_n = k / 2`; for `k = 4` this is the equal-children tree.
pub fn equal_split(k: Rational) -> impl Fn(u64) -> (Rational, Rational) {
    move |_| {
        let half = &k / int(2);
        (half.clone(), half)
    }
}

/// `(b_n, c_n) = (1, k - 1)`; for `k = 4` this is the unequal-children tree.
pub fn unit_left_split(k: Rational) -> impl Fn(u64) -> (Rational, Rational) {
    move |_| (Rational::one(), &k - Rational::one())
}

/// Splitting factors of `C (n^d - (n-1)^d)`, independent of `C`.
pub fn poly_split(d: u32) -> impl Fn(u64) -> (Rational, Rational) {
    move |n| {
        let parent = pow_int(n, d) - pow_int(n - 1, d);
        let left = pow_int(2 * n - 1, d) - pow_int(2 * n - 2, d);
        let right = pow_int(2 * n, d) - pow_int(2 * n - 1, d);
        (Rational::new(left, parent.clone()), Rational::new(right, parent))
    }
}

/// Factors of the odd numbers: `((4n-3)/(2n-1), (4n-1)/(2n-1))`.
pub fn odd_number_split(n: u64) -> (Rational, Rational) {
    let den = BigInt::from(2 * n - 1);
    (
        Rational::new(BigInt::from(4 * n - 3), den.clone()),
        Rational::new(BigInt::from(4 * n - 1), den),
    )
}

/// `a_1 = 1` and `a_n = 3 * 2^floor(log2(n - 1))` for `n >= 2`, with `k = 4`.
pub fn closed_equal_children(len: usize) -> Result<SequencePrefix> {
    if len < 2 {
        return Err(Error::InvalidParameter("length must be at least 2".into()));
    }
    let terms = (1..=len as u64).map(equal_children_term).collect();
    SequencePrefix::new(terms, int(4))
}

pub fn equal_children_term(n: u64) -> Rational {
    if n == 1 {
        return Rational::one();
    }
    let exp = 63 - (n - 1).leading_zeros();
    Rational::from_integer(BigInt::from(3) << exp)
}

/// `a_n = 3^{s2(n - 1)}` with `k = 4`.
pub fn closed_unequal_children(len: usize) -> Result<SequencePrefix> {
    if len == 0 {
        return Err(Error::InvalidParameter("length must be at least 1".into()));
    }
    let terms = (1..=len as u64).map(unequal_children_term).collect();
    SequencePrefix::new(terms, int(4))
}

pub fn unequal_children_term(n: u64) -> Rational {
    Rational::from_integer(pow_int(3, digit_sum_base2(n - 1)))
}

/// Number of ones in the binary expansion of `m`.
pub fn digit_sum_base2(m: u64) -> u32 {
    m.count_ones()
}
