//! Dense exact polynomials, discrete summation and the dilation test.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// `c_0 + c_1 x + ... + c_m x^m` with no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolynomialExact {
    coeffs: Vec<Rational>,
}

impl PolynomialExact {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c x^d`
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    /// `x`
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `T(alpha x)`
    pub fn dilate(&self, alpha: &Rational) -> Self {
        let mut scale = Rational::one();
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let out = c * &scale;
                    scale *= alpha;
                    out
                })
                .collect(),
        )
    }

    /// `T(x + shift)`
    pub fn shift(&self, shift: &Rational) -> Self {
        let lin = Self::new(vec![shift.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(Rational::one()), |acc, _| &acc * self)
    }
}

impl Add for &PolynomialExact {
    type Output = PolynomialExact;

    fn add(self, rhs: Self) -> PolynomialExact {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolynomialExact::new((0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &PolynomialExact {
    type Output = PolynomialExact;

    fn sub(self, rhs: Self) -> PolynomialExact {
        self + &(-rhs)
    }
}

impl Neg for &PolynomialExact {
    type Output = PolynomialExact;

    fn neg(self) -> PolynomialExact {
        PolynomialExact::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &PolynomialExact {
    type Output = PolynomialExact;

    fn mul(self, rhs: Self) -> PolynomialExact {
        if self.is_zero() || rhs.is_zero() {
            return PolynomialExact::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolynomialExact::new(out)
    }
}

impl fmt::Display for PolynomialExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{j}")?,
                (_, false) => write!(f, "{mag}*x^{j}")?,
            }
        }
        Ok(())
    }
}

fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for i in 0..n {
        let next = &row[i as usize] * BigInt::from(n - i) / BigInt::from(i + 1);
        row.push(next);
    }
    row
}

/// Power-sum polynomials `F_0..F_m` with `F_j(n) = 1^j + ... + n^j`.
///
/// Telescoping `(t + 1)^{j+1} - t^{j+1}` over `t = 1..n` gives
/// `(n + 1)^{j+1} - 1 = sum_{i <= j} C(j+1, i) F_i(n)`, solved for `F_j`.
pub fn power_sum_polynomials(max_degree: usize) -> Vec<PolynomialExact> {
    let mut sums: Vec<PolynomialExact> = Vec::with_capacity(max_degree + 1);
    let x_plus_one = PolynomialExact::from_integers(&[1, 1]);
    for j in 0..=max_degree {
        let binom = binomial_row(j as u32 + 1);
        let mut rhs = &x_plus_one.pow(j as u32 + 1) - &PolynomialExact::constant(Rational::one());
        for (i, f) in sums.iter().enumerate() {
            rhs = &rhs - &f.scale(&Rational::from_integer(binom[i].clone()));
        }
        sums.push(rhs.scale(&Rational::new(BigInt::one(), binom[j].clone())));
    }
    sums
}

/// `P` with `P(n) = p(1) + ... + p(n)` for every integer `n >= 0`.
pub fn summation_polynomial(p: &PolynomialExact) -> PolynomialExact {
    let Some(deg) = p.degree() else {
        return PolynomialExact::zero();
    };
    power_sum_polynomials(deg)
        .iter()
        .zip(p.coeffs())
        .fold(PolynomialExact::zero(), |acc, (f, c)| &acc + &f.scale(c))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialResult {
    /// `T` is identically zero.
    Zero,
    /// `T = c x^d` with `lambda = alpha^d`.
    Monomial { c: Rational, d: usize },
    /// Some nonzero coefficient `c_j` has `alpha^j != lambda`.
    NotEigenfunction { degree: usize },
}

/// Decides whether `T(alpha x) = lambda T(x)` identically by comparing
/// `c_j alpha^j` with `lambda c_j` coefficient by coefficient.
pub fn dilation_monomial_test(t: &PolynomialExact, alpha: &Rational, lambda: &Rational) -> Result<MonomialResult> {
    if !alpha.is_positive() || alpha.is_one() {
        return Err(Error::InvalidParameter(format!(
            "dilation factor must be positive and different from 1, got {alpha}"
        )));
    }
    if t.is_zero() {
        return Ok(MonomialResult::Zero);
    }
    let mut power = Rational::one();
    let mut survivor = None;
    for (j, c) in t.coeffs().iter().enumerate() {
        if !c.is_zero() {
            if &power != lambda {
                return Ok(MonomialResult::NotEigenfunction { degree: j });
            }
            // alpha^j are pairwise distinct, so at most one j gets here
            survivor = Some((c.clone(), j));
        }
        power *= alpha;
    }
    let (c, d) = survivor.expect("nonzero polynomial has a nonzero coefficient");
    Ok(MonomialResult::Monomial { c, d })
}

/// Decides whether `a_n = p(n)` is a Galileo sequence with ratio `k`.
///
/// Applies the dilation test to the summation polynomial with `alpha = 2`;
/// a `Monomial { c, d }` verdict means `p(n) = c (n^d - (n-1)^d)` and
/// `k = 2^d`.
pub fn classify_polynomial(p: &PolynomialExact, k: &Rational) -> Result<MonomialResult> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if k <= &Rational::one() {
        return Err(Error::RatioNotAboveOne { k: k.to_string() });
    }
    dilation_monomial_test(&summation_polynomial(p), &crate::int(2), k)
}

/// Expanded term polynomial `c (x^d - (x-1)^d)`.
pub fn difference_of_powers(c: &Rational, d: u32) -> PolynomialExact {
    let xd = PolynomialExact::monomial(Rational::one(), d as usize);
    let shifted = xd.shift(&crate::int(-1));
    (&xd - &shifted).scale(c)
}
