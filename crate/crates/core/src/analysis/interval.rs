//! Fixed-point intervals with outward (directed) rounding.
//!
//! An [`Interval`] holds integers `lo <= hi` standing for
//! `[lo * 2^-bits, hi * 2^-bits]`. Every operation rounds the lower end
//! toward negative infinity and the upper end toward positive infinity, so
//! the true value of any expression built from these operations stays
//! inside the result.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    bits: u32,
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    Integer::div_floor(a, b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -Integer::div_floor(&-a, b)
}

impl Interval {
    pub fn exact_integer(v: &BigInt, bits: u32) -> Self {
        let scaled = v << bits;
        Self {
            lo: scaled.clone(),
            hi: scaled,
            bits,
        }
    }

    pub fn from_rational(q: &Rational, bits: u32) -> Self {
        let num = q.numer() << bits;
        Self {
            lo: floor_div(&num, q.denom()),
            hi: ceil_div(&num, q.denom()),
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn lower(&self) -> Rational {
        Rational::new(self.lo.clone(), BigInt::one() << self.bits)
    }

    pub fn upper(&self) -> Rational {
        Rational::new(self.hi.clone(), BigInt::one() << self.bits)
    }

    /// Width in units of `2^-bits`.
    pub fn width_ulps(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lower() <= q && q <= &self.upper()
    }

    /// `Some(sign)` when every point of the interval has that sign.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.bits, rhs.bits);
        Self {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
            bits: self.bits,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -&self.hi,
            hi: -&self.lo,
            bits: self.bits,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale_int(&self, s: &BigInt) -> Self {
        let (a, b) = (&self.lo * s, &self.hi * s);
        let (lo, hi) = if s.is_negative() { (b, a) } else { (a, b) };
        Self {
            lo,
            hi,
            bits: self.bits,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.bits, rhs.bits);
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let min = products.iter().min().expect("four products");
        let max = products.iter().max().expect("four products");
        let unit = BigInt::one() << self.bits;
        Self {
            lo: floor_div(min, &unit),
            hi: ceil_div(max, &unit),
            bits: self.bits,
        }
    }

    /// Quotient by an interval that excludes zero; `None` otherwise.
    pub fn div(&self, rhs: &Self) -> Option<Self> {
        debug_assert_eq!(self.bits, rhs.bits);
        if !(rhs.lo.is_positive() || rhs.hi.is_negative()) {
            return None;
        }
        let a = [&self.lo << self.bits, &self.hi << self.bits];
        let quotients_lo = [
            floor_div(&a[0], &rhs.lo),
            floor_div(&a[0], &rhs.hi),
            floor_div(&a[1], &rhs.lo),
            floor_div(&a[1], &rhs.hi),
        ];
        let quotients_hi = [
            ceil_div(&a[0], &rhs.lo),
            ceil_div(&a[0], &rhs.hi),
            ceil_div(&a[1], &rhs.lo),
            ceil_div(&a[1], &rhs.hi),
        ];
        Some(Self {
            lo: quotients_lo.into_iter().min().expect("four quotients"),
            hi: quotients_hi.into_iter().max().expect("four quotients"),
            bits: self.bits,
        })
    }
}

/// `2 atanh(num / den)` for `0 <= num / den <= 1/3`.
fn two_atanh(num: &BigInt, den: &BigInt, bits: u32) -> Interval {
    let unit = BigInt::one() << bits;
    let scaled = num << bits;
    let t_lo = floor_div(&scaled, den);
    let t_hi = ceil_div(&scaled, den);
    let sq_num = (num * num) << bits;
    let sq_den = den * den;
    let t2_lo = floor_div(&sq_num, &sq_den);
    let t2_hi = ceil_div(&sq_num, &sq_den);

    let (mut sum_lo, mut sum_hi) = (BigInt::zero(), BigInt::zero());
    let (mut pw_lo, mut pw_hi) = (t_lo, t_hi);
    let mut odd = BigInt::one();
    loop {
        sum_lo += floor_div(&pw_lo, &odd);
        sum_hi += ceil_div(&pw_hi, &odd);
        pw_lo = floor_div(&(&pw_lo * &t2_lo), &unit);
        pw_hi = ceil_div(&(&pw_hi * &t2_hi), &unit);
        odd += 2;
        if pw_hi <= BigInt::one() {
            break;
        }
    }
    // tail: sum_{i >= j} t^{2i+1}/(2i+1) <= t^{2j+1} / ((2j+1)(1 - t^2)), 1 - t^2 >= 8/9
    sum_hi += ceil_div(&(&pw_hi * 9u32), &(&odd * 8u32));
    Interval {
        lo: sum_lo << 1u32,
        hi: sum_hi << 1u32,
        bits,
    }
}

/// Natural logarithms of positive rationals at a fixed precision.
#[derive(Debug, Clone)]
pub struct LogBounds {
    bits: u32,
    ln2: Interval,
}

impl LogBounds {
    pub fn new(bits: u32) -> Self {
        Self {
            bits,
            ln2: two_atanh(&BigInt::one(), &BigInt::from(3), bits),
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn ln2(&self) -> &Interval {
        &self.ln2
    }

    /// Encloses `ln x` by writing `x = 2^e y` with `1 <= y < 2` and
    /// `ln y = 2 atanh((y - 1) / (y + 1))`.
    ///
    /// Panics if `x <= 0`.
    pub fn ln(&self, x: &Rational) -> Interval {
        assert!(x.is_positive(), "logarithm of non-positive value");
        let (p, q) = (x.numer(), x.denom());
        let mut e = p.bits() as i64 - q.bits() as i64;
        let (mut yn, mut yd) = shift_pair(p, q, e);
        if yn < yd {
            e -= 1;
            (yn, yd) = shift_pair(p, q, e);
        }
        let ln_y = two_atanh(&(&yn - &yd), &(&yn + &yd), self.bits);
        self.ln2.scale_int(&BigInt::from(e)).add(&ln_y)
    }

    pub fn ln_int(&self, n: u64) -> Interval {
        self.ln(&Rational::from_integer(n.into()))
    }
}

/// `(p, q * 2^e)` for `e >= 0`, `(p * 2^-e, q)` otherwise.
fn shift_pair(p: &BigInt, q: &BigInt, e: i64) -> (BigInt, BigInt) {
    if e >= 0 {
        (p.clone(), q << e as u64)
    } else {
        (p << (-e) as u64, q.clone())
    }
}
