//! Scale invariance and power-law growth bounds for monotone integer solutions.
//!
//! With `d = log2 k` the bounds are
//! `C1 n^d <= S_n <= C2 n^d` and `D1 n^(d-1) <= a_n <= D2 n^(d-1)` where
//! `C1 = S_1 / 2^d = S_1 / k`, `C2 = S_1 k`, `D2 = (k - 1) C2` and
//! `D1 = (k - 1) C1 4^(1-d) = 4 (k - 1) C1 / k^2`, lowered to `a_1` when the
//! first term would violate it. All four constants are exact rationals; only
//! `n^d` is irrational in general, and it is enclosed with directed rounding.

use std::cmp::Ordering;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Pow, ToPrimitive, Zero};

use super::interval::{Interval, LogBounds};
use crate::{
    check_global, partial_sums, Error, Failure, Rational, Relation, Result, SequencePrefix, VerificationReport,
};

/// Splits `n = 2^r m` with `m` odd.
pub fn odd_part_decomposition(n: u64) -> Result<(u32, u64)> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let r = n.trailing_zeros();
    Ok((r, n >> r))
}

/// Checks `S_n = k^r S_m` for every `n <= N`, where `n = 2^r m` with `m` odd.
///
/// This is the exact form of `S_n = c(m) n^d` with `c(m) = S_m / m^d`.
pub fn scale_invariance_check(prefix: &SequencePrefix) -> VerificationReport {
    let sums = partial_sums(prefix);
    let k = prefix.k();
    let failures = (1..=prefix.len() as u64)
        .filter_map(|n| {
            let (r, m) = odd_part_decomposition(n).expect("n >= 1");
            let predicted = Pow::pow(k, r) * sums.get(m as usize);
            let residual = sums.get(n as usize) - predicted;
            (!residual.is_zero()).then_some(Failure {
                index: n as usize,
                residual,
            })
        })
        .collect();
    VerificationReport {
        relation: Relation::ScaleInvariance,
        verified_up_to: prefix.len(),
        failures,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundStatus {
    Holds,
    Violated,
    /// Not decided at the largest precision tried.
    Indeterminate,
}

impl fmt::Display for BoundStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundStatus::Holds => "holds",
            BoundStatus::Violated => "violated",
            BoundStatus::Indeterminate => "indeterminate",
        })
    }
}

/// Which value was used for `D1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerTermConstant {
    /// `(k - 1) C1 4^(1-d)` already covers `n = 1`.
    Proof,
    /// Lowered to `a_1` so that `n = 1` is covered.
    FirstTerm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexRecord {
    pub n: u64,
    pub sum_lower: BoundStatus,
    pub sum_upper: BoundStatus,
    pub term_lower: BoundStatus,
    pub term_upper: BoundStatus,
    /// Precision that decided this index; 0 when `n^d` was rational.
    pub precision_bits: u32,
}

impl IndexRecord {
    pub fn statuses(&self) -> [BoundStatus; 4] {
        [self.sum_lower, self.sum_upper, self.term_lower, self.term_upper]
    }

    pub fn all_hold(&self) -> bool {
        self.statuses().iter().all(|s| *s == BoundStatus::Holds)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub k: Rational,
    /// `log2 k` rounded to `f64`, for display.
    pub exponent: f64,
    /// `Some(d)` when `k = 2^d`.
    pub exact_exponent: Option<u32>,
    pub c1: Rational,
    pub c2: Rational,
    pub d1: Rational,
    pub d2: Rational,
    pub d1_choice: LowerTermConstant,
    pub records: Vec<IndexRecord>,
    pub precision_bits: u32,
    pub max_precision_used: u32,
}

impl GrowthReport {
    pub fn all_hold(&self) -> bool {
        self.records.iter().all(IndexRecord::all_hold)
    }

    pub fn count(&self, status: BoundStatus) -> usize {
        self.records
            .iter()
            .map(|r| r.statuses().iter().filter(|s| **s == status).count())
            .sum()
    }

    pub fn first_problem(&self) -> Option<&IndexRecord> {
        self.records.iter().find(|r| !r.all_hold())
    }

    /// `key = value` summary lines, followed by one line per index when
    /// `per_index` is set.
    pub fn to_records(&self, per_index: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "k = {}", self.k);
        let _ = writeln!(out, "exponent = {}", self.exponent);
        let _ = writeln!(out, "C1 = {}", self.c1);
        let _ = writeln!(out, "C2 = {}", self.c2);
        let _ = writeln!(out, "D1 = {}", self.d1);
        let _ = writeln!(
            out,
            "D1_choice = {}",
            match self.d1_choice {
                LowerTermConstant::Proof => "proof",
                LowerTermConstant::FirstTerm => "first-term",
            }
        );
        let _ = writeln!(out, "D2 = {}", self.d2);
        let _ = writeln!(out, "indices = {}", self.records.len());
        let _ = writeln!(out, "holds = {}", self.count(BoundStatus::Holds));
        let _ = writeln!(out, "violated = {}", self.count(BoundStatus::Violated));
        let _ = writeln!(out, "indeterminate = {}", self.count(BoundStatus::Indeterminate));
        let _ = writeln!(out, "precision_bits = {}", self.precision_bits);
        let _ = writeln!(out, "max_precision_used = {}", self.max_precision_used);
        if per_index {
            for r in &self.records {
                let _ = writeln!(
                    out,
                    "n={} sum_lower={} sum_upper={} term_lower={} term_upper={} precision={}",
                    r.n, r.sum_lower, r.sum_upper, r.term_lower, r.term_upper, r.precision_bits
                );
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthOptions {
    /// Starting precision in fractional bits.
    pub precision_bits: u32,
    /// Precision doubles on indeterminate comparisons up to this cap.
    pub max_precision_bits: u32,
}

impl Default for GrowthOptions {
    fn default() -> Self {
        Self {
            precision_bits: 128,
            max_precision_bits: 2048,
        }
    }
}

impl GrowthOptions {
    pub fn with_precision(precision_bits: u32) -> Self {
        Self {
            precision_bits,
            max_precision_bits: precision_bits.max(Self::default().max_precision_bits),
        }
    }
}

fn exact_log2(v: &BigInt) -> Option<u32> {
    let bits = v.bits();
    (bits > 0 && v == &(BigInt::one() << (bits - 1))).then(|| (bits - 1) as u32)
}

/// The four comparisons for one index, each written as `lhs <= coeff * n^e`
/// or `lhs >= coeff * n^e`.
struct Comparisons<'a> {
    s: &'a Rational,
    a: &'a Rational,
    c1: &'a Rational,
    c2: &'a Rational,
    d1: &'a Rational,
    d2: &'a Rational,
}

impl Comparisons<'_> {
    fn exact(&self, nd: &Rational, nd1: &Rational) -> [BoundStatus; 4] {
        let verdict = |ok: bool| if ok { BoundStatus::Holds } else { BoundStatus::Violated };
        [
            verdict(&(self.c1 * nd) <= self.s),
            verdict(self.s <= &(self.c2 * nd)),
            verdict(&(self.d1 * nd1) <= self.a),
            verdict(self.a <= &(self.d2 * nd1)),
        ]
    }

    /// `e_sum` and `e_term` enclose `d ln n` and `(d - 1) ln n`.
    fn enclosed(&self, logs: &LogBounds, e_sum: &Interval, e_term: &Interval) -> [BoundStatus; 4] {
        // value >= coeff n^e  <=>  ln(value / coeff) - e ln n >= 0
        let at_least =
            |value: &Rational, coeff: &Rational, e: &Interval| classify(logs.ln(&(value / coeff)).sub(e).sign());
        let at_most =
            |value: &Rational, coeff: &Rational, e: &Interval| classify(e.sub(&logs.ln(&(value / coeff))).sign());
        [
            at_least(self.s, self.c1, e_sum),
            at_most(self.s, self.c2, e_sum),
            at_least(self.a, self.d1, e_term),
            at_most(self.a, self.d2, e_term),
        ]
    }
}

fn classify(sign: Option<Ordering>) -> BoundStatus {
    match sign {
        Some(Ordering::Greater | Ordering::Equal) => BoundStatus::Holds,
        Some(Ordering::Less) => BoundStatus::Violated,
        _ => BoundStatus::Indeterminate,
    }
}

/// Precision level with the `n`-independent enclosures cached.
struct Level {
    logs: LogBounds,
    exponent: Interval,
    exponent_minus_one: Interval,
}

impl Level {
    fn new(bits: u32, k: &Rational) -> Self {
        let logs = LogBounds::new(bits);
        let exponent = logs.ln(k).div(logs.ln2()).expect("ln 2 excludes zero");
        let one = Interval::exact_integer(&BigInt::one(), bits);
        let exponent_minus_one = exponent.sub(&one);
        Self {
            logs,
            exponent,
            exponent_minus_one,
        }
    }

    fn statuses(&self, n: u64, cmp: &Comparisons<'_>) -> [BoundStatus; 4] {
        let ln_n = self.logs.ln_int(n);
        cmp.enclosed(
            &self.logs,
            &self.exponent.mul(&ln_n),
            &self.exponent_minus_one.mul(&ln_n),
        )
    }
}

/// Verifies the four growth bounds at every index of a monotone integer
/// Galileo prefix.
///
/// `n^d` is rational when `k` or `n` is a power of two and is compared
/// exactly; otherwise each comparison is decided from outward-rounded
/// logarithm enclosures, doubling the precision while undecided and
/// reporting [`BoundStatus::Indeterminate`] past the cap.
pub fn growth_bounds_check(prefix: &SequencePrefix, options: GrowthOptions) -> Result<GrowthReport> {
    let k = prefix.k();
    if !prefix.is_integer_sequence() {
        return Err(Error::HypothesisUnmet("terms and k must be integers".into()));
    }
    if !prefix.is_non_decreasing() {
        return Err(Error::HypothesisUnmet("sequence must be non-decreasing".into()));
    }
    if k < &crate::int(2) {
        return Err(Error::HypothesisUnmet("k must be at least 2".into()));
    }
    if let Some(f) = check_global(prefix).first_failure() {
        return Err(Error::HypothesisUnmet(format!(
            "S_(2n) = k S_n fails at n = {}",
            f.index
        )));
    }
    if options.precision_bits == 0 || options.max_precision_bits < options.precision_bits {
        return Err(Error::InvalidParameter("invalid precision settings".into()));
    }

    let sums = partial_sums(prefix);
    let s1 = sums.get(1).clone();
    let k_minus_one = k - Rational::one();
    let c1 = &s1 / k;
    let c2 = &s1 * k;
    let d2 = &k_minus_one * &c2;
    let d1_proof = &k_minus_one * &c1 * crate::int(4) / (k * k);
    let a1 = prefix.term(1);
    let (d1, d1_choice) = if &d1_proof <= a1 {
        (d1_proof, LowerTermConstant::Proof)
    } else {
        (a1.clone(), LowerTermConstant::FirstTerm)
    };

    let k_int = k.to_integer();
    let exact_exponent = exact_log2(&k_int);
    let half_k = k / crate::int(2);
    let mut levels: Vec<Level> = Vec::new();
    let mut max_precision_used = 0;
    let mut records = Vec::with_capacity(prefix.len());

    for n in 1..=prefix.len() as u64 {
        let cmp = Comparisons {
            s: sums.get(n as usize),
            a: prefix.term(n as usize),
            c1: &c1,
            c2: &c2,
            d1: &d1,
            d2: &d2,
        };
        let n_big = BigInt::from(n);
        let exact_powers = match (exact_exponent, exact_log2(&n_big)) {
            (Some(d), _) => Some((
                Rational::from_integer(Pow::pow(&n_big, d)),
                Rational::from_integer(Pow::pow(&n_big, d - 1)),
            )),
            (None, Some(t)) => Some((Pow::pow(k, t), Pow::pow(&half_k, t))),
            (None, None) => None,
        };
        let (statuses, precision) = match exact_powers {
            Some((nd, nd1)) => (cmp.exact(&nd, &nd1), 0),
            None => {
                let mut bits = options.precision_bits;
                let mut level_idx = 0;
                loop {
                    if levels.len() <= level_idx {
                        levels.push(Level::new(bits, k));
                    }
                    let statuses = levels[level_idx].statuses(n, &cmp);
                    let undecided = statuses.contains(&BoundStatus::Indeterminate);
                    if !undecided || bits.saturating_mul(2) > options.max_precision_bits {
                        break (statuses, bits);
                    }
                    bits *= 2;
                    level_idx += 1;
                }
            }
        };
        max_precision_used = max_precision_used.max(precision);
        records.push(IndexRecord {
            n,
            sum_lower: statuses[0],
            sum_upper: statuses[1],
            term_lower: statuses[2],
            term_upper: statuses[3],
            precision_bits: precision,
        });
    }

    Ok(GrowthReport {
        exponent: k.to_f64().unwrap_or(f64::NAN).log2(),
        k: k.clone(),
        exact_exponent,
        c1,
        c2,
        d1,
        d2,
        d1_choice,
        records,
        precision_bits: options.precision_bits,
        max_precision_used,
    })
}

/// Decides the four bounds at `n` through the enclosure path only, even
/// when `n^d` is rational. Used to cross-check the exact path.
pub fn enclosure_statuses(prefix: &SequencePrefix, report: &GrowthReport, n: u64, bits: u32) -> [BoundStatus; 4] {
    let sums = partial_sums(prefix);
    let cmp = Comparisons {
        s: sums.get(n as usize),
        a: prefix.term(n as usize),
        c1: &report.c1,
        c2: &report.c2,
        d1: &report.d1,
        d2: &report.d2,
    };
    Level::new(bits, prefix.k()).statuses(n, &cmp)
}
