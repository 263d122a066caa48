//! Term-by-term comparison of a local sequence with OEIS entries.
//!
//! Shift `s` compares the local term at index `n` with the entry's term at
//! index `n - s`, so "shifted by one index" is `s = 1`.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::client::Client;
use crate::{OeisEntry, OeisError, OeisId, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchOptions {
    pub shifts: RangeInclusive<i64>,
    pub scalars: Vec<BigRational>,
    /// Overlap needed for a pass.
    pub min_length: usize,
}

impl Default for MatchOptions {
    /// Shifts `-2..=2`, scalars `{1, 3}`, at least 50 matched terms.
    fn default() -> Self {
        Self {
            shifts: -2..=2,
            scalars: vec![BigRational::one(), BigRational::from_integer(3.into())],
            min_length: 50,
        }
    }
}

impl MatchOptions {
    /// Defaults plus the scalar `k - 1`.
    pub fn for_ratio(k: &BigRational) -> Self {
        let mut opts = Self::default();
        let extra = k - BigRational::one();
        if !extra.is_zero() && !opts.scalars.contains(&extra) {
            opts.scalars.push(extra);
        }
        opts
    }

    fn validate(&self, available: usize) -> Result<()> {
        if self.shifts.is_empty() {
            return Err(OeisError::InvalidOptions("empty shift range".into()));
        }
        if self.scalars.is_empty() || self.scalars.iter().any(Zero::is_zero) {
            return Err(OeisError::InvalidOptions("scalars must be nonempty and nonzero".into()));
        }
        let reach = self.shifts.start().unsigned_abs().max(self.shifts.end().unsigned_abs()) as usize;
        let needed = self.min_length + reach;
        if available < needed {
            return Err(OeisError::TooFewTerms { needed, got: available });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// First local index where `term != scalar * candidate`.
    Mismatch {
        index: i64,
    },
    /// Agreement everywhere, but on fewer than `min_length` terms.
    TooShort,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchResult {
    pub candidate: OeisId,
    pub shift: i64,
    pub scalar: BigRational,
    pub matched_length: usize,
    pub verdict: Verdict,
}

impl MatchResult {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Compares `terms` (local indices `first_index, first_index + 1, ...`)
/// with `scalar * entry` under one shift.
pub fn compare(
    terms: &[BigInt],
    first_index: i64,
    entry: &OeisEntry,
    shift: i64,
    scalar: &BigRational,
    min_length: usize,
) -> MatchResult {
    let local_end = first_index + terms.len() as i64;
    let lo = first_index.max(entry.offset + shift);
    let hi = local_end.min(entry.offset + entry.terms.len() as i64 + shift);
    let mut verdict = Verdict::Pass;
    for n in lo..hi {
        let local = BigRational::from_integer(terms[(n - first_index) as usize].clone());
        let theirs = BigRational::from_integer(entry.terms[(n - shift - entry.offset) as usize].clone());
        if local != scalar * theirs {
            verdict = Verdict::Mismatch { index: n };
            break;
        }
    }
    let matched_length = (hi - lo).max(0) as usize;
    if verdict == Verdict::Pass && matched_length < min_length {
        verdict = Verdict::TooShort;
    }
    MatchResult {
        candidate: entry.id,
        shift,
        scalar: scalar.clone(),
        matched_length,
        verdict,
    }
}

/// Every (candidate, shift, scalar) combination that passes, in candidate,
/// shift, scalar order.
pub fn match_sequence(
    terms: &[BigInt],
    first_index: i64,
    candidates: &[OeisEntry],
    options: &MatchOptions,
) -> Result<Vec<MatchResult>> {
    options.validate(terms.len())?;
    let mut out = Vec::new();
    for entry in candidates {
        for shift in options.shifts.clone() {
            for scalar in &options.scalars {
                let r = compare(terms, first_index, entry, shift, scalar, options.min_length);
                if r.passed() {
                    out.push(r);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchReport {
    pub matches: Vec<MatchResult>,
    /// Candidates that could not be loaded, with the reason.
    pub skipped: Vec<(OeisId, String)>,
}

impl Client {
    /// Fetches each candidate and matches against it; candidates that cannot
    /// be loaded are skipped with a note rather than failing the run.
    pub fn match_identifiers(
        &self,
        terms: &[BigInt],
        first_index: i64,
        ids: &[OeisId],
        options: &MatchOptions,
    ) -> Result<MatchReport> {
        options.validate(terms.len())?;
        let mut entries = Vec::new();
        let mut skipped = Vec::new();
        for &id in ids {
            match self.fetch_entry(id) {
                Ok(entry) => entries.push(entry),
                Err(e) => skipped.push((id, e.to_string())),
            }
        }
        Ok(MatchReport {
            matches: match_sequence(terms, first_index, &entries, options)?,
            skipped,
        })
    }
}
