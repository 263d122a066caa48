//! OEIS b-file access for confirming Galileo-sequence correspondences:
//! identifier validation, b-file parsing, an on-disk cache, an HTTPS client,
//! shipped offline fixtures and a shift/scalar term matcher.

pub mod bfile;
pub mod cache;
pub mod client;
pub mod error;
pub mod fixtures;
pub mod id;
pub mod matching;

use num_bigint::BigInt;

pub use cache::{Cache, CACHE_ENV};
pub use client::{Client, Mode, Source};
pub use error::{OeisError, Result};
pub use id::OeisId;
pub use matching::{compare, match_sequence, MatchOptions, MatchReport, MatchResult, Verdict};

/// Terms of one OEIS entry; `terms[0]` has index `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisEntry {
    pub id: OeisId,
    pub offset: i64,
    pub terms: Vec<BigInt>,
}

impl OeisEntry {
    pub fn from_bfile(id: OeisId, text: &str) -> Result<Self> {
        let (offset, terms) = bfile::parse_bfile(text)?;
        Ok(Self { id, offset, terms })
    }

    /// Term at OEIS index `n`.
    pub fn term(&self, n: i64) -> Option<&BigInt> {
        let i = usize::try_from(n - self.offset).ok()?;
        self.terms.get(i)
    }

    /// Renders the entry back into b-file lines.
    pub fn to_bfile(&self) -> String {
        self.terms
            .iter()
            .enumerate()
            .map(|(i, t)| format!("{} {t}\n", self.offset + i as i64))
            .collect()
    }
}
