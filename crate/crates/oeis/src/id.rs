use std::fmt;
use std::str::FromStr;

use crate::{OeisError, Result};

/// An A-number such as `A005408`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OeisId(u32);

impl OeisId {
    pub fn number(self) -> u32 {
        self.0
    }

    /// `b005408.txt`, the b-file name on the OEIS host and in the cache.
    pub fn bfile_name(self) -> String {
        format!("b{:06}.txt", self.0)
    }
}

impl FromStr for OeisId {
    type Err = OeisError;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix('A')
            .filter(|d| d.len() == 6 && d.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(|| OeisError::InvalidIdentifier(s.to_string()))?;
        Ok(Self(digits.parse().expect("six ASCII digits")))
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{:06}", self.0)
    }
}
