//! B-files shipped with the crate so matching works without a network.
//!
//! They are rebuilt from each entry's defining formula (see the header line
//! of every file), cover about a thousand terms and use the OEIS offsets.

use crate::OeisId;

const FIXTURES: &[(&str, &str)] = &[
    ("A000012", include_str!("../fixtures/b000012.txt")),
    ("A003215", include_str!("../fixtures/b003215.txt")),
    ("A005408", include_str!("../fixtures/b005408.txt")),
    ("A005917", include_str!("../fixtures/b005917.txt")),
    ("A022521", include_str!("../fixtures/b022521.txt")),
    ("A048883", include_str!("../fixtures/b048883.txt")),
    ("A053644", include_str!("../fixtures/b053644.txt")),
];

/// Identifiers cited alongside the families that are not themselves a term
/// list to match: a table read by columns, and a family index entry.
pub const LISTED_NOT_MATCHED: &[(&str, &str)] = &[
    (
        "A047969",
        "table whose columns are the polynomial families; read order unspecified",
    ),
    ("A385610", "family entry for the Tattersall recursions"),
];

pub fn fixture(id: OeisId) -> Option<&'static str> {
    FIXTURES
        .iter()
        .find(|(name, _)| *name == id.to_string())
        .map(|(_, text)| *text)
}

pub fn fixture_ids() -> Vec<OeisId> {
    FIXTURES
        .iter()
        .map(|(name, _)| name.parse().expect("valid fixture identifier"))
        .collect()
}
