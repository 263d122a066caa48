//! Line-oriented `index value` text format.
//!
//! One record per line, whitespace separated. Values are exact rationals
//! written `p/q`, with the denominator omitted when it is 1, so integer
//! sequences read and write exactly like OEIS b-files. Blank lines and lines
//! starting with `#` are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::Zero;

use crate::{Error, Rational, Result, SequencePrefix};

/// Parses `p`, `p/q` or `-p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    if let Some((num, den)) = s.split_once('/') {
        let den = num_bigint::BigInt::from_str(den).ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Rational::new(num_bigint::BigInt::from_str(num).ok()?, den))
    } else {
        num_bigint::BigInt::from_str(s).ok().map(Rational::from_integer)
    }
}

/// Splits `text` into `(line number, fields)` records, skipping comments and blanks.
pub fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn parse_field<T: FromStr>(line: usize, field: &str, what: &str) -> Result<T> {
    field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what} `{field}`"),
    })
}

fn parse_value(line: usize, field: &str) -> Result<Rational> {
    parse_rational(field).ok_or_else(|| Error::Parse {
        line,
        message: format!("invalid rational `{field}`"),
    })
}

/// Reads terms indexed consecutively from 1.
pub fn read_terms(text: &str) -> Result<Vec<Rational>> {
    let mut terms = Vec::new();
    for (line, fields) in records(text) {
        if fields.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected `index value`, found {} fields", fields.len()),
            });
        }
        let index: usize = parse_field(line, fields[0], "index")?;
        if index != terms.len() + 1 {
            return Err(Error::Parse {
                line,
                message: format!("expected index {}, found {index}", terms.len() + 1),
            });
        }
        terms.push(parse_value(line, fields[1])?);
    }
    Ok(terms)
}

pub fn read_prefix(text: &str, k: Rational) -> Result<SequencePrefix> {
    SequencePrefix::new(read_terms(text)?, k)
}

/// Formats terms as `index value` lines starting at index 1.
pub fn write_terms(terms: &[Rational]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let _ = writeln!(out, "{} {}", i + 1, t);
    }
    out
}

pub fn write_prefix(prefix: &SequencePrefix) -> String {
    write_terms(prefix.terms())
}

/// Reads a splitting-factor table: `n b_n c_n` per line.
pub fn read_factor_table(text: &str) -> Result<BTreeMap<u64, (Rational, Rational)>> {
    let mut table = BTreeMap::new();
    for (line, fields) in records(text) {
        if fields.len() != 3 {
            return Err(Error::Parse {
                line,
                message: format!("expected `n b c`, found {} fields", fields.len()),
            });
        }
        let n: u64 = parse_field(line, fields[0], "node index")?;
        let pair = (parse_value(line, fields[1])?, parse_value(line, fields[2])?);
        if table.insert(n, pair).is_some() {
            return Err(Error::Parse {
                line,
                message: format!("duplicate node {n}"),
            });
        }
    }
    Ok(table)
}

pub fn write_factor_table(table: &BTreeMap<u64, (Rational, Rational)>) -> String {
    let mut out = String::new();
    for (n, (b, c)) in table {
        let _ = writeln!(out, "{n} {b} {c}");
    }
    out
}
