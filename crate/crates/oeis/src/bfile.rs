//! OEIS b-file text: one `n a(n)` pair per line, `#` comments.

use num_bigint::BigInt;

use crate::{OeisError, Result};

/// Parses a b-file into its first index and the terms in order.
///
/// Indices must increase by one from line to line. Errors carry the
/// 1-based line number.
pub fn parse_bfile(text: &str) -> Result<(i64, Vec<BigInt>)> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| OeisError::Parse { line: line_no, message };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected 'index value', got {line:?}")));
        };
        let index: i64 = index.parse().map_err(|_| err(format!("bad index {index:?}")))?;
        let value: BigInt = value.parse().map_err(|_| err(format!("bad value {value:?}")))?;
        let first = *offset.get_or_insert(index);
        let expected = first + terms.len() as i64;
        if index != expected {
            return Err(err(format!("index {index} out of sequence, expected {expected}")));
        }
        terms.push(value);
    }
    match offset {
        Some(first) => Ok((first, terms)),
        None => Err(OeisError::Parse {
            line: text.lines().count(),
            message: "no terms".into(),
        }),
    }
}
