//! Line-oriented text format for sparse operators:
//!
//! ```text
//! SPARSEOP n=<N> k=<rank> nnz=<count>
//! <row> <col> <p>/<q>
//! ```
//!
//! Entries are sorted by `(row, col)`, fractions are reduced with `q > 0`, and
//! integers are written `p/1`. The output is a pure function of the operator.

use std::io::{self, Write};

use num_traits::Zero;

use super::SparseOperator;
use crate::error::{Error, Result};
use crate::rational::{fmt_pq, Rational};

pub fn write_sparse<W: Write>(op: &SparseOperator, mut out: W) -> io::Result<()> {
    writeln!(
        out,
        "SPARSEOP n={} k={} nnz={}",
        op.dim_site(),
        op.rank(),
        op.nnz()
    )?;
    for (r, c, v) in op.entries() {
        writeln!(out, "{} {} {}", r, c, fmt_pq(&v))?;
    }
    Ok(())
}

pub fn to_sparse_string(op: &SparseOperator) -> String {
    let mut buf = Vec::new();
    write_sparse(op, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("format is ASCII")
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

fn header_field(token: Option<&str>, key: &str) -> Result<usize> {
    let token = token.ok_or_else(|| parse_err(1, format!("missing {key}=")))?;
    token
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(1, format!("bad header field `{token}`")))
}

/// Strict inverse of [`write_sparse`]: rejects unsorted, duplicate, zero or
/// unreduced entries, so a file that parses is byte-identical to its re-export.
pub fn parse_sparse(text: &str) -> Result<SparseOperator> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("SPARSEOP") {
        return Err(parse_err(1, "expected SPARSEOP header"));
    }
    let n = header_field(tokens.next(), "n")?;
    let k = header_field(tokens.next(), "k")?;
    let nnz = header_field(tokens.next(), "nnz")?;
    if tokens.next().is_some() {
        return Err(parse_err(1, "trailing header tokens"));
    }
    let dim = n
        .checked_pow(k as u32)
        .ok_or_else(|| parse_err(1, "dimension overflow"))?;

    let mut entries = Vec::with_capacity(nnz);
    let mut last: Option<(usize, usize)> = None;
    for (idx, line) in lines.enumerate() {
        let lineno = idx + 2;
        let mut parts = line.split(' ');
        let (Some(r), Some(c), Some(v), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(parse_err(lineno, "expected `<row> <col> <p>/<q>`"));
        };
        let row: usize = r.parse().map_err(|_| parse_err(lineno, "bad row"))?;
        let col: usize = c.parse().map_err(|_| parse_err(lineno, "bad col"))?;
        if row >= dim || col >= dim {
            return Err(parse_err(lineno, "index out of range"));
        }
        if last.is_some_and(|prev| prev >= (row, col)) {
            return Err(parse_err(lineno, "entries not strictly sorted"));
        }
        last = Some((row, col));
        let (p, q) = v
            .split_once('/')
            .ok_or_else(|| parse_err(lineno, "value must be p/q"))?;
        let p: i64 = p.parse().map_err(|_| parse_err(lineno, "bad numerator"))?;
        let q: i64 = q
            .parse()
            .map_err(|_| parse_err(lineno, "bad denominator"))?;
        if q <= 0 {
            return Err(parse_err(lineno, "denominator must be positive"));
        }
        let value = Rational::new(p, q);
        if value.is_zero() {
            return Err(parse_err(lineno, "zero entries are not stored"));
        }
        if (*value.numer(), *value.denom()) != (p, q) {
            return Err(parse_err(lineno, "fraction not reduced"));
        }
        entries.push((row, col, value));
    }
    if entries.len() != nnz {
        return Err(parse_err(
            1,
            format!("header says nnz={nnz}, found {}", entries.len()),
        ));
    }
    SparseOperator::from_entries(n, k, entries)
}
