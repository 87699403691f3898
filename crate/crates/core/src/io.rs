//! The plain-text code file format.
//!
//! ```text
//! 4 2
//! 1 0 w 1
//! 0 1 W 0
//! ```
//!
//! Line 1 holds `n k`; each of the next `k` lines holds `n` symbols from
//! `0 1 w W` separated by single spaces. Trailing blank lines are ignored.

use std::fmt::Write;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Matrix};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses the generator matrix of a code file. Rank is not checked here.
pub fn parse_matrix(text: &str) -> Result<Gf4Matrix> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let fields: Vec<&str> = header.split(' ').collect();
    if fields.len() != 2 {
        return Err(parse_err(1, 1, "header must be `n k`"));
    }
    let n: usize = fields[0]
        .parse()
        .map_err(|_| parse_err(1, 1, format!("invalid length {:?}", fields[0])))?;
    let k: usize = fields[1].parse().map_err(|_| {
        parse_err(
            1,
            fields[0].len() + 2,
            format!("invalid dimension {:?}", fields[1]),
        )
    })?;

    let mut rows = Vec::with_capacity(k);
    for (lineno, line) in lines.by_ref() {
        if rows.len() == k {
            if !line.trim().is_empty() {
                return Err(parse_err(
                    lineno,
                    1,
                    format!("expected {k} rows, found more"),
                ));
            }
            continue;
        }
        rows.push(parse_row(line, lineno, n)?);
    }
    if rows.len() != k {
        return Err(parse_err(
            rows.len() + 2,
            1,
            format!("expected {k} rows, found {}", rows.len()),
        ));
    }
    let mut m = Gf4Matrix::from_rows(&rows)?;
    if k == 0 {
        m = Gf4Matrix::zeros(0, n);
    }
    Ok(m)
}

fn parse_row(line: &str, lineno: usize, n: usize) -> Result<Vec<Gf4>> {
    let mut row = Vec::with_capacity(n);
    let mut column = 1;
    for tok in line.split(' ') {
        let mut chars = tok.chars();
        let symbol = match (chars.next(), chars.next()) {
            (Some(c), None) => Gf4::from_symbol(c),
            _ => None,
        }
        .ok_or_else(|| parse_err(lineno, column, format!("invalid symbol {tok:?}")))?;
        if row.len() == n {
            return Err(parse_err(
                lineno,
                column,
                format!("row has more than {n} symbols"),
            ));
        }
        row.push(symbol);
        column += tok.chars().count() + 1;
    }
    if row.len() != n {
        return Err(parse_err(
            lineno,
            column,
            format!("row has {} symbols, expected {n}", row.len()),
        ));
    }
    Ok(row)
}

/// Parses a code file into a code (the rows must be independent).
pub fn parse_code(text: &str) -> Result<LinearCode> {
    LinearCode::new(parse_matrix(text)?)
}

/// Writes a matrix in the code file format.
pub fn format_matrix(m: &Gf4Matrix) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", m.cols(), m.rows()).unwrap();
    out.push_str(&m.to_string());
    out
}

pub fn format_code(c: &LinearCode) -> String {
    format_matrix(c.generator())
}
