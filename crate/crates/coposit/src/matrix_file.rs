//! Text formats for matrices and certificate vectors.
//!
//! Matrix files: the first value is n, followed either by n full rows of n
//! integers (validated symmetric, never symmetrized) or by the n(n+1)/2
//! upper-triangle entries row by row. Blank lines and `#` comments are
//! ignored; tokens may be split across lines freely. Vector files carry one
//! rational per line, written `p/q` or plain `p`.

use anyhow::{bail, Context, Result};
use num::bigint::BigInt;

use copositive::rational::{format_rational, parse_rational, Rational};
use copositive::SymmetricIntMatrix;

fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|line| match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        })
        .flat_map(|line| line.split_whitespace())
}

pub fn parse_matrix(text: &str) -> Result<SymmetricIntMatrix> {
    let mut iter = tokens(text);
    let n: usize = iter
        .next()
        .context("empty matrix file")?
        .parse()
        .context("first value must be the dimension n")?;
    if n == 0 {
        bail!("dimension must be at least 1");
    }
    let entries: Vec<BigInt> = iter
        .map(|tok| {
            tok.parse::<BigInt>()
                .with_context(|| format!("invalid integer entry {tok:?}"))
        })
        .collect::<Result<_>>()?;
    let full = n * n;
    let upper = n * (n + 1) / 2;
    if entries.len() == full {
        let rows: Vec<Vec<BigInt>> = entries.chunks(n).map(|row| row.to_vec()).collect();
        Ok(SymmetricIntMatrix::from_rows(&rows)?)
    } else if entries.len() == upper {
        Ok(SymmetricIntMatrix::from_upper(n, entries)?)
    } else {
        bail!(
            "expected {full} entries (full form) or {upper} (upper triangle), got {}",
            entries.len()
        );
    }
}

pub fn serialize_matrix(m: &SymmetricIntMatrix) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", m.n()));
    for row in m.to_rows() {
        let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_vector(text: &str) -> Result<Vec<Rational>> {
    tokens(text)
        .map(|tok| parse_rational(tok).with_context(|| format!("invalid rational {tok:?}")))
        .collect()
}

pub fn serialize_vector(v: &[Rational]) -> String {
    let mut out = String::new();
    for coord in v {
        out.push_str(&format_rational(coord));
        out.push('\n');
    }
    out
}
