//! SCX text format: one facet per line as whitespace-separated tokens,
//! `#` starts a comment line.

use normpm::Complex;

use crate::error::CliError;

pub fn parse(text: &str) -> Result<Complex, CliError> {
    let facets: Vec<Vec<&str>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect())
        .collect();
    Complex::from_facets(facets).map_err(CliError::Scx)
}

/// Canonical form: tokens and facets in the complex's canonical order.
pub fn write(c: &Complex) -> String {
    let mut out = String::new();
    for f in c.facet_tokens() {
        out.push_str(&f.join(" "));
        out.push('\n');
    }
    out
}
