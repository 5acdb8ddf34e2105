//! Line handling shared by the instance formats.
//!
//! Lines starting with `#` are comments. Comments of the form
//! `#@name <vertex> <label>` carry optional vertex names.

use crate::error::{Error, Result};

/// Non-comment, non-blank lines with their 1-based line numbers.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn numbers<T: std::str::FromStr>(line: usize, s: &str) -> Result<Vec<T>> {
    s.split_whitespace()
        .map(|tok| tok.parse::<T>().map_err(|_| Error::parse(line, format!("bad number `{tok}`"))))
        .collect()
}

/// Reads `#@name` comments into a name table of length `n`.
pub fn parse_names(text: &str, n: usize) -> Option<Vec<String>> {
    let mut names: Vec<Option<String>> = vec![None; n];
    let mut any = false;
    for line in text.lines() {
        let Some(rest) = line.trim().strip_prefix("#@name") else { continue };
        let mut parts = rest.split_whitespace();
        let (Some(v), Some(label)) = (parts.next(), parts.next()) else { continue };
        if let Ok(v) = v.parse::<usize>() {
            if v < n {
                names[v] = Some(label.to_string());
                any = true;
            }
        }
    }
    any.then(|| names.into_iter().enumerate().map(|(i, s)| s.unwrap_or_else(|| i.to_string())).collect())
}

/// Renders a name table as `#@name` comment lines.
pub fn render_names(names: &[String]) -> String {
    names.iter().enumerate().map(|(v, s)| format!("#@name {v} {s}\n")).collect()
}
