//! Ring catalogs: one spec per line, `#` starts a comment.

/// The catalog exercised by the census and the acceptance suite.
pub const DEFAULT_CATALOG: &str = include_str!("../data/default_catalog.txt");

/// Non-empty, comment-stripped lines.
pub fn parse_catalog(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect()
}

pub fn default_catalog() -> Vec<String> {
    parse_catalog(DEFAULT_CATALOG)
}
