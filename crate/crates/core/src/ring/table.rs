use std::path::Path;

use super::FiniteRing;
use crate::error::BuildError;

/// Reads a ring from a table file and verifies every axiom.
///
/// Format: `order N`, `zero i`, `one j`, then `N` rows of the addition
/// table followed by `N` rows of the multiplication table. Blank lines and
/// lines starting with `#` are ignored.
pub fn load_table_ring(path: &Path) -> Result<FiniteRing, BuildError> {
    let text = std::fs::read_to_string(path).map_err(|source| BuildError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_table_ring(&text, &format!("table {}", path.display()))
}

pub fn parse_table_ring(text: &str, description: &str) -> Result<FiniteRing, BuildError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let mut header = |key: &str| -> Result<usize, BuildError> {
        let (no, line) = lines.next().ok_or(BuildError::TableParse {
            line: 0,
            msg: format!("missing '{key}' line"),
        })?;
        let err = |msg: String| BuildError::TableParse { line: no, msg };
        let mut parts = line.split_whitespace();
        if parts.next() != Some(key) {
            return Err(err(format!("expected '{key} <int>'")));
        }
        let value = parts
            .next()
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| err(format!("expected an integer after '{key}'")))?;
        if parts.next().is_some() {
            return Err(err("trailing tokens".into()));
        }
        Ok(value)
    };
    let order = header("order")?;
    let zero = header("zero")?;
    let one = header("one")?;
    if order == 0 {
        return Err(BuildError::TableParse { line: 1, msg: "order must be positive".into() });
    }
    let mut read_table = |name: &str| -> Result<Vec<u32>, BuildError> {
        let mut table = Vec::with_capacity(order * order);
        for row in 0..order {
            let (no, line) = lines.next().ok_or(BuildError::TableParse {
                line: 0,
                msg: format!("{name} table ends after {row} of {order} rows"),
            })?;
            let values = line
                .split_whitespace()
                .map(|v| v.parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| BuildError::TableParse { line: no, msg: e.to_string() })?;
            if values.len() != order {
                return Err(BuildError::TableParse {
                    line: no,
                    msg: format!("expected {order} entries, found {}", values.len()),
                });
            }
            if let Some(v) = values.iter().find(|&&v| v as usize >= order) {
                return Err(BuildError::TableParse {
                    line: no,
                    msg: format!("entry {v} out of range for order {order}"),
                });
            }
            table.extend(values);
        }
        Ok(table)
    };
    let add = read_table("addition")?;
    let mul = read_table("multiplication")?;
    if let Some((no, _)) = lines.next() {
        return Err(BuildError::TableParse { line: no, msg: "unexpected trailing rows".into() });
    }
    let labels = (0..order).map(|i| i.to_string()).collect();
    FiniteRing::from_tables(add, mul, zero, one, labels, description, true)
}
