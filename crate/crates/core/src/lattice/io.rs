//! Text cell-list format: one cell per line, comma-separated integers,
//! `#` starts a comment. The dimension is fixed by the first cell line.

use super::Polyomino;
use crate::error::{Error, Result};

/// Parses the rows of a cell list; all rows must have the same length.
pub fn parse_cell_list(text: &str) -> Result<Vec<Vec<i32>>> {
    let mut rows: Vec<Vec<i32>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|t| t.trim().parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                line: lineno + 1,
                message: format!("{e}: {line:?}"),
            })?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("expected {} coordinates, found {}", first.len(), row.len()),
                });
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

pub(super) fn write_cell_list(p: &Polyomino) -> String {
    let mut out = format!("# n={} d={}\n", p.size(), p.dim());
    for c in p.cells() {
        let parts: Vec<String> = c.coords().iter().map(i32::to_string).collect();
        out.push_str(&parts.join(","));
        out.push('\n');
    }
    out
}
