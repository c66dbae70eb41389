//! Edge-list text format.
//!
//! ```text
//! n m
//! i j
//! ...
//! ```
//! ASCII decimal, one edge per line, `i < j` on output. Lines are LF-terminated.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub(super) fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(12 * (g.edge_count() + 1));
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

fn pair(line: &str, lineno: usize) -> Result<(usize, usize), ParseError> {
    let mut it = line.split_ascii_whitespace();
    let mut field = |what: &str| -> Result<usize, ParseError> {
        let tok = it.next().ok_or_else(|| ParseError::Syntax {
            line: lineno,
            msg: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| ParseError::Syntax {
            line: lineno,
            msg: format!("{what} is not a non-negative integer: {tok:?}"),
        })
    };
    let a = field("first field")?;
    let b = field("second field")?;
    if it.next().is_some() {
        return Err(ParseError::Syntax {
            line: lineno,
            msg: "trailing fields".into(),
        });
    }
    Ok((a, b))
}

/// Parses the edge-list text format. Blank lines are ignored; edges may be
/// listed in either orientation.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(ParseError::Syntax {
        line: 1,
        msg: "empty input".into(),
    })?;
    let (n, m) = pair(header, hline)?;
    let edges = lines
        .map(|(no, l)| pair(l, no))
        .collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}
