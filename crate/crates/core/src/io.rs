//! Edge-list text format.
//!
//! Line 1 holds `n m`; the next m lines hold one edge `u v` each
//! (0-indexed, whitespace-separated). Lines starting with `#` are comments.
//! Writers emit edges as `u v` with u < v, sorted.

use crate::graph::{Graph, GraphError};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let mut it = text.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize, EdgeListError> {
        tok.ok_or(())
            .and_then(|t| t.parse().map_err(|_| ()))
            .map_err(|_| EdgeListError::Parse {
                line,
                message: format!("expected two integers, got {text:?}"),
            })
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if it.next().is_some() {
        return Err(EdgeListError::Parse {
            line,
            message: format!("trailing tokens after pair in {text:?}"),
        });
    }
    Ok((a, b))
}

/// Parse the text edge-list format.
pub fn read_edge_list(input: &str) -> Result<Graph, EdgeListError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(EdgeListError::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        if edges.len() == m {
            return Err(EdgeListError::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        edges.push(parse_pair(line, text)?);
    }
    if edges.len() != m {
        return Err(EdgeListError::Parse {
            line: input.lines().count(),
            message: format!("declared {m} edges but found {}", edges.len()),
        });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Serialize to the text edge-list format.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
