//! Edge-list text format.
//!
//! ```text
//! # optional comments
//! n m
//! u v        (m lines, Left u - Right v, 0 <= u, v < n)
//! ```
//!
//! Anything after `#` on a line is ignored, as are blank lines. Duplicate
//! edges and a line count that disagrees with `m` are rejected.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use super::BipartiteGraph;
use crate::error::{Error, Result};

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut field = |name: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line: lineno,
            message: format!("missing {name}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("{name} is not a non-negative integer: {tok:?}"),
        })
    };
    let a = field("first field")?;
    let b = field("second field")?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: lineno,
            message: "expected exactly two fields".into(),
        });
    }
    Ok((a, b))
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<BipartiteGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (a, b) = parse_pair(content, lineno)?;
        match header {
            None => {
                if a == 0 {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "n must be at least 1".into(),
                    });
                }
                header = Some((a, b));
            }
            Some((n, m)) => {
                if a >= n || b >= n {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("endpoint out of range for n = {n}"),
                    });
                }
                if !seen.insert((a, b)) {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("duplicate edge {a} {b}"),
                    });
                }
                if edges.len() == m {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("more than the declared {m} edges"),
                    });
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 1,
        message: "missing \"n m\" header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    BipartiteGraph::from_edges(n, edges)
}

pub fn parse_edge_list(text: &str) -> Result<BipartiteGraph> {
    read_edge_list(text.as_bytes())
}

/// Writes the header and the edges in row-major order.
pub fn write_edge_list<W: Write>(g: &BipartiteGraph, mut out: W) -> Result<()> {
    writeln!(out, "{} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn to_edge_list_string(g: &BipartiteGraph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge list is ASCII")
}
