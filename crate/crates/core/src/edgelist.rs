//! Plain-text edge lists.
//!
//! ```text
//! # optional comment lines
//! g <n> <m>
//! <u> <v>        (m lines, 0 <= u < v < n)
//! ```
//!
//! The writer emits exactly this layout with edges in lexicographic order and
//! `\n` line endings, so a written file reads back to an identical graph.

use std::io::{self, Write};

use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError};

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error("missing `g <n> <m>` header")]
    MissingHeader,
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> EdgeListError {
    EdgeListError::Syntax { line, msg: msg.into() }
}

fn parse_number(line: usize, tok: &str) -> Result<usize, EdgeListError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(line, format!("expected a decimal number, found `{tok}`")));
    }
    tok.parse()
        .map_err(|_| syntax(line, format!("number `{tok}` out of range")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph: Option<Graph> = None;
    let mut found = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.strip_suffix('\r').unwrap_or(raw);
        if content.starts_with('#') || content.trim().is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split(' ').collect();
        match header {
            None => {
                if toks.len() != 3 || toks[0] != "g" {
                    return Err(syntax(line, "expected header `g <n> <m>`"));
                }
                let n = parse_number(line, toks[1])?;
                let m = parse_number(line, toks[2])?;
                header = Some((n, m));
                graph = Some(Graph::empty(n).map_err(|source| EdgeListError::Graph { line, source })?);
            }
            Some((n, m)) => {
                if toks.len() != 2 {
                    return Err(syntax(line, "expected `<u> <v>`"));
                }
                let u = parse_number(line, toks[0])?;
                let v = parse_number(line, toks[1])?;
                let e = Edge::new(u, v).map_err(|source| EdgeListError::Graph { line, source })?;
                if u > v {
                    return Err(syntax(line, format!("endpoints must be ascending, found `{u} {v}`")));
                }
                if v >= n {
                    return Err(EdgeListError::Graph {
                        line,
                        source: GraphError::VertexOutOfRange { edge: e, order: n },
                    });
                }
                found += 1;
                if found > m {
                    return Err(EdgeListError::EdgeCount { declared: m, found });
                }
                let g = graph.as_ref().expect("graph allocated with header");
                if g.has_edge(e) {
                    return Err(EdgeListError::Graph {
                        line,
                        source: GraphError::DuplicateEdge(e),
                    });
                }
                graph = Some(
                    g.add_edges(&[e])
                        .map_err(|source| EdgeListError::Graph { line, source })?,
                );
            }
        }
    }

    let (_, m) = header.ok_or(EdgeListError::MissingHeader)?;
    if found != m {
        return Err(EdgeListError::EdgeCount { declared: m, found });
    }
    Ok(graph.expect("graph allocated with header"))
}

pub fn read_edge_list(path: &std::path::Path) -> Result<Graph, EdgeListError> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text)
}

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "g {} {}", g.order(), g.size())?;
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v())?;
    }
    Ok(())
}

pub fn edge_list_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge list is ASCII")
}
