//! Text formats.
//!
//! Graphs use a DIMACS-flavoured edge format:
//!
//! ```text
//! c optional comment lines
//! p <n> <m>
//! e <u> <v>      (exactly m lines, 1 <= u, v <= n, u != v, no repeats)
//! ```
//!
//! Orderings are a single line holding a permutation of `1..=n`.

use std::fmt::Write as _;

use crate::error::{Error, ParseErrorKind, Result};
use crate::graph::{Graph, GraphBuilder, VertexOrdering, DEFAULT_MAX_VERTICES};

fn parse_error(line: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { line, kind }
}

fn is_comment(line: &str) -> bool {
    line.starts_with('c')
}

pub fn parse_graph_text(text: &str) -> Result<Graph> {
    parse_graph_text_with_limit(text, DEFAULT_MAX_VERTICES)
}

pub fn parse_graph_text_with_limit(text: &str, limit: usize) -> Result<Graph> {
    let mut header: Option<(GraphBuilder, usize)> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || is_comment(line) {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap_or_default();
        match (&mut header, tag) {
            (None, "p") => {
                let rest: Vec<&str> = tokens.collect();
                // Accept both `p <n> <m>` and the DIMACS `p edge <n> <m>`.
                let numbers = match rest.as_slice() {
                    [n, m] => Some((*n, *m)),
                    [fmt, n, m] if fmt.chars().all(|c| c.is_ascii_alphabetic()) => Some((*n, *m)),
                    _ => None,
                };
                let (n, m) = numbers
                    .and_then(|(n, m)| Some((n.parse::<usize>().ok()?, m.parse::<usize>().ok()?)))
                    .ok_or_else(|| parse_error(line_no, ParseErrorKind::MalformedHeader(line.into())))?;
                let builder = GraphBuilder::with_limit(n, limit)?;
                header = Some((builder, m));
            }
            (None, _) => return Err(parse_error(line_no, ParseErrorKind::MissingHeader)),
            (Some((builder, expected)), "e") => {
                let ends: Vec<&str> = tokens.collect();
                let (u, v) = match ends.as_slice() {
                    [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
                    _ => None,
                }
                .ok_or_else(|| parse_error(line_no, ParseErrorKind::MalformedEdge(line.into())))?;
                let n = builder.vertex_count();
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(parse_error(line_no, ParseErrorKind::InvalidVertex { vertex: w, n }));
                    }
                }
                if u == v {
                    return Err(parse_error(line_no, ParseErrorKind::SelfLoop(u)));
                }
                if builder.edge_count() == *expected {
                    return Err(parse_error(
                        line_no,
                        ParseErrorKind::EdgeCountMismatch {
                            expected: *expected,
                            found: *expected + 1,
                        },
                    ));
                }
                if !builder.add_edge(u - 1, v - 1)? {
                    return Err(parse_error(line_no, ParseErrorKind::DuplicateEdge(u, v)));
                }
            }
            (Some(_), _) => {
                return Err(parse_error(line_no, ParseErrorKind::UnexpectedLine(line.into())));
            }
        }
    }
    let (builder, expected) = header.ok_or_else(|| parse_error(last_line.max(1), ParseErrorKind::MissingHeader))?;
    if builder.edge_count() != expected {
        return Err(parse_error(
            last_line,
            ParseErrorKind::EdgeCountMismatch {
                expected,
                found: builder.edge_count(),
            },
        ));
    }
    Ok(builder.build())
}

/// Serializes `g`; edges are written with `u < v` in ascending order.
pub fn write_graph_text(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + g.edge_count() * 12);
    writeln!(out, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses a whitespace-separated permutation of `1..=n`.
pub fn parse_ordering_text(text: &str, n: usize) -> Result<VertexOrdering> {
    let mut order = Vec::with_capacity(n);
    for token in text.split_whitespace() {
        let v: usize = token
            .parse()
            .map_err(|_| Error::InvalidOrdering(format!("`{token}` is not a vertex id")))?;
        if v == 0 || v > n {
            return Err(Error::InvalidOrdering(format!("vertex {v} is out of range 1..={n}")));
        }
        order.push(v - 1);
    }
    if order.len() != n {
        return Err(Error::InvalidOrdering(format!(
            "expected {n} vertices, found {}",
            order.len()
        )));
    }
    VertexOrdering::new(order)
}

pub fn write_ordering_text(ord: &VertexOrdering) -> String {
    format!("{ord}\n")
}
