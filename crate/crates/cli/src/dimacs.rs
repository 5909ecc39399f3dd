//! Shortest-path-benchmark-style graph files.
//!
//! `c ...` comment lines, one `p sp <n> <m>` header, then `m` lines
//! `a <u> <v> <w>` with 1-based vertex ids. With the undirected flag each
//! `a` line is an edge. Weights are integer, decimal or `num/den` literals
//! and are kept exact.

use std::fmt;

use pathlist_core::{Graph, GraphError, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    MalformedHeader,
    DuplicateHeader,
    MalformedArc,
    UnknownDirective(String),
    VertexOutOfRange { id: usize, n: usize },
    SelfLoop { id: usize },
    DuplicateArc { from: usize, to: usize },
    BadWeight(String),
    MoreArcsThanDeclared { declared: usize },
    FewerArcsThanDeclared { declared: usize, found: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            ParseErrorKind::MissingHeader => write!(f, "missing `p sp <n> <m>` header"),
            ParseErrorKind::MalformedHeader => write!(f, "malformed header"),
            ParseErrorKind::DuplicateHeader => write!(f, "second header line"),
            ParseErrorKind::MalformedArc => write!(f, "malformed arc line (want `a <u> <v> <w>`)"),
            ParseErrorKind::UnknownDirective(d) => write!(f, "unknown directive `{d}`"),
            ParseErrorKind::VertexOutOfRange { id, n } => {
                write!(f, "vertex id {id} out of range 1..={n}")
            }
            ParseErrorKind::SelfLoop { id } => write!(f, "self-loop at vertex {id}"),
            ParseErrorKind::DuplicateArc { from, to } => {
                write!(f, "duplicate arc {from} -> {to}")
            }
            ParseErrorKind::BadWeight(lit) => write!(f, "invalid weight literal `{lit}`"),
            ParseErrorKind::MoreArcsThanDeclared { declared } => {
                write!(f, "more than the declared {declared} arc lines")
            }
            ParseErrorKind::FewerArcsThanDeclared { declared, found } => {
                write!(f, "header declares {declared} arcs but {found} were found")
            }
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parses the text of a graph file. Ids are mapped to dense 0-based
/// vertex ids (file id 1 becomes vertex 0).
pub fn parse_graph(text: &str, undirected: bool) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut declared = 0usize;
    let mut seen = 0usize;
    let mut last_line = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut tokens = raw.split_whitespace();
        let Some(head) = tokens.next() else { continue };
        match head {
            "c" => continue,
            "p" => {
                if graph.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateHeader));
                }
                let fields: Vec<&str> = tokens.collect();
                if fields.len() != 3 || fields[0] != "sp" {
                    return Err(err(line, ParseErrorKind::MalformedHeader));
                }
                let n: usize = fields[1]
                    .parse()
                    .map_err(|_| err(line, ParseErrorKind::MalformedHeader))?;
                declared = fields[2]
                    .parse()
                    .map_err(|_| err(line, ParseErrorKind::MalformedHeader))?;
                graph = Some(if undirected {
                    Graph::undirected(n)
                } else {
                    Graph::directed(n)
                });
            }
            "a" => {
                let Some(g) = graph.as_mut() else {
                    return Err(err(line, ParseErrorKind::MissingHeader));
                };
                if seen == declared {
                    return Err(err(line, ParseErrorKind::MoreArcsThanDeclared { declared }));
                }
                let fields: Vec<&str> = tokens.collect();
                if fields.len() != 3 {
                    return Err(err(line, ParseErrorKind::MalformedArc));
                }
                let n = g.vertex_count();
                let vertex = |tok: &str| -> Result<usize, ParseError> {
                    let id: usize = tok
                        .parse()
                        .map_err(|_| err(line, ParseErrorKind::MalformedArc))?;
                    if id == 0 || id > n {
                        return Err(err(line, ParseErrorKind::VertexOutOfRange { id, n }));
                    }
                    Ok(id - 1)
                };
                let u = vertex(fields[0])?;
                let v = vertex(fields[1])?;
                let w: Weight = fields[2]
                    .parse()
                    .map_err(|_| err(line, ParseErrorKind::BadWeight(fields[2].to_string())))?;
                g.add_edge(u, v, w).map_err(|e| match e {
                    GraphError::SelfLoop { .. } => err(line, ParseErrorKind::SelfLoop { id: u + 1 }),
                    GraphError::ParallelArc { .. } => err(
                        line,
                        ParseErrorKind::DuplicateArc {
                            from: u + 1,
                            to: v + 1,
                        },
                    ),
                    other => panic!("unexpected graph error while parsing: {other}"),
                })?;
                seen += 1;
            }
            other => {
                return Err(err(line, ParseErrorKind::UnknownDirective(other.to_string())));
            }
        }
    }
    let Some(graph) = graph else {
        return Err(err(last_line.max(1), ParseErrorKind::MissingHeader));
    };
    if seen != declared {
        return Err(err(
            last_line.max(1),
            ParseErrorKind::FewerArcsThanDeclared {
                declared,
                found: seen,
            },
        ));
    }
    Ok(graph)
}

/// Renders `g` back into the file format (1-based ids, one line per arc or
/// edge in insertion order).
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("p sp {} {}\n", g.vertex_count(), g.edge_count()));
    let mut emitted_pairs: Vec<(usize, usize)> = Vec::new();
    for (_, u, v, w) in g.alive_arcs() {
        if g.is_undirected() {
            if emitted_pairs.contains(&(v, u)) {
                continue;
            }
            emitted_pairs.push((u, v));
        }
        out.push_str(&format!("a {} {} {}\n", u + 1, v + 1, w));
    }
    out
}
