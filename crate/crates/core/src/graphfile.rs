//! Line-oriented text format for plumbing graphs.
//!
//! ```text
//! graph e8
//! # comment
//! vertex 0 -2 0
//! vertex 1 -2 0
//! edge 0 1
//! ```
//!
//! `graph <name>` is optional and must be the first content line. The emitter
//! writes vertices by ascending id and edges sorted with the smaller id first,
//! so canonical files survive a parse/emit round trip byte for byte.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::plumbing::{build_graph, PlumbingError, PlumbingGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] PlumbingError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub name: Option<String>,
    pub graph: PlumbingGraph,
}

impl GraphFile {
    pub fn new(name: Option<String>, graph: PlumbingGraph) -> Self {
        GraphFile { name, graph }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> GraphFileError {
    GraphFileError::Syntax {
        line,
        message: message.into(),
    }
}

fn field<T: std::str::FromStr>(
    line: usize,
    what: &str,
    tok: Option<&str>,
) -> Result<T, GraphFileError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

pub fn parse(text: &str) -> Result<GraphFile, GraphFileError> {
    let mut name = None;
    let mut seen_content = false;
    let mut vertices: BTreeMap<usize, (i64, u32)> = BTreeMap::new();
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        let keyword = toks.next().expect("non-empty line");
        match keyword {
            "graph" => {
                if seen_content {
                    return Err(syntax(
                        line,
                        "`graph` must be the first line and appear once",
                    ));
                }
                let n: String = field(line, "graph name", toks.next())?;
                name = Some(n);
            }
            "vertex" => {
                let id: usize = field(line, "vertex id", toks.next())?;
                let weight: i64 = field(line, "weight", toks.next())?;
                let genus: u32 = field(line, "genus", toks.next())?;
                if vertices.insert(id, (weight, genus)).is_some() {
                    return Err(syntax(line, format!("duplicate vertex {id}")));
                }
            }
            "edge" => {
                let u: usize = field(line, "edge endpoint", toks.next())?;
                let v: usize = field(line, "edge endpoint", toks.next())?;
                if u == v {
                    return Err(syntax(line, format!("loop at vertex {u} is forbidden")));
                }
                edges.push((line, u, v));
            }
            other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
        seen_content = true;
    }

    let r = vertices.len();
    if let Some((line, u, v)) = edges
        .iter()
        .find(|&&(_, u, v)| !vertices.contains_key(&u) || !vertices.contains_key(&v))
    {
        return Err(syntax(
            *line,
            format!("edge ({u}, {v}) names a missing vertex"),
        ));
    }
    if vertices.keys().enumerate().any(|(i, &id)| i != id) {
        return Err(PlumbingError::BadIds(format!("vertex ids are not 0..{r}")).into());
    }
    let graph = build_graph(
        vertices.into_iter().map(|(id, (w, g))| (id, w, g)),
        edges.into_iter().map(|(_, u, v)| (u, v)),
    )?;
    Ok(GraphFile { name, graph })
}

pub fn emit(file: &GraphFile) -> String {
    let mut out = String::new();
    if let Some(name) = &file.name {
        writeln!(out, "graph {name}").unwrap();
    }
    for (id, v) in file.graph.vertices().iter().enumerate() {
        writeln!(out, "vertex {id} {} {}", v.weight, v.genus).unwrap();
    }
    for (u, v) in file.graph.edges() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    out
}
