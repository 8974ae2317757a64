//! DIMACS ASCII clique format.
//!
//! ```text
//! c comment
//! p edge <n> <m>
//! n <v> <w>      vertex weight (extension), 1-based vertex
//! e <u> <v>      edge, 1-based endpoints
//! ```
//!
//! Comment lines may appear anywhere. A comment of the form `c label <v> <name>`
//! attaches a display label to vertex `v`; it has no effect on the graph itself.
//! The edge count `m` on the problem line is advisory.

use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_index(token: Option<&str>, line: usize, n: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    let v: usize = token.parse().map_err(|_| parse_err(line, format!("invalid {what} `{token}`")))?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("{what} {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut builder: Option<GraphBuilder> = None;
    let mut declared_edges = 0usize;
    let mut labels: Vec<(usize, String)> = Vec::new();

    for (idx, raw) in text.split('\n').enumerate() {
        let line = idx + 1;
        let mut tokens = raw.strip_suffix('\r').unwrap_or(raw).split([' ', '\t']).filter(|t| !t.is_empty());
        let Some(kind) = tokens.next() else { continue };
        match kind {
            "c" => {
                if tokens.next() == Some("label") {
                    if let (Some(v), Some(name)) = (tokens.next().and_then(|t| t.parse::<usize>().ok()), tokens.next()) {
                        labels.push((v, name.to_string()));
                    }
                }
            }
            "p" => {
                if builder.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                let format = tokens.next();
                let n = tokens.next().and_then(|t| t.parse::<usize>().ok());
                let m = tokens.next().and_then(|t| t.parse::<usize>().ok());
                match (format, n, m, tokens.next()) {
                    (Some("edge"), Some(n), Some(m), None) => {
                        builder = Some(GraphBuilder::new(n));
                        declared_edges = m;
                    }
                    _ => return Err(parse_err(line, "malformed problem line, expected `p edge <n> <m>`")),
                }
            }
            "e" => {
                let b = builder.as_mut().ok_or_else(|| parse_err(line, "edge line before problem line"))?;
                let n = b.n();
                let u = parse_index(tokens.next(), line, n, "edge endpoint")?;
                let v = parse_index(tokens.next(), line, n, "edge endpoint")?;
                if tokens.next().is_some() {
                    return Err(parse_err(line, "trailing tokens on edge line"));
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop on vertex {}", u + 1)));
                }
                b.add_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
            }
            "n" => {
                let b = builder.as_mut().ok_or_else(|| parse_err(line, "weight line before problem line"))?;
                let v = parse_index(tokens.next(), line, b.n(), "vertex")?;
                let token = tokens.next().ok_or_else(|| parse_err(line, "missing weight"))?;
                let w: i64 = token.parse().map_err(|_| parse_err(line, format!("invalid weight `{token}`")))?;
                if w <= 0 {
                    return Err(parse_err(line, format!("weight {w} must be positive")));
                }
                b.set_weight(v, w as u64).map_err(|e| parse_err(line, e.to_string()))?;
            }
            other => return Err(parse_err(line, format!("unrecognized line type `{other}`"))),
        }
    }

    let mut builder = builder.ok_or_else(|| parse_err(text.split('\n').count(), "missing problem line"))?;
    for (v, name) in labels {
        if v >= 1 && v <= builder.n() {
            builder.set_label(v - 1, name)?;
        }
    }
    let g = builder.build();
    if g.m() != declared_edges {
        log::warn!("problem line declares {declared_edges} edges, found {}", g.m());
    }
    Ok(g)
}

pub fn read_dimacs<R: Read>(mut reader: R) -> Result<Graph> {
    let mut text = String::new();
    reader.read_to_string(&mut text).map_err(|e| parse_err(0, e.to_string()))?;
    parse_dimacs(&text)
}

/// Reads a DIMACS file. I/O failures are reported as a parse error on line 0.
pub fn load_dimacs(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| parse_err(0, format!("{}: {e}", path.display())))?;
    parse_dimacs(&text)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
    if let Some(labels) = g.labels() {
        for (v, label) in labels.iter().enumerate() {
            if *label != (v + 1).to_string() {
                writeln!(out, "c label {} {}", v + 1, label).unwrap();
            }
        }
    }
    for v in 0..g.n() {
        if g.weight(v) != 1 {
            writeln!(out, "n {} {}", v + 1, g.weight(v)).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
