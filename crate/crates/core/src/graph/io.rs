//! Edge-list and DIMACS `.col` readers and writers.
//!
//! Edge list: one `u v` pair per line (0-based), `#` starts a comment, blank
//! lines are skipped. The writer adds a `# vertices N` comment so isolated
//! trailing vertices survive a round trip; readers honour it when present.
//! Non-numeric vertex names are relabelled densely in order of appearance.
//!
//! DIMACS: `p edge n m` followed by `e u v` lines, 1-based on the wire.

use std::collections::HashMap;
use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" | "edges" => Ok(GraphFormat::EdgeList),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            _ => Err(Error::Parameter(format!("unknown graph format {s:?}"))),
        }
    }
}

pub fn read_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => read_edge_list(text),
        GraphFormat::Dimacs => read_dimacs(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Dimacs => write_dimacs(g),
    }
}

/// Guesses the format from content: a `p` line means DIMACS.
pub fn detect_format(text: &str) -> GraphFormat {
    let dimacs = text.lines().map(str::trim).any(|l| l.starts_with("p ") || l.starts_with("p\t"));
    if dimacs {
        GraphFormat::Dimacs
    } else {
        GraphFormat::EdgeList
    }
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut pairs: Vec<(&str, &str)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let (body, comment) = match raw.find('#') {
            Some(i) => (&raw[..i], Some(&raw[i + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            let mut it = c.split_whitespace();
            if let (Some("vertices"), Some(n)) = (it.next(), it.next()) {
                declared = Some(n.parse().map_err(|_| Error::Parse(format!("line {}: bad vertex count", lineno + 1)))?);
            }
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.len() {
            0 => {}
            2 => pairs.push((toks[0], toks[1])),
            _ => return Err(Error::Parse(format!("line {}: expected `u v`, got {:?}", lineno + 1, raw.trim()))),
        }
    }

    let numeric: Option<Vec<(usize, usize)>> = pairs
        .iter()
        .map(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
        .collect();
    let (n, edges) = match numeric {
        Some(edges) => {
            let max = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
            (declared.unwrap_or(0).max(max), edges)
        }
        None => {
            let mut ids: HashMap<&str, usize> = HashMap::new();
            let mut id = |s| {
                let next = ids.len();
                *ids.entry(s).or_insert(next)
            };
            let edges: Vec<_> = pairs.iter().map(|&(a, b)| (id(a), id(b))).collect();
            let n = declared.unwrap_or(0).max(ids.len());
            (n, edges)
        }
    };
    Graph::from_edges(n, edges).map_err(|e| Error::Parse(e.to_string()))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# vertices {}\n", g.n());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let toks: Vec<&str> = raw.split_whitespace().collect();
        let bad = || Error::Parse(format!("line {}: malformed {:?}", lineno + 1, raw.trim()));
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if toks.len() != 4 || n.is_some() {
                    return Err(bad());
                }
                n = Some(toks[2].parse().map_err(|_| bad())?);
            }
            Some("e") => {
                if toks.len() != 3 {
                    return Err(bad());
                }
                let count = n.ok_or_else(|| Error::Parse(format!("line {}: edge before `p` line", lineno + 1)))?;
                let u: usize = toks[1].parse().map_err(|_| bad())?;
                let v: usize = toks[2].parse().map_err(|_| bad())?;
                if u == 0 || v == 0 || u > count || v > count {
                    return Err(Error::Parse(format!("line {}: vertex out of range 1..={count}", lineno + 1)));
                }
                edges.push((u - 1, v - 1));
            }
            Some(_) => return Err(bad()),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing `p edge n m` line".into()))?;
    Graph::from_edges(n, edges).map_err(|e| Error::Parse(e.to_string()))
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
