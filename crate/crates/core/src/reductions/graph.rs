use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Largest graph [`alpha`] accepts by default.
pub const DEFAULT_ALPHA_CAP: usize = 16;

/// A simple undirected graph on named vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

fn check_token(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(char::is_whitespace) || name.contains('>') {
        return Err(Error::InvalidName(name.to_string()));
    }
    Ok(())
}

impl Graph {
    /// Edges are stored with the smaller endpoint first, in input order.
    pub fn new(vertices: Vec<String>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut names = HashSet::new();
        for v in &vertices {
            check_token(v)?;
            if !names.insert(v.as_str()) {
                return Err(Error::Precondition(format!("duplicate vertex `{v}`")));
            }
        }
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= vertices.len() || v >= vertices.len() {
                return Err(Error::Precondition(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::Precondition(format!("loop at `{}`", vertices[u])));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::Precondition(format!(
                    "repeated edge `{}`-`{}`",
                    vertices[e.0], vertices[e.1]
                )));
            }
            normalized.push(e);
        }
        Ok(Graph {
            vertices,
            edges: normalized,
        })
    }

    pub fn from_edges(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let index: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let lookup = |v: &str| {
            index
                .get(v)
                .copied()
                .ok_or_else(|| Error::Precondition(format!("unknown vertex `{v}`")))
        };
        let edges = edges
            .iter()
            .map(|&(u, v)| Ok((lookup(u)?, lookup(v)?)))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(vertices.iter().map(|v| v.to_string()).collect(), edges)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        let mut degree = vec![0usize; self.vertices.len()];
        for &(u, v) in &self.edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        (0..self.vertices.len()).filter(|&v| degree[v] == 0).collect()
    }

    /// Line format: `vertices: a b c` then `edge: a b` lines; `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices: Option<Vec<String>> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, body) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, "expected `key: value`"))?;
            match (key.trim(), &vertices) {
                ("vertices", None) => {
                    vertices = Some(body.split_whitespace().map(String::from).collect());
                }
                ("edge", Some(vs)) => {
                    let ends: Vec<&str> = body.split_whitespace().collect();
                    let [u, v] = ends[..] else {
                        return Err(Error::parse(line_no, "an edge needs exactly two endpoints"));
                    };
                    let find = |name: &str| {
                        vs.iter()
                            .position(|x| x == name)
                            .ok_or_else(|| Error::parse(line_no, format!("unknown vertex `{name}`")))
                    };
                    edges.push((find(u)?, find(v)?));
                }
                (k, _) => return Err(Error::parse(line_no, format!("unexpected `{k}:`"))),
            }
        }
        let vertices = vertices.ok_or_else(|| Error::parse(1, "missing `vertices:` line"))?;
        Graph::new(vertices, edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices.join(" "))?;
        for &(u, v) in &self.edges {
            writeln!(f, "edge: {} {}", self.vertices[u], self.vertices[v])?;
        }
        Ok(())
    }
}

/// Independence number by include/exclude branching over vertex bitmasks.
pub fn alpha(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.vertex_count();
    let cap = cap.min(64);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "vertex count",
            size: n,
            cap,
        });
    }
    let mut neighbours = vec![0u64; n];
    for &(u, v) in g.edges() {
        neighbours[u] |= 1 << v;
        neighbours[v] |= 1 << u;
    }
    fn best(open: u64, neighbours: &[u64]) -> usize {
        if open == 0 {
            return 0;
        }
        let v = open.trailing_zeros() as usize;
        let without = open & !(1 << v);
        let take = 1 + best(without & !neighbours[v], neighbours);
        if neighbours[v] & without == 0 {
            // v has no open neighbour: taking it is never worse
            return take;
        }
        take.max(best(without, neighbours))
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(best(all, &neighbours))
}
