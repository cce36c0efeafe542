//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! graph figure1 10 12
//! v1 v2
//! v1 v4
//! ```
//!
//! The header gives a name (one token), the number of distinct labels and
//! the number of edge lines. Labels are arbitrary whitespace-free strings.
//! A line holding a single label declares an isolated vertex and does not
//! count as an edge line. Internally vertices get ids `0 .. n` in natural
//! label order, so `v2` comes before `v10`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeListDocument {
    pub name: String,
    /// Vertices are `0 .. labels.len()`.
    pub graph: Graph,
    labels: Vec<String>,
}

/// Compares strings treating runs of digits as numbers.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn runs(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ra, rb) = (runs(a), runs(b));
    for (&(da, x), &(db, y)) in ra.iter().zip(&rb) {
        let ord = if da && db {
            let (x, y) = (x.trim_start_matches('0'), y.trim_start_matches('0'));
            x.len().cmp(&y.len()).then_with(|| x.cmp(y))
        } else {
            x.cmp(y)
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ra.len().cmp(&rb.len()).then_with(|| a.cmp(b))
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(char::is_whitespace) && !s.starts_with('#')
}

impl EdgeListDocument {
    /// Builds a document from a graph with arbitrary ids, renumbering
    /// vertices into natural label order.
    pub fn from_graph(name: &str, g: &Graph, label: impl Fn(Vertex) -> String) -> Result<Self> {
        if !valid_label(name) {
            return Err(Error::BadParams(format!("graph name {name:?} must be one token")));
        }
        let mut pairs: Vec<(String, Vertex)> = g.vertices().map(|v| (label(v), v)).collect();
        pairs.sort_by(|a, b| natural_cmp(&a.0, &b.0));
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::BadParams(format!("label {} used twice", w[0].0)));
        }
        if let Some((l, _)) = pairs.iter().find(|(l, _)| !valid_label(l)) {
            return Err(Error::BadParams(format!("label {l:?} is not a single token")));
        }
        let id: BTreeMap<Vertex, Vertex> = pairs
            .iter()
            .enumerate()
            .map(|(i, &(_, v))| (v, i as Vertex))
            .collect();
        Ok(EdgeListDocument {
            name: name.to_string(),
            graph: g.relabel(|v| id[&v]),
            labels: pairs.into_iter().map(|(l, _)| l).collect(),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let bad = |line: usize, msg: String| Error::Malformed { line, msg };
        let mut header: Option<(String, usize, usize, usize)> = None;
        let mut lines: Vec<(usize, Vec<&str>)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if header.is_none() {
                if tokens.len() != 4 || tokens[0] != "graph" {
                    return Err(bad(line_no, "expected header `graph <name> <n> <m>`".into()));
                }
                let n = tokens[2]
                    .parse()
                    .map_err(|_| bad(line_no, format!("vertex count {:?} is not a number", tokens[2])))?;
                let m = tokens[3]
                    .parse()
                    .map_err(|_| bad(line_no, format!("edge count {:?} is not a number", tokens[3])))?;
                header = Some((tokens[1].to_string(), n, m, line_no));
                continue;
            }
            if tokens.len() > 2 {
                return Err(bad(line_no, format!("expected `<u> <v>`, found {} tokens", tokens.len())));
            }
            lines.push((line_no, tokens));
        }
        let (name, n, m, header_line) = header.ok_or_else(|| bad(0, "missing header line".into()))?;

        let distinct: BTreeSet<&str> = lines.iter().flat_map(|(_, t)| t.iter().copied()).collect();
        let mut labels: Vec<String> = distinct.into_iter().map(str::to_string).collect();
        labels.sort_by(|a, b| natural_cmp(a, b));
        let id: BTreeMap<&str, Vertex> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i as Vertex))
            .collect();

        let mut g = Graph::with_vertices(0..labels.len() as Vertex);
        let mut edge_lines = 0;
        for (line_no, t) in &lines {
            if t.len() == 1 {
                continue;
            }
            edge_lines += 1;
            let (u, v) = (id[t[0]], id[t[1]]);
            if u == v {
                return Err(bad(*line_no, format!("loop at {}", t[0])));
            }
            if g.has_edge(u, v) {
                return Err(bad(*line_no, format!("duplicate edge {} {}", t[0], t[1])));
            }
            g.add_edge(u, v)?;
        }
        if labels.len() != n {
            return Err(bad(
                header_line,
                format!("header says {n} vertices, found {} distinct labels", labels.len()),
            ));
        }
        if edge_lines != m {
            return Err(bad(header_line, format!("header says {m} edges, found {edge_lines}")));
        }
        Ok(EdgeListDocument {
            name,
            graph: g,
            labels,
        })
    }

    pub fn label(&self, v: Vertex) -> String {
        self.labels
            .get(v as usize)
            .cloned()
            .unwrap_or_else(|| format!("#{v}"))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Id of `label`; `#k` names an id outside the document, as written by
    /// [`label`](Self::label) for helper vertices.
    pub fn id(&self, label: &str) -> Option<Vertex> {
        if let Some(i) = self.labels.iter().position(|l| l == label) {
            return Some(i as Vertex);
        }
        label.strip_prefix('#')?.parse().ok()
    }

    pub fn require_id(&self, label: &str) -> Result<Vertex> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| i as Vertex)
            .ok_or_else(|| Error::Malformed {
                line: 0,
                msg: format!("unknown vertex label {label:?}"),
            })
    }
}

impl fmt::Display for EdgeListDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = &self.graph;
        writeln!(f, "graph {} {} {}", self.name, g.vertex_count(), g.edge_count())?;
        for v in g.vertices().filter(|&v| g.degree(v) == 0) {
            writeln!(f, "{}", self.label(v))?;
        }
        for (u, v) in g.edges() {
            writeln!(f, "{} {}", self.label(u), self.label(v))?;
        }
        Ok(())
    }
}
