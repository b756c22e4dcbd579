//! Labelled Coxeter graphs and vertex subsets.
//!
//! A graph file is line oriented. `#` starts a comment. Exactly one
//! `vertices:` line declares the generators in order, followed by any number
//! of `edge: <u> <v> <m>` lines with `m >= 2`. A pair of distinct vertices
//! without an edge carries no relation at all (label infinity); a commuting
//! pair needs an explicit edge labelled 2.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a vertex in its graph's declaration order.
///
/// The order of these indices is the total order used for shortlex
/// canonical forms and for every tie-break downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u8);

impl Vertex {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The order of `s_i s_j`: 1 on the diagonal, the edge label, or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

pub const MAX_VERTICES: usize = 64;

/// Immutable labelled simplicial graph `(I, E, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterGraph {
    names: Vec<String>,
    // Row-major `n x n`; `None` off the diagonal means no edge.
    labels: Vec<Option<u32>>,
    index: HashMap<String, Vertex>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != "e"
        && !name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '^' | '\'' | '#' | ','))
}

impl CoxeterGraph {
    /// Builds a graph from names and `(u, v, m)` edges given by name.
    pub fn new<S: AsRef<str>>(names: &[S], edges: &[(S, S, u32)]) -> Result<Self> {
        let mut g = Self::with_vertices(names.iter().map(|s| s.as_ref().to_string()), 0)?;
        for (u, v, m) in edges {
            let u = g.vertex(u.as_ref())?;
            let v = g.vertex(v.as_ref())?;
            g.set_edge(u, v, *m, 0)?;
        }
        Ok(g)
    }

    fn with_vertices(names: impl IntoIterator<Item = String>, line: usize) -> Result<Self> {
        let mut index = HashMap::new();
        let mut list = Vec::new();
        for name in names {
            if !valid_name(&name) {
                return Err(Error::Syntax {
                    line,
                    message: format!("invalid vertex name `{name}`"),
                });
            }
            if index.insert(name.clone(), Vertex(list.len() as u8)).is_some() {
                return Err(Error::DuplicateVertex(name));
            }
            list.push(name);
            if list.len() > MAX_VERTICES {
                return Err(Error::TooManyVertices(list.len()));
            }
        }
        let n = list.len();
        let mut labels = vec![None; n * n];
        for i in 0..n {
            labels[i * n + i] = Some(1);
        }
        Ok(CoxeterGraph {
            names: list,
            labels,
            index,
        })
    }

    fn set_edge(&mut self, u: Vertex, v: Vertex, m: u32, line: usize) -> Result<()> {
        if u == v {
            return Err(Error::Syntax {
                line,
                message: format!("self-loop on `{}`", self.name(u)),
            });
        }
        if m < 2 {
            return Err(Error::BadLabel {
                line,
                label: m.to_string(),
            });
        }
        let n = self.len();
        if self.labels[u.index() * n + v.index()].is_some() {
            return Err(Error::Syntax {
                line,
                message: format!("edge {} {} declared twice", self.name(u), self.name(v)),
            });
        }
        self.labels[u.index() * n + v.index()] = Some(m);
        self.labels[v.index() * n + u.index()] = Some(m);
        Ok(())
    }

    /// Parses the line-oriented graph format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graph: Option<CoxeterGraph> = None;
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(':').ok_or_else(|| Error::Syntax {
                line: line_no,
                message: format!("expected `vertices:` or `edge:`, found `{line}`"),
            })?;
            match key.trim() {
                "vertices" => {
                    if graph.is_some() {
                        return Err(Error::Syntax {
                            line: line_no,
                            message: "more than one `vertices:` line".into(),
                        });
                    }
                    let g = Self::with_vertices(
                        rest.split_whitespace().map(str::to_string),
                        line_no,
                    )?;
                    if g.is_empty() {
                        return Err(Error::Syntax {
                            line: line_no,
                            message: "`vertices:` declares no vertex".into(),
                        });
                    }
                    graph = Some(g);
                }
                "edge" => {
                    let g = graph.as_mut().ok_or_else(|| Error::Syntax {
                        line: line_no,
                        message: "`edge:` before `vertices:`".into(),
                    })?;
                    let fields: Vec<&str> = rest.split_whitespace().collect();
                    if fields.len() != 3 {
                        return Err(Error::Syntax {
                            line: line_no,
                            message: "expected `edge: <u> <v> <m>`".into(),
                        });
                    }
                    let u = g.vertex(fields[0])?;
                    let v = g.vertex(fields[1])?;
                    let m: u32 = fields[2].parse().map_err(|_| Error::BadLabel {
                        line: line_no,
                        label: fields[2].to_string(),
                    })?;
                    if m < 2 {
                        return Err(Error::BadLabel {
                            line: line_no,
                            label: fields[2].to_string(),
                        });
                    }
                    g.set_edge(u, v, m, line_no)?;
                }
                other => {
                    return Err(Error::Syntax {
                        line: line_no,
                        message: format!("unknown directive `{other}`"),
                    })
                }
            }
        }
        graph.ok_or(Error::Syntax {
            line: 0,
            message: "missing `vertices:` line".into(),
        })
    }

    /// Canonical serialization; `parse` is its left inverse.
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices: {}\n", self.names.join(" "));
        for (u, v, m) in self.edges() {
            out.push_str(&format!("edge: {} {} {}\n", self.name(u), self.name(v), m));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator {
        (0..self.names.len() as u8).map(Vertex)
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.index()]
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Edges `(u, v, m)` with `u < v`, in index order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, u32)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |i| {
            (i + 1..n).filter_map(move |j| {
                self.labels[i * n + j].map(|m| (Vertex(i as u8), Vertex(j as u8), m))
            })
        })
    }

    #[inline]
    pub fn label(&self, i: Vertex, j: Vertex) -> Label {
        match self.labels[i.index() * self.len() + j.index()] {
            Some(m) => Label::Finite(m),
            None => Label::Infinity,
        }
    }

    /// `m(i, j)` looked up by name.
    pub fn coxeter_label(&self, i: &str, j: &str) -> Result<Label> {
        Ok(self.label(self.vertex(i)?, self.vertex(j)?))
    }

    pub fn all(&self) -> VertexSubset {
        VertexSubset::from_vertices(self.vertices())
    }

    /// Parses a comma-separated vertex list; the empty string is the empty set.
    pub fn parse_subset(&self, list: &str) -> Result<VertexSubset> {
        let mut s = VertexSubset::empty();
        for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            s.insert(self.vertex(tok)?);
        }
        Ok(s)
    }

    pub fn subset_names(&self, s: VertexSubset) -> Vec<String> {
        s.iter().map(|v| self.name(v).to_string()).collect()
    }

    /// The full labelled subgraph spanned by `subset`, together with the map
    /// from its vertices back to vertices of `self`.
    pub fn full_subgraph(&self, subset: VertexSubset) -> (CoxeterGraph, Vec<Vertex>) {
        let back: Vec<Vertex> = subset.iter().collect();
        let mut g = Self::with_vertices(back.iter().map(|&v| self.name(v).to_string()), 0)
            .expect("names already validated");
        for (a, &u) in back.iter().enumerate() {
            for (b, &v) in back.iter().enumerate().skip(a + 1) {
                if let Label::Finite(m) = self.label(u, v) {
                    g.set_edge(Vertex(a as u8), Vertex(b as u8), m, 0)
                        .expect("labels already validated");
                }
            }
        }
        (g, back)
    }
}

/// A subset of the vertices of some graph, as a bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSubset(u64);

impl VertexSubset {
    pub fn empty() -> Self {
        VertexSubset(0)
    }

    pub fn from_vertices(vs: impl IntoIterator<Item = Vertex>) -> Self {
        let mut s = Self::empty();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSubset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: Vertex) -> bool {
        self.0 >> v.0 & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1 << v.0;
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSubset(self.0 & other.0)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSubset(self.0 | other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        (0..64u8).filter(move |&k| self.0 >> k & 1 == 1).map(Vertex)
    }
}
