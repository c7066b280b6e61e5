//! Simple undirected graphs on dense vertex indices.
//!
//! Edges are stored as `(min, max)` pairs in sorted order, which is also the
//! order in which edges appear inside cells.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Loops, duplicates and out-of-range
    /// endpoints are rejected; the reported line is the 1-based edge position.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        Self::from_numbered(n, edges.into_iter().enumerate().map(|(i, e)| (i + 1, e)))
    }

    fn from_numbered(
        n: usize,
        edges: impl IntoIterator<Item = (usize, (Vertex, Vertex))>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (line, (u, v)) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop { line, vertex: u });
            }
            let (a, b) = (u.min(v), u.max(v));
            if adj[a].contains(&b) {
                return Err(Error::DuplicateEdge { line, u: a, v: b });
            }
            adj[a].push(b);
            adj[b].push(a);
            list.push((a, b));
        }
        list.sort_unstable();
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(SimpleGraph { n, edges: list, adj })
    }

    /// Parses the `n m` header followed by `m` lines of `u v`.
    ///
    /// Blank lines and lines starting with `#` are skipped. Errors carry the
    /// 1-based line number of the offending line.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::Malformed {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;

        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines.by_ref().take(m) {
            let [u, v] = parse_pair(line, body)?;
            edges.push((line, (u, v)));
        }
        if edges.len() < m {
            return Err(Error::Malformed {
                line: hline,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Malformed {
                line,
                message: format!("more than the {m} announced edges"),
            });
        }
        Self::from_numbered(n, edges)
    }

    pub fn named(family: GraphFamily, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a named graph needs at least one vertex".into()));
        }
        let edges: Vec<(Vertex, Vertex)> = match family {
            GraphFamily::Path => (1..n).map(|i| (i - 1, i)).collect(),
            GraphFamily::Star => (1..n).map(|i| (0, i)).collect(),
            GraphFamily::Cycle => {
                if n < 3 {
                    return Err(Error::InvalidGraph(format!("cycle needs n >= 3, got {n}")));
                }
                (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]).collect()
            }
            GraphFamily::Complete => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
        };
        Self::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the edge `{u, v}` in [`edges`](Self::edges).
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or_default();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest path from `from` to `to`. Among all shortest paths the
    /// lexicographically smallest vertex sequence is returned.
    pub fn shortest_path(&self, from: Vertex, to: Vertex) -> Result<VertexPath> {
        for v in [from, to] {
            if v >= self.n {
                return Err(Error::OutOfRange(format!("vertex {v} (graph has {} vertices)", self.n)));
            }
        }
        // Distances to the target make the greedy walk below pick the
        // smallest next vertex that still lies on some shortest path.
        let dist = self.distances_from(to);
        let Some(mut remaining) = dist[from] else {
            return Err(Error::NoPath { from, to });
        };
        let mut walk = vec![from];
        let mut cur = from;
        while remaining > 0 {
            cur = *self.adj[cur]
                .iter()
                .find(|&&w| dist[w] == Some(remaining - 1))
                .expect("bfs layer has a predecessor");
            walk.push(cur);
            remaining -= 1;
        }
        Ok(VertexPath(walk))
    }

    /// True iff the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Serialises in the same `n m` / `u v` format accepted by
    /// [`parse_edge_list`](Self::parse_edge_list).
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Malformed {
            line,
            message: format!("expected two integers, got {:?}", body),
        });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| Error::Malformed {
            line,
            message: format!("{f:?} is not a non-negative integer"),
        })?;
    }
    Ok(out)
}

/// Standard families, written `P<n>`, `T<n>`, `C<n>`, `K<n>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    Path,
    /// Center is vertex 0.
    Star,
    Cycle,
    Complete,
}

/// A named graph such as `K5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub family: GraphFamily,
    pub n: usize,
}

impl NamedGraph {
    pub fn build(self) -> Result<SimpleGraph> {
        SimpleGraph::named(self.family, self.n)
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('P') => GraphFamily::Path,
            Some('T') => GraphFamily::Star,
            Some('C') => GraphFamily::Cycle,
            Some('K') => GraphFamily::Complete,
            _ => return Err(Error::InvalidGraph(format!("unknown graph name {s:?}"))),
        };
        let n = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidGraph(format!("bad vertex count in {s:?}")))?;
        Ok(NamedGraph { family, n })
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            GraphFamily::Path => 'P',
            GraphFamily::Star => 'T',
            GraphFamily::Cycle => 'C',
            GraphFamily::Complete => 'K',
        };
        write!(f, "{c}{}", self.n)
    }
}

/// Non-empty walk whose consecutive vertices are adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPath(Vec<Vertex>);

impl VertexPath {
    pub fn new(graph: &SimpleGraph, vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Precondition("a path needs at least one vertex".into()));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= graph.vertex_count()) {
            return Err(Error::OutOfRange(format!("path vertex {v}")));
        }
        if let Some(w) = vertices.windows(2).find(|w| !graph.has_edge(w[0], w[1])) {
            return Err(Error::NotAnEdge { u: w[0], v: w[1] });
        }
        Ok(VertexPath(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        self.0[self.0.len() - 1]
    }
}
