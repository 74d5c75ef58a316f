//! Simple undirected graphs on `0..n` with bit-row adjacency.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph. Rows are symmetric, irreflexive and carry no
/// bits beyond column `n - 1`; `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Edge-list interchange form: `{"n": 4, "edges": [[0,1],[1,2]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Builds a graph from unordered vertex pairs. Repeated pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                size: n,
                bound: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph::empty(n)?.complement())
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("a cycle needs 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    /// `K_{1,r}` with the center at vertex 0.
    pub fn star(r: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=r).map(|v| (0, v)).collect();
        Graph::new(r + 1, &edges)
    }

    /// Complete multipartite graph; parts are consecutive label blocks.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        let n = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges)
    }

    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Self {
        debug_assert!(!rows.is_empty());
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// The subgraph induced on `w`, relabeled by increasing original label.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<Graph> {
        if w.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(bad) = w.iter().find(|&v| v >= self.n) {
            return Err(Error::InvalidVertex { vertex: bad, n: self.n });
        }
        let keep = w.to_vec();
        let rows = keep
            .iter()
            .map(|&u| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.adj[u].contains(v))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        Ok(Graph::from_rows(rows))
    }

    /// `self` minus vertex `v`; `None` when that would leave no vertices.
    pub fn delete_vertex(&self, v: usize) -> Option<Graph> {
        if self.n == 1 || v >= self.n {
            return None;
        }
        self.induced_subgraph(self.vertices().without(v)).ok()
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let rows = (0..self.n)
            .map(|v| full.difference(self.adj[v]).without(v))
            .collect();
        Graph::from_rows(rows)
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == self.vertices()
    }

    /// Vertex set of the connected component containing `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in self.adj[u].difference(seen) {
                seen.insert(v);
                queue.push_back(v);
            }
        }
        seen
    }

    /// Applies a relabeling: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n || perm.iter().collect::<std::collections::BTreeSet<_>>().len() != self.n
            || perm.iter().any(|&p| p >= self.n)
        {
            return Err(Error::InvalidArgument(format!(
                "{perm:?} is not a permutation of 0..{}",
                self.n
            )));
        }
        let mut rows = vec![VertexSet::EMPTY; self.n];
        for u in 0..self.n {
            rows[perm[u]] = self.adj[u].iter().map(|v| perm[v]).collect();
        }
        Ok(Graph::from_rows(rows))
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_edge_list(list: &EdgeList) -> Result<Graph> {
        let edges: Vec<_> = list.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(list.n, &edges)
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let list: EdgeList =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Graph::from_edge_list(&list)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_edge_list()).expect("edge list serializes")
    }

    /// Standard graph6 encoding (no header, no trailing newline).
    pub fn to_graph6(&self) -> String {
        let mut out = vec![(self.n as u8) + 63];
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..self.n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.adj[i].contains(j));
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    /// Parses one graph6 record. Surrounding whitespace is ignored.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let bytes = text.trim().as_bytes();
        let parse_err = |msg: String| Error::Parse(format!("graph6 {text:?}: {msg}"));
        let (&first, body) = bytes
            .split_first()
            .ok_or_else(|| parse_err("empty string".into()))?;
        if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(parse_err(format!("byte {bad} outside 63..=126")));
        }
        if first == 126 {
            return Err(parse_err(format!(
                "more than 62 vertices is unsupported (limit {MAX_VERTICES})"
            )));
        }
        let n = (first - 63) as usize;
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                size: n,
                bound: MAX_VERTICES,
            });
        }
        let bit_count = n * (n - 1) / 2;
        let expected = bit_count.div_ceil(6);
        if body.len() != expected {
            return Err(parse_err(format!(
                "expected {expected} data bytes for {n} vertices, found {}",
                body.len()
            )));
        }
        let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
        if (bit_count..expected * 6).any(bit) {
            return Err(parse_err("nonzero padding bits".into()));
        }
        let mut rows = vec![VertexSet::EMPTY; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bit(k) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
                k += 1;
            }
        }
        Ok(Graph::from_rows(rows))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.to_graph6(), self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}
