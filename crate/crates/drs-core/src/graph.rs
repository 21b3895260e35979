//! Simple undirected graphs on dense vertex indices.

use crate::error::Error;

/// An undirected simple graph on vertices `0..n`.
///
/// Invariants: no self-loops, no duplicate edges, adjacency lists sorted
/// ascending. Connectivity is *not* an invariant; operations that need it
/// check and report a separating pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an explicit order and edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "graph must have at least one vertex".into(),
            ));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, n });
                }
            }
            if adj[u].contains(&v) {
                let (a, b) = (u.min(v), u.max(v));
                return Err(Error::DuplicateEdge { u: a, v: b });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            edge_count: edges.len(),
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count == self.n() - 1
    }

    /// Connected with exactly as many edges as vertices (one cycle).
    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.edge_count == self.n()
    }

    pub fn is_cycle_graph(&self) -> bool {
        self.n() >= 3 && self.is_unicyclic() && self.vertices().all(|v| self.degree(v) == 2)
    }
}
