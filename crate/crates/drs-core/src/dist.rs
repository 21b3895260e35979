//! All-pairs distances by per-vertex BFS.

use crate::error::Error;
use crate::graph::Graph;
use std::collections::VecDeque;

/// Dense `n x n` matrix of BFS distances for a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    diam: u32,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// Largest distance in the matrix.
    pub fn diam(&self) -> u32 {
        self.diam
    }

    /// Signed difference `d(u, w) - d(v, w)`.
    #[inline]
    pub fn diff(&self, u: usize, v: usize, w: usize) -> i64 {
        self.get(u, w) as i64 - self.get(v, w) as i64
    }

    /// One row of the matrix: distances from `u` to every vertex.
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

/// Distances from `src` to every vertex, `u32::MAX` where unreachable.
fn bfs_row(g: &Graph, src: usize, dist: &mut [u32], queue: &mut VecDeque<usize>) {
    dist.fill(u32::MAX);
    dist[src] = 0;
    queue.clear();
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for &v in g.neighbors(u) {
            if dist[v] == u32::MAX {
                dist[v] = du + 1;
                queue.push_back(v);
            }
        }
    }
}

impl Graph {
    /// BFS all-pairs distances. Fails on disconnected input, reporting a
    /// vertex pair with no path between them.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix, Error> {
        let n = self.n();
        let mut d = vec![0u32; n * n];
        let mut queue = VecDeque::with_capacity(n);
        let mut diam = 0u32;
        for src in 0..n {
            let row = &mut d[src * n..(src + 1) * n];
            bfs_row(self, src, row, &mut queue);
            for (v, &dv) in row.iter().enumerate() {
                if dv == u32::MAX {
                    return Err(Error::Disconnected { u: src, v });
                }
                diam = diam.max(dv);
            }
        }
        Ok(DistanceMatrix { n, d, diam })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut dist = vec![u32::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        bfs_row(self, 0, &mut dist, &mut queue);
        dist.iter().all(|&x| x != u32::MAX)
    }

    /// First vertex unreachable from 0, for error reporting.
    pub(crate) fn first_unreachable(&self) -> Option<usize> {
        let n = self.n();
        let mut dist = vec![u32::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        bfs_row(self, 0, &mut dist, &mut queue);
        dist.iter().position(|&x| x == u32::MAX)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn path_distances() {
        let dm = path(3).distance_matrix().unwrap();
        assert_eq!(dm.get(0, 2), 2);
        assert_eq!(dm.get(2, 0), 2);
        assert_eq!(dm.get(1, 1), 0);
        assert_eq!(dm.diam(), 2);
    }

    #[test]
    fn cycle_distances() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let dm = g.distance_matrix().unwrap();
        for v in 0..5 {
            let mut row: Vec<u32> = dm.row(v).to_vec();
            row.sort_unstable();
            assert_eq!(row, vec![0, 1, 1, 2, 2]);
        }
        assert_eq!(dm.diam(), 2);
    }

    #[test]
    fn star_distances() {
        // K_{1,4}: center 0.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let dm = g.distance_matrix().unwrap();
        assert_eq!(dm.get(1, 2), 2);
        assert_eq!(dm.get(0, 3), 1);
        assert_eq!(dm.diam(), 2);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let dm = g.distance_matrix().unwrap();
        assert_eq!(dm.diam(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn disconnected_reports_pair() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(
            g.distance_matrix(),
            Err(Error::Disconnected { u: 0, v: 2 })
        );
    }
}
