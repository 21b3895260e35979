//! Deterministic graph generators for named families and seeded random shapes.

use crate::error::Error;
use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// What to generate. Random variants are fully determined by the seed passed
/// to [`generate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphSpec {
    /// Path on `n >= 1` vertices.
    Path(usize),
    /// Cycle on `n >= 3` vertices.
    Cycle(usize),
    /// Complete graph on `n >= 1` vertices.
    Complete(usize),
    /// Complete bipartite graph with part sizes `r, s >= 1`; vertices
    /// `0..r` form one side.
    CompleteBipartite(usize, usize),
    /// Star `K_{1,n-1}` with center 0, `n >= 2`.
    Star(usize),
    /// Two adjacent vertices joined to `m >= 1` independent vertices
    /// (an edge joined with an empty graph); order `m + 2`.
    JoinK2Empty(usize),
    /// Uniform random labeled tree on `n >= 1` vertices (random Pruefer
    /// sequence).
    RandomTree(usize),
    /// Random tree plus one uniformly chosen non-edge; `n >= 3`.
    RandomUnicyclic(usize),
    /// Erdos-Renyi `G(n, p)` resampled until connected.
    RandomConnected { n: usize, p: f64 },
}

/// Builds the graph described by `spec`; identical `(spec, seed)` pairs give
/// identical graphs.
pub fn generate(spec: GraphSpec, seed: u64) -> Result<Graph, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match spec {
        GraphSpec::Path(n) => {
            require(n >= 1, "path needs n >= 1")?;
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        GraphSpec::Cycle(n) => {
            require(n >= 3, "cycle needs n >= 3")?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        GraphSpec::Complete(n) => {
            require(n >= 1, "complete graph needs n >= 1")?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        GraphSpec::CompleteBipartite(r, s) => {
            require(r >= 1 && s >= 1, "complete bipartite needs r, s >= 1")?;
            let mut edges = Vec::new();
            for u in 0..r {
                for v in r..r + s {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(r + s, &edges)
        }
        GraphSpec::Star(n) => {
            require(n >= 2, "star needs n >= 2")?;
            let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
            Graph::from_edges(n, &edges)
        }
        GraphSpec::JoinK2Empty(m) => {
            require(m >= 1, "join needs m >= 1")?;
            let mut edges = vec![(0, 1)];
            for v in 2..m + 2 {
                edges.push((0, v));
                edges.push((1, v));
            }
            Graph::from_edges(m + 2, &edges)
        }
        GraphSpec::RandomTree(n) => {
            require(n >= 1, "tree needs n >= 1")?;
            let edges = random_tree_edges(n, &mut rng);
            Graph::from_edges(n, &edges)
        }
        GraphSpec::RandomUnicyclic(n) => {
            require(n >= 3, "unicyclic needs n >= 3")?;
            let mut edges = random_tree_edges(n, &mut rng);
            let tree = Graph::from_edges(n, &edges)?;
            let mut non_edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !tree.has_edge(u, v) {
                        non_edges.push((u, v));
                    }
                }
            }
            edges.push(non_edges[rng.gen_range(0..non_edges.len())]);
            Graph::from_edges(n, &edges)
        }
        GraphSpec::RandomConnected { n, p } => {
            require(n >= 1, "random connected graph needs n >= 1")?;
            require(
                (0.0..=1.0).contains(&p),
                "edge probability must be in [0, 1]",
            )?;
            for _ in 0..10_000 {
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edges(n, &edges)?;
                if g.is_connected() {
                    return Ok(g);
                }
            }
            Err(Error::InvalidParameter(format!(
                "no connected G({n}, {p}) sample within the retry budget"
            )))
        }
    }
}

fn require(cond: bool, msg: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

/// Uniform random labeled tree via a random Pruefer sequence.
fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    match n {
        1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf remains while decoding");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a.min(b), a.max(b)));
    edges
}
