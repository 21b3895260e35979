//! Helpers shared by the integration test targets: exhaustive and random
//! graph corpora plus a definition-literal verifier kept deliberately
//! independent of the library's fast path.

// Each test target compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use drs_core::{generate, Graph, GraphSpec};

/// Checks the doubly-resolving definition directly: every vertex pair (u, v)
/// must have witnesses x, y in `w` whose distance differences disagree.
/// Written against raw matrix entries so it shares no code with
/// `verify_doubly_resolving`.
pub fn literal_doubly_resolving(g: &Graph, w: &[usize]) -> bool {
    let dm = g.distance_matrix().expect("corpus graphs are connected");
    if w.len() < 2 {
        return false;
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let mut resolved = false;
            'witnesses: for (i, &x) in w.iter().enumerate() {
                for &y in &w[i + 1..] {
                    let dx = dm.get(v, x) as i64 - dm.get(u, x) as i64;
                    let dy = dm.get(v, y) as i64 - dm.get(u, y) as i64;
                    if dx != dy {
                        resolved = true;
                        break 'witnesses;
                    }
                }
            }
            if !resolved {
                return false;
            }
        }
    }
    true
}

/// All subsets of `0..n` of size `k`, lexicographically.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Brute-force minimum: the smallest size with a doubly resolving set, and
/// every witness of that size. Uses only `literal_doubly_resolving`.
pub fn brute_all_minimum_sets(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    let n = g.n();
    for k in 2..=n {
        let hits: Vec<Vec<usize>> = subsets(n, k)
            .into_iter()
            .filter(|c| literal_doubly_resolving(g, c))
            .collect();
        if !hits.is_empty() {
            return (k, hits);
        }
    }
    unreachable!("the whole vertex set doubly resolves any connected graph on >= 2 vertices")
}

/// Every labeled connected graph on `n` vertices, by edge-set bitmask.
pub fn exhaustive_connected(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() <= 20, "exhaustive corpus limited to small n");
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Deterministic random connected graphs: one per seed, mixing sparse and
/// dense edge probabilities.
pub fn random_connected(n: usize, count: usize, seed_base: u64) -> Vec<Graph> {
    (0..count as u64)
        .map(|i| {
            let p = [0.25, 0.4, 0.6][(i % 3) as usize];
            generate(GraphSpec::RandomConnected { n, p }, seed_base + i).unwrap()
        })
        .collect()
}

pub fn random_trees(n_max: usize, count: usize, seed_base: u64) -> Vec<Graph> {
    (0..count as u64)
        .map(|i| {
            let n = 2 + (i as usize % (n_max - 1));
            generate(GraphSpec::RandomTree(n), seed_base + i).unwrap()
        })
        .collect()
}

/// Random unicyclic graphs that are not bare cycles (each has at least one
/// vertex off the cycle).
pub fn random_unicyclic_with_trees(n_max: usize, count: usize, seed_base: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut seed = seed_base;
    while out.len() < count {
        let n = 4 + (seed as usize % (n_max - 3));
        let g = generate(GraphSpec::RandomUnicyclic(n), seed).unwrap();
        seed += 1;
        if !g.is_cycle_graph() {
            out.push(g);
        }
    }
    out
}
