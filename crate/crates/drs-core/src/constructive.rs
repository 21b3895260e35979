//! Explicit doubly resolving sets: diametral-path complements, tree leaf
//! sets, and leaf-plus-cycle sets for unicyclic graphs.

use crate::dist::DistanceMatrix;
use crate::error::Error;
use crate::gen::{generate, GraphSpec};
use crate::graph::Graph;
use crate::resolve::verify_doubly_resolving;
use crate::set::VertexSet;
use crate::structure::CycleStructure;
use itertools::Itertools;
use serde::Serialize;

/// Everything except the interior of one diametral shortest path: a doubly
/// resolving set of size `n - diam + 1`. Requires a connected graph on at
/// least 3 vertices. With diam 1 nothing is removed and the whole vertex set
/// is returned.
///
/// Deterministic choices: the diametral pair is the lexicographically least,
/// and the path comes from a BFS parent chain with ascending neighbor order.
pub fn construct_diametral(g: &Graph, dm: &DistanceMatrix) -> Result<VertexSet, Error> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooFewVertices { n, required: 3 });
    }
    let diam = dm.diam();
    let (src, dst) = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| dm.get(u, v) == diam)
        .expect("some pair attains the diameter");

    // BFS parent chain from src; neighbors ascend, so each parent is the
    // least-index predecessor on a shortest path.
    let mut parent = vec![usize::MAX; n];
    let mut dist = vec![u32::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    dist[src] = 0;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == u32::MAX {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut interior = vec![false; n];
    let mut at = parent[dst];
    while at != src {
        interior[at] = true;
        at = parent[at];
    }
    let members: Vec<usize> = (0..n).filter(|&v| !interior[v]).collect();
    let set = VertexSet::from_sorted(members, n);
    debug_assert_eq!(set.len(), n - diam as usize + 1);
    debug_assert!(verify_doubly_resolving(dm, &set)
        .expect("constructed sets have at least two members")
        .is_resolving());
    Ok(set)
}

/// The leaf set of a tree — its unique minimum doubly resolving set.
pub fn construct_tree_basis(g: &Graph) -> Result<VertexSet, Error> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { n, required: 2 });
    }
    if let Some(v) = g.first_unreachable() {
        return Err(Error::Disconnected { u: 0, v });
    }
    if g.edge_count() != n - 1 {
        return Err(Error::NotATree {
            vertices: n,
            edges: g.edge_count(),
        });
    }
    Ok(g.leaves())
}

/// A minimum doubly resolving set of the bare cycle underlying a unicyclic
/// graph, chosen to contain as many branch vertices as possible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleBasis {
    /// The chosen cycle vertices (2 for odd cycles, 3 for even), as indices
    /// of the host graph.
    pub set: VertexSet,
    /// Members of `set` with degree 2 in the host graph, i.e. the cycle
    /// vertices that carry no hanging tree.
    pub degree_two: VertexSet,
}

/// Searches every 2-subset (odd cycle) or 3-subset (even cycle) of the cycle
/// vertices for one that doubly resolves the bare cycle, minimizing the
/// number of degree-2 members; ties go to the lexicographically least vertex
/// set. `dm_cycle` must be the distance matrix of a bare cycle of the same
/// length, with positions numbered along `cs.cycle`.
///
/// Rejects bare cycles: with no hanging trees the closed forms apply
/// directly and the leaf-based construction below has nothing to extend.
pub fn cycle_basis_preferring_branches(
    g: &Graph,
    cs: &CycleStructure,
    dm_cycle: &DistanceMatrix,
) -> Result<CycleBasis, Error> {
    let m = cs.m();
    if m == g.n() {
        return Err(Error::BareCycle);
    }
    if dm_cycle.n() != m {
        return Err(Error::ContextMismatch {
            set_n: m,
            matrix_n: dm_cycle.n(),
        });
    }
    let size = if m % 2 == 1 { 2 } else { 3 };
    let mut best: Option<(usize, Vec<usize>)> = None;
    for positions in (0..m).combinations(size) {
        let candidate = VertexSet::from_sorted(positions.clone(), m);
        if !verify_doubly_resolving(dm_cycle, &candidate)
            .expect("candidates have two or three members")
            .is_resolving()
        {
            continue;
        }
        let mut vertices: Vec<usize> = positions.iter().map(|&p| cs.cycle[p]).collect();
        vertices.sort_unstable();
        let degree_two = vertices.iter().filter(|&&v| g.degree(v) == 2).count();
        let key = (degree_two, vertices);
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    let (_, vertices) = best.expect("every cycle has a minimum doubly resolving set");
    let degree_two: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|&v| g.degree(v) == 2)
        .collect();
    Ok(CycleBasis {
        set: VertexSet::from_sorted(vertices, g.n()),
        degree_two: VertexSet::from_sorted(degree_two, g.n()),
    })
}

/// Result of [`construct_unicyclic`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnicyclicConstruction {
    /// The doubly resolving set: all leaves plus `extra`.
    pub set: VertexSet,
    /// The cycle basis the extras came from.
    pub cycle_basis: CycleBasis,
    /// Degree-2 members of the cycle basis, the only cycle vertices that
    /// must be added to the leaves.
    pub extra: VertexSet,
    pub cycle_len: usize,
    pub leaf_count: usize,
}

/// For a connected unicyclic graph that is not a bare cycle: the leaves plus
/// the degree-2 members of a branch-preferring cycle basis. The result is
/// doubly resolving with at most `leaves + 1` members for odd cycles and
/// `leaves + 2` for even ones.
pub fn construct_unicyclic(g: &Graph) -> Result<UnicyclicConstruction, Error> {
    let cs = g.cycle_structure()?;
    let m = cs.m();
    if m == g.n() {
        return Err(Error::BareCycle);
    }
    let bare = generate(GraphSpec::Cycle(m), 0).expect("m >= 3");
    let dm_cycle = bare.distance_matrix().expect("cycles are connected");
    let basis = cycle_basis_preferring_branches(g, &cs, &dm_cycle)?;
    let leaves = g.leaves();
    let set = leaves.union(&basis.degree_two);
    debug_assert!(set.len() <= leaves.len() + if m % 2 == 1 { 1 } else { 2 });
    debug_assert!({
        let dm = g.distance_matrix().expect("checked connected");
        verify_doubly_resolving(&dm, &set)
            .expect("leaves plus extras has at least two members")
            .is_resolving()
    });
    Ok(UnicyclicConstruction {
        leaf_count: leaves.len(),
        extra: basis.degree_two.clone(),
        cycle_len: m,
        cycle_basis: basis,
        set,
    })
}
