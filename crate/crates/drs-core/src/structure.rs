//! Structural queries: leaves, twin classes, and the cycle of a unicyclic
//! graph with its hanging trees.

use crate::error::Error;
use crate::graph::Graph;
use crate::set::VertexSet;
use serde::Serialize;
use std::collections::BTreeMap;

/// Whether a twin class is keyed on open or closed neighborhoods.
///
/// Two vertices `u, v` are twins when `N(u) \ {v} = N(v) \ {u}`. Non-adjacent
/// twins share their open neighborhoods; adjacent twins share their closed
/// ones. Each relation is an equivalence, and no vertex can belong to classes
/// of both kinds, so the two families of classes are disjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinKind {
    Open,
    Closed,
}

/// A maximal set of at least two pairwise twins.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinClass {
    pub kind: TwinKind,
    /// Members in ascending order.
    pub members: Vec<usize>,
}

/// All twin classes of a graph, sorted by smallest member. Vertices with no
/// twin appear in no class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
}

impl TwinPartition {
    /// Class index of each vertex, or `None` when the vertex has no twin.
    pub fn class_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut map = vec![None; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in &class.members {
                map[v] = Some(i);
            }
        }
        map
    }

    /// Twin pairs (by the pairwise definition) not covered by any class.
    ///
    /// Splitting by neighborhood kind cannot miss a pair — adjacency decides
    /// which kind applies — so this is expected to be empty; tests and the
    /// conformance suite assert it.
    pub fn uncovered_twin_pairs(&self, g: &Graph) -> Vec<(usize, usize)> {
        let class_of = self.class_of(g.n());
        let mut missed = Vec::new();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if are_twins(g, u, v) {
                    let covered = match (class_of[u], class_of[v]) {
                        (Some(a), Some(b)) => a == b,
                        _ => false,
                    };
                    if !covered {
                        missed.push((u, v));
                    }
                }
            }
        }
        missed
    }
}

/// Pairwise twin test: `N(u) \ {v} = N(v) \ {u}`.
pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = |list: &[usize], x: usize| -> Vec<usize> {
        list.iter().copied().filter(|&w| w != x).collect()
    };
    strip(g.neighbors(u), v) == strip(g.neighbors(v), u)
}

/// The unique cycle of a unicyclic graph plus the vertex sets hanging off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStructure {
    /// Cycle vertices in traversal order, starting at the smallest cycle
    /// vertex and moving toward its smaller cycle neighbor.
    pub cycle: Vec<usize>,
    /// For each cycle vertex of degree >= 3, the non-cycle vertices whose
    /// paths to the cycle enter through it. Cycle vertices of degree 2 have
    /// no entry.
    pub attachments: BTreeMap<usize, Vec<usize>>,
}

impl CycleStructure {
    /// Cycle length `m`.
    pub fn m(&self) -> usize {
        self.cycle.len()
    }

    pub fn on_cycle(&self, v: usize) -> bool {
        self.cycle.contains(&v)
    }
}

impl Graph {
    /// Degree-1 vertices in ascending order.
    pub fn leaves(&self) -> VertexSet {
        let members: Vec<usize> = self.vertices().filter(|&v| self.degree(v) == 1).collect();
        VertexSet::from_sorted(members, self.n())
    }

    /// Twin classes under open- and closed-neighborhood equality.
    pub fn twin_partition(&self) -> TwinPartition {
        let mut open: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
        let mut closed: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for v in self.vertices() {
            open.entry(self.neighbors(v)).or_default().push(v);
            let mut key = self.neighbors(v).to_vec();
            let pos = key.binary_search(&v).unwrap_err();
            key.insert(pos, v);
            closed.entry(key).or_default().push(v);
        }
        let mut classes: Vec<TwinClass> = Vec::new();
        for (kind, groups) in [
            (TwinKind::Open, open.into_values().collect::<Vec<_>>()),
            (TwinKind::Closed, closed.into_values().collect::<Vec<_>>()),
        ] {
            for members in groups {
                if members.len() >= 2 {
                    classes.push(TwinClass { kind, members });
                }
            }
        }
        classes.sort_by_key(|c| c.members[0]);
        TwinPartition { classes }
    }

    /// Finds the unique cycle of a connected unicyclic graph and assigns each
    /// remaining vertex to the cycle vertex its tree hangs from.
    pub fn cycle_structure(&self) -> Result<CycleStructure, Error> {
        let n = self.n();
        if let Some(v) = self.first_unreachable() {
            return Err(Error::Disconnected { u: 0, v });
        }
        if self.edge_count() != n {
            return Err(Error::NotUnicyclic {
                vertices: n,
                edges: self.edge_count(),
            });
        }

        // Peel leaves repeatedly; what survives is the cycle.
        let mut degree: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let mut stack: Vec<usize> = self.vertices().filter(|&v| degree[v] == 1).collect();
        let mut removed = vec![false; n];
        while let Some(v) = stack.pop() {
            removed[v] = true;
            for &w in self.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
        let on_cycle: Vec<bool> = removed.iter().map(|&r| !r).collect();

        // Walk the cycle from its smallest vertex toward the smaller neighbor.
        let start = (0..n).find(|&v| on_cycle[v]).expect("a cycle exists");
        let cycle_neighbors = |v: usize| -> Vec<usize> {
            self.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| on_cycle[w])
                .collect()
        };
        let mut cycle = vec![start];
        let mut prev = start;
        let mut current = cycle_neighbors(start)[0];
        while current != start {
            cycle.push(current);
            let next = cycle_neighbors(current)
                .into_iter()
                .find(|&w| w != prev)
                .expect("cycle vertices have two cycle neighbors");
            prev = current;
            current = next;
        }

        // Hanging trees: flood from each cycle vertex without re-entering the
        // cycle. In a unicyclic graph no hanging vertex touches two cycle
        // vertices, so the floods partition the non-cycle vertices.
        let mut attachments = BTreeMap::new();
        for &x in &cycle {
            let mut seen = vec![false; n];
            let mut members = Vec::new();
            let mut queue: Vec<usize> = self
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&w| !on_cycle[w])
                .collect();
            while let Some(v) = queue.pop() {
                if seen[v] {
                    continue;
                }
                seen[v] = true;
                members.push(v);
                for &w in self.neighbors(v) {
                    if !on_cycle[w] && !seen[w] {
                        queue.push(w);
                    }
                }
            }
            if !members.is_empty() {
                members.sort_unstable();
                attachments.insert(x, members);
            }
        }

        Ok(CycleStructure { cycle, attachments })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{generate, GraphSpec};

    fn path(n: usize) -> Graph {
        generate(GraphSpec::Path(n), 0).unwrap()
    }

    #[test]
    fn leaves_of_shapes() {
        assert_eq!(path(5).leaves().members(), &[0, 4]);
        let c4 = generate(GraphSpec::Cycle(4), 0).unwrap();
        assert!(c4.leaves().is_empty());
        let star = generate(GraphSpec::Star(5), 0).unwrap();
        assert_eq!(star.leaves().members(), &[1, 2, 3, 4]);
    }

    #[test]
    fn no_twins_on_p4() {
        assert!(path(4).twin_partition().classes.is_empty());
    }

    #[test]
    fn open_twins_in_complete_bipartite() {
        let g = generate(GraphSpec::CompleteBipartite(2, 3), 0).unwrap();
        let tp = g.twin_partition();
        assert_eq!(tp.classes.len(), 2);
        assert_eq!(tp.classes[0].kind, TwinKind::Open);
        assert_eq!(tp.classes[0].members, vec![0, 1]);
        assert_eq!(tp.classes[1].members, vec![2, 3, 4]);
        assert!(tp.uncovered_twin_pairs(&g).is_empty());
    }

    #[test]
    fn closed_twins_in_complete() {
        let g = generate(GraphSpec::Complete(4), 0).unwrap();
        let tp = g.twin_partition();
        assert_eq!(tp.classes.len(), 1);
        assert_eq!(tp.classes[0].kind, TwinKind::Closed);
        assert_eq!(tp.classes[0].members, vec![0, 1, 2, 3]);
        assert!(tp.uncovered_twin_pairs(&g).is_empty());
    }

    #[test]
    fn twin_classes_are_disjoint_by_kind() {
        // K4 minus an edge: one closed pair (the universal vertices) and one
        // open pair (the non-adjacent ones).
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let tp = g.twin_partition();
        assert_eq!(tp.classes.len(), 2);
        assert_eq!(tp.classes[0], TwinClass { kind: TwinKind::Closed, members: vec![0, 1] });
        assert_eq!(tp.classes[1], TwinClass { kind: TwinKind::Open, members: vec![2, 3] });
        assert!(tp.uncovered_twin_pairs(&g).is_empty());
    }

    #[test]
    fn paw_cycle_structure() {
        // Triangle 0-1-2 with a pendant 3 on vertex 0.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let cs = g.cycle_structure().unwrap();
        assert_eq!(cs.cycle, vec![0, 1, 2]);
        assert_eq!(cs.m(), 3);
        assert_eq!(cs.attachments.len(), 1);
        assert_eq!(cs.attachments[&0], vec![3]);
    }

    #[test]
    fn bare_cycle_has_no_attachments() {
        let g = generate(GraphSpec::Cycle(6), 0).unwrap();
        let cs = g.cycle_structure().unwrap();
        assert_eq!(cs.cycle, vec![0, 1, 2, 3, 4, 5]);
        assert!(cs.attachments.is_empty());
    }

    #[test]
    fn deeper_hanging_tree() {
        // C4 on 0..4 with a path 1-4-5 hanging off vertex 1.
        let g =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (4, 5)]).unwrap();
        let cs = g.cycle_structure().unwrap();
        assert_eq!(cs.cycle, vec![0, 1, 2, 3]);
        assert_eq!(cs.attachments[&1], vec![4, 5]);
    }

    #[test]
    fn cycle_structure_rejects_non_unicyclic() {
        assert_eq!(
            path(4).cycle_structure(),
            Err(Error::NotUnicyclic { vertices: 4, edges: 3 })
        );
        let disconnected = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
            .unwrap();
        assert_eq!(
            disconnected.cycle_structure(),
            Err(Error::Disconnected { u: 0, v: 3 })
        );
    }
}
