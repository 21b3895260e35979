//! Doubly-resolving verification, metric representations, and the plain
//! resolving-set check.

use crate::dist::DistanceMatrix;
use crate::error::Error;
use crate::set::VertexSet;
use serde::Serialize;
use std::collections::HashSet;

/// Whether witnesses `x, y` doubly resolve the pair `(u, v)`:
/// `d(v, x) - d(u, x) != d(v, y) - d(u, y)`.
pub fn doubly_resolves(
    dm: &DistanceMatrix,
    u: usize,
    v: usize,
    x: usize,
    y: usize,
) -> Result<bool, Error> {
    let n = dm.n();
    for idx in [u, v, x, y] {
        if idx >= n {
            return Err(Error::VertexOutOfRange { index: idx, n });
        }
    }
    Ok(dm.diff(v, u, x) != dm.diff(v, u, y))
}

/// A vertex pair a candidate set fails to doubly resolve: the difference
/// `d(u, w) - d(v, w)` equals `constant` for every `w` in the set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FailureWitness {
    pub u: usize,
    pub v: usize,
    pub constant: i64,
}

/// Outcome of a doubly-resolving check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Resolving,
    Failed(FailureWitness),
}

impl Verdict {
    pub fn is_resolving(&self) -> bool {
        matches!(self, Verdict::Resolving)
    }

    pub fn witness(&self) -> Option<FailureWitness> {
        match self {
            Verdict::Resolving => None,
            Verdict::Failed(w) => Some(*w),
        }
    }
}

/// Checks whether `w` doubly resolves the graph behind `dm`.
///
/// Pairs with both endpoints inside `w` are skipped: with `x = u` and `y = v`
/// the differences are `d(u, v)` and `-d(u, v)`, which differ for distinct
/// vertices, so such pairs always resolve. Every other pair is checked via
/// the difference function `t -> d(u, t) - d(v, t)`, which must be
/// non-constant over `w`. On failure the lexicographically least failing
/// pair is reported with its constant.
///
/// Sets of fewer than two vertices are an error, not a `false`.
pub fn verify_doubly_resolving(dm: &DistanceMatrix, w: &VertexSet) -> Result<Verdict, Error> {
    if w.len() < 2 {
        return Err(Error::SetTooSmall { size: w.len() });
    }
    if w.context_n() != dm.n() {
        return Err(Error::ContextMismatch {
            set_n: w.context_n(),
            matrix_n: dm.n(),
        });
    }
    let n = dm.n();
    let mut in_w = vec![false; n];
    for x in w.iter() {
        in_w[x] = true;
    }
    let members = w.members();
    let w0 = members[0];
    for u in 0..n {
        for v in u + 1..n {
            if in_w[u] && in_w[v] {
                continue;
            }
            let c = dm.diff(u, v, w0);
            if members[1..].iter().all(|&x| dm.diff(u, v, x) == c) {
                return Ok(Verdict::Failed(FailureWitness { u, v, constant: c }));
            }
        }
    }
    Ok(Verdict::Resolving)
}

/// Convenience wrapper returning only the boolean verdict.
pub fn is_doubly_resolving_set(dm: &DistanceMatrix, w: &VertexSet) -> Result<bool, Error> {
    Ok(verify_doubly_resolving(dm, w)?.is_resolving())
}

/// Distances from one vertex to each member of an ordered set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MetricRepresentation {
    coords: Vec<u32>,
}

impl MetricRepresentation {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }
}

/// The distance vector of `v` with respect to `w`, in `w`'s member order.
pub fn metric_representation(
    dm: &DistanceMatrix,
    v: usize,
    w: &VertexSet,
) -> Result<MetricRepresentation, Error> {
    if v >= dm.n() {
        return Err(Error::VertexOutOfRange { index: v, n: dm.n() });
    }
    if w.context_n() != dm.n() {
        return Err(Error::ContextMismatch {
            set_n: w.context_n(),
            matrix_n: dm.n(),
        });
    }
    Ok(MetricRepresentation {
        coords: w.iter().map(|x| dm.get(v, x)).collect(),
    })
}

/// Whether `w` is a (singly) resolving set: all metric representations are
/// pairwise distinct.
pub fn is_resolving_set(dm: &DistanceMatrix, w: &VertexSet) -> Result<bool, Error> {
    if w.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut seen = HashSet::with_capacity(dm.n());
    for v in 0..dm.n() {
        if !seen.insert(metric_representation(dm, v, w)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{generate, GraphSpec};
    use crate::graph::Graph;

    fn dm_of(spec: GraphSpec) -> DistanceMatrix {
        generate(spec, 0).unwrap().distance_matrix().unwrap()
    }

    fn vset(members: &[usize], n: usize) -> VertexSet {
        VertexSet::new(members.iter().copied(), n).unwrap()
    }

    #[test]
    fn witness_pair_examples() {
        // On C4, opposite witnesses cannot separate the other opposite pair.
        let c4 = dm_of(GraphSpec::Cycle(4));
        assert!(!doubly_resolves(&c4, 1, 3, 0, 2).unwrap());
        // On P5 the two ends separate adjacent inner vertices.
        let p5 = dm_of(GraphSpec::Path(5));
        assert!(doubly_resolves(&p5, 1, 2, 0, 4).unwrap());
        // A pair always doubly resolves itself.
        assert!(doubly_resolves(&p5, 1, 3, 1, 3).unwrap());
        assert!(doubly_resolves(&c4, 0, 5, 1, 2).is_err());
    }

    #[test]
    fn c4_antipodal_pair_fails_with_least_witness() {
        let c4 = dm_of(GraphSpec::Cycle(4));
        let verdict = verify_doubly_resolving(&c4, &vset(&[0, 2], 4)).unwrap();
        assert_eq!(
            verdict.witness(),
            Some(FailureWitness { u: 1, v: 3, constant: 0 })
        );
    }

    #[test]
    fn no_c4_pair_works_but_triples_do() {
        let c4 = dm_of(GraphSpec::Cycle(4));
        for u in 0..4 {
            for v in u + 1..4 {
                let verdict = verify_doubly_resolving(&c4, &vset(&[u, v], 4)).unwrap();
                assert!(!verdict.is_resolving(), "pair {{{u}, {v}}}");
            }
        }
        assert!(verify_doubly_resolving(&c4, &vset(&[0, 1, 2], 4))
            .unwrap()
            .is_resolving());
    }

    #[test]
    fn p5_prefix_pair_fails_on_inner_pair() {
        let p5 = dm_of(GraphSpec::Path(5));
        let verdict = verify_doubly_resolving(&p5, &vset(&[0, 1], 5)).unwrap();
        // d(1, w) - d(2, w) = -1 for w in {0, 1}.
        assert_eq!(
            verdict.witness(),
            Some(FailureWitness { u: 1, v: 2, constant: -1 })
        );
    }

    #[test]
    fn path_endpoints_resolve() {
        let p5 = dm_of(GraphSpec::Path(5));
        assert!(verify_doubly_resolving(&p5, &vset(&[0, 4], 5))
            .unwrap()
            .is_resolving());
    }

    #[test]
    fn omitted_leaf_forces_failure() {
        // P3 with the leaf 2 outside the set: (1, 2) stays unresolved with
        // constant difference -1 (the leaf is one step beyond its support).
        let p3 = dm_of(GraphSpec::Path(3));
        let verdict = verify_doubly_resolving(&p3, &vset(&[0, 1], 3)).unwrap();
        assert_eq!(
            verdict.witness(),
            Some(FailureWitness { u: 1, v: 2, constant: -1 })
        );
    }

    #[test]
    fn whole_vertex_set_always_resolves() {
        for spec in [GraphSpec::Path(2), GraphSpec::Cycle(5), GraphSpec::Complete(4)] {
            let dm = dm_of(spec);
            let n = dm.n();
            let all = vset(&(0..n).collect::<Vec<_>>(), n);
            assert!(verify_doubly_resolving(&dm, &all).unwrap().is_resolving());
        }
    }

    #[test]
    fn small_sets_are_errors() {
        let p3 = dm_of(GraphSpec::Path(3));
        assert_eq!(
            verify_doubly_resolving(&p3, &vset(&[0], 3)),
            Err(Error::SetTooSmall { size: 1 })
        );
        let wrong_n = vset(&[0, 1], 7);
        assert!(matches!(
            verify_doubly_resolving(&p3, &wrong_n),
            Err(Error::ContextMismatch { .. })
        ));
    }

    #[test]
    fn representations_and_resolving() {
        // Any 3 vertices of K4 resolve it: the outsider reads (1,1,1).
        let k4 = dm_of(GraphSpec::Complete(4));
        let w = vset(&[0, 1, 2], 4);
        assert!(is_resolving_set(&k4, &w).unwrap());
        let rep = metric_representation(&k4, 3, &w).unwrap();
        assert_eq!(rep.coords(), &[1, 1, 1]);
        let rep0 = metric_representation(&k4, 0, &w).unwrap();
        assert_eq!(rep0.coords(), &[0, 1, 1]);

        // A single endpoint resolves a path, but one center never resolves a star.
        let p4 = dm_of(GraphSpec::Path(4));
        assert!(is_resolving_set(&p4, &vset(&[0], 4)).unwrap());
        let star = dm_of(GraphSpec::Star(4));
        assert!(!is_resolving_set(&star, &vset(&[0], 4)).unwrap());
    }

    #[test]
    fn doubly_resolving_implies_resolving() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        let dm = g.distance_matrix().unwrap();
        for u in 0..5 {
            for v in u + 1..5 {
                let w = vset(&[u, v], 5);
                if verify_doubly_resolving(&dm, &w).unwrap().is_resolving() {
                    assert!(is_resolving_set(&dm, &w).unwrap());
                }
            }
        }
    }
}
