//! Named graph families: recognition, closed-form psi values, and the
//! classifier for graphs whose psi is n - 1.

use crate::error::Error;
use crate::gen::GraphSpec;
use crate::graph::Graph;
use serde::Serialize;

/// A family a graph belongs to, with enough parameters to pin the instance
/// down (plus the leaf count where the closed form needs it).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilyDescriptor {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// Part sizes ordered `r <= s`.
    CompleteBipartite { r: usize, s: usize },
    /// `K_{1, n-1}`, reported for n >= 3.
    Star { n: usize },
    /// Two adjacent universal vertices plus `m` independent ones.
    JoinK2Empty { m: usize },
    Tree { n: usize, leaves: usize },
    /// `m` is the cycle length; `leaves` is 0 exactly for bare cycles.
    Unicyclic { n: usize, m: usize, leaves: usize },
}

impl FamilyDescriptor {
    /// Generator input reproducing this family member, for the rigid kinds.
    /// Trees and unicyclic graphs have no canonical instance, so `None`.
    pub fn generator_spec(&self) -> Option<GraphSpec> {
        match *self {
            FamilyDescriptor::Path { n } => Some(GraphSpec::Path(n)),
            FamilyDescriptor::Cycle { n } => Some(GraphSpec::Cycle(n)),
            FamilyDescriptor::Complete { n } => Some(GraphSpec::Complete(n)),
            FamilyDescriptor::CompleteBipartite { r, s } => {
                Some(GraphSpec::CompleteBipartite(r, s))
            }
            FamilyDescriptor::Star { n } => Some(GraphSpec::Star(n)),
            FamilyDescriptor::JoinK2Empty { m } => Some(GraphSpec::JoinK2Empty(m)),
            FamilyDescriptor::Tree { .. } | FamilyDescriptor::Unicyclic { .. } => None,
        }
    }
}

/// A closed-form psi: exact for most families, an interval for unicyclic
/// graphs with hanging trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum ClosedFormPsi {
    Exact { value: usize },
    Interval { lo: usize, hi: usize },
}

/// Every family the connected graph `g` belongs to, in a fixed kind order
/// (path, cycle, complete, complete bipartite, star, join, tree, unicyclic).
/// Overlaps are reported individually: C4 is a cycle, K_{2,2}, and unicyclic.
pub fn recognize(g: &Graph) -> Result<Vec<FamilyDescriptor>, Error> {
    if let Some(v) = g.first_unreachable() {
        return Err(Error::Disconnected { u: 0, v });
    }
    let n = g.n();
    let leaves = g.leaves().len();
    let mut out = Vec::new();

    let deg1 = g.vertices().filter(|&v| g.degree(v) == 1).count();
    let deg2 = g.vertices().filter(|&v| g.degree(v) == 2).count();
    if n >= 2 && deg1 == 2 && deg2 == n - 2 {
        out.push(FamilyDescriptor::Path { n });
    }
    if n >= 3 && deg2 == n {
        out.push(FamilyDescriptor::Cycle { n });
    }
    if g.vertices().all(|v| g.degree(v) == n - 1) {
        out.push(FamilyDescriptor::Complete { n });
    }
    if let Some((r, s)) = complete_bipartite_parts(g) {
        out.push(FamilyDescriptor::CompleteBipartite { r, s });
    }
    if is_star(g) {
        out.push(FamilyDescriptor::Star { n });
    }
    if let Some(m) = join_k2_empty_m(g) {
        out.push(FamilyDescriptor::JoinK2Empty { m });
    }
    if g.edge_count() == n - 1 {
        out.push(FamilyDescriptor::Tree { n, leaves });
    }
    if g.edge_count() == n {
        let cs = g.cycle_structure().expect("connected with |E| = n");
        out.push(FamilyDescriptor::Unicyclic { n, m: cs.m(), leaves });
    }
    Ok(out)
}

/// The proven psi for a family descriptor. Unicyclic descriptors with leaves
/// get the sandwich interval `[l, l+1]` (odd cycle) or `[l, l+2]` (even);
/// bare-cycle descriptors are directed to the cycle form instead.
pub fn closed_form_psi(fd: &FamilyDescriptor) -> Result<ClosedFormPsi, Error> {
    let exact = |value| Ok(ClosedFormPsi::Exact { value });
    match *fd {
        FamilyDescriptor::Path { n } => {
            if n < 2 {
                return Err(Error::TooFewVertices { n, required: 2 });
            }
            exact(2)
        }
        FamilyDescriptor::Cycle { n } => {
            if n < 3 {
                return Err(Error::TooFewVertices { n, required: 3 });
            }
            exact(if n % 2 == 1 { 2 } else { 3 })
        }
        FamilyDescriptor::Complete { n } => {
            if n < 2 {
                return Err(Error::TooFewVertices { n, required: 2 });
            }
            exact((n - 1).max(2))
        }
        FamilyDescriptor::CompleteBipartite { r, s } => {
            if r > s || r == 0 {
                return Err(Error::InvalidParameter(
                    "complete bipartite parts need 1 <= r <= s".into(),
                ));
            }
            let n = r + s;
            if n < 3 {
                // K_{1,1} is P2; the bipartite formula starts at order 3.
                return Err(Error::TooFewVertices { n, required: 3 });
            }
            exact(if r <= 2 { n - 1 } else { n - 2 })
        }
        FamilyDescriptor::Star { n } => {
            if n < 3 {
                return Err(Error::TooFewVertices { n, required: 3 });
            }
            exact(n - 1)
        }
        FamilyDescriptor::JoinK2Empty { m } => {
            if m == 0 {
                return Err(Error::InvalidParameter("join needs m >= 1".into()));
            }
            exact(m + 1)
        }
        FamilyDescriptor::Tree { n, leaves } => {
            if n < 2 {
                return Err(Error::TooFewVertices { n, required: 2 });
            }
            exact(leaves)
        }
        FamilyDescriptor::Unicyclic { n: _, m, leaves } => {
            if leaves == 0 {
                return Err(Error::NoClosedForm(
                    "bare cycle: use the cycle descriptor".into(),
                ));
            }
            Ok(ClosedFormPsi::Interval {
                lo: leaves,
                hi: leaves + if m % 2 == 1 { 1 } else { 2 },
            })
        }
    }
}

/// Decides `psi(G) = n - 1` for connected graphs on n >= 3 vertices: true
/// exactly for complete graphs, stars, complete bipartite graphs with a side
/// of two, and joins of an edge with an independent set. Returns the matched
/// family, with ties broken in that order (C4 reports as K_{2,2}).
pub fn classify_n_minus_1(g: &Graph) -> Result<Option<FamilyDescriptor>, Error> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooFewVertices { n, required: 3 });
    }
    if let Some(v) = g.first_unreachable() {
        return Err(Error::Disconnected { u: 0, v });
    }
    if g.vertices().all(|v| g.degree(v) == n - 1) {
        return Ok(Some(FamilyDescriptor::Complete { n }));
    }
    if is_star(g) {
        return Ok(Some(FamilyDescriptor::Star { n }));
    }
    if let Some((2, s)) = complete_bipartite_parts(g) {
        return Ok(Some(FamilyDescriptor::CompleteBipartite { r: 2, s }));
    }
    if let Some(m) = join_k2_empty_m(g) {
        return Ok(Some(FamilyDescriptor::JoinK2Empty { m }));
    }
    Ok(None)
}

/// Part sizes `(r, s)` with `r <= s` when `g` is connected complete
/// bipartite with both parts non-empty.
fn complete_bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    let mut color = vec![2u8; n];
    color[0] = 0;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if color[v] == 2 {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if color[v] == color[u] {
                return None;
            }
        }
    }
    let r = color.iter().filter(|&&c| c == 0).count();
    let s = n - r;
    if r == 0 || s == 0 {
        return None;
    }
    // Connected and bipartite: complete iff every cross pair is an edge.
    (g.edge_count() == r * s).then_some((r.min(s), r.max(s)))
}

fn is_star(g: &Graph) -> bool {
    let n = g.n();
    n >= 3
        && g.vertices().filter(|&v| g.degree(v) == n - 1).count() == 1
        && g.vertices().filter(|&v| g.degree(v) == 1).count() == n - 1
}

/// `m` when `g` is two adjacent universal vertices joined to `m >= 1`
/// independent vertices.
fn join_k2_empty_m(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    let universal: Vec<usize> =
        g.vertices().filter(|&v| g.degree(v) == n - 1).collect();
    match universal.len() {
        2 => {
            let rest_independent = g
                .vertices()
                .filter(|v| !universal.contains(v))
                .all(|v| g.neighbors(v).iter().all(|w| universal.contains(w)));
            rest_independent.then_some(n - 2)
        }
        // All of K3 is universal; removing any edge's endpoints leaves one
        // independent vertex.
        3 if n == 3 => Some(1),
        _ => None,
    }
}
