//! Exact minimum doubly resolving sets: theorem-backed bounds, a pruned
//! lexicographic search, and a definition-literal brute-force oracle.

use crate::constructive::{construct_diametral, construct_tree_basis, construct_unicyclic};
use crate::dist::DistanceMatrix;
use crate::error::Error;
use crate::graph::Graph;
use crate::resolve::verify_doubly_resolving;
use crate::set::VertexSet;
use crate::structure::TwinPartition;
use itertools::Itertools;
use serde::Serialize;

/// Default vertex cap for [`psi_exact`]; the search is exponential in k.
pub const DEFAULT_CAP: usize = 16;

/// Vertex cap for [`psi_brute_oracle`], which enumerates without pruning.
pub const ORACLE_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerBoundKind {
    /// Two vertices are always required.
    #[serde(rename = "trivial-2")]
    Trivial2,
    /// Every leaf belongs to every doubly resolving set.
    LeafCount,
    /// A doubly resolving set misses at most one vertex per twin class;
    /// leaves outside every class add one each.
    TwinClasses,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub value: usize,
    pub kind: LowerBoundKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UpperBoundKind {
    /// Any connected graph on n >= 3 vertices is doubly resolved by some
    /// n - 1 vertices.
    #[serde(rename = "n-1")]
    NMinus1,
    /// Removing the interior of a diametral shortest path leaves a doubly
    /// resolving set of size n - diam + 1.
    #[serde(rename = "n-d+1")]
    NMinusDiamPlus1,
    /// A verified constructed set (tree leaves, or leaves plus cycle
    /// vertices for unicyclic graphs) beat both formulas.
    #[serde(rename = "constructive")]
    Constructive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    pub value: usize,
    pub kind: UpperBoundKind,
}

/// Why the reported psi is optimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// The lower bound already matches psi.
    LowerBoundMet,
    /// Every admissible candidate of each size up to `up_to` was examined
    /// and failed. Restricting candidates to leaf-supersets meeting the
    /// twin-class quotas loses nothing: both restrictions are necessary
    /// conditions for any doubly resolving set.
    ExhaustedBelow { up_to: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Candidate sets handed to the verifier.
    pub candidates_examined: u64,
}

/// Outcome of an exact solve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub psi: usize,
    /// Lexicographically least minimum doubly resolving set.
    pub witness: VertexSet,
    pub lower_bound: LowerBound,
    pub upper_bound: UpperBound,
    pub certificate: Certificate,
    pub stats: SearchStats,
}

/// Vertices every doubly resolving set must contain: the leaves.
pub fn forced_vertices(g: &Graph) -> VertexSet {
    g.leaves()
}

/// Largest of: 2, the leaf count, and the twin-class demand
/// (sum of |class| - 1 over all classes, plus leaves outside every class).
pub fn lower_bound(g: &Graph, tp: &TwinPartition) -> LowerBound {
    let leaves = g.leaves();
    let l = leaves.len();
    let class_of = tp.class_of(g.n());
    let twin_sum: usize = tp.classes.iter().map(|c| c.members.len() - 1).sum();
    let leaves_outside = leaves.iter().filter(|&v| class_of[v].is_none()).count();
    let twin_term = twin_sum + leaves_outside;
    let value = 2.max(l).max(twin_term);
    let kind = if l == value && l >= 2 {
        LowerBoundKind::LeafCount
    } else if twin_term == value && twin_term >= 2 {
        LowerBoundKind::TwinClasses
    } else {
        LowerBoundKind::Trivial2
    };
    LowerBound { value, kind }
}

/// `min(n - 1, n - diam + 1)` with a verified witness set: the diametral
/// construction when diam >= 2, otherwise all but the last vertex of a
/// complete graph. Requires n >= 3.
pub fn upper_bound(g: &Graph, dm: &DistanceMatrix) -> Result<(UpperBound, VertexSet), Error> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooFewVertices { n, required: 3 });
    }
    let (bound, set) = if dm.diam() == 1 {
        let set = VertexSet::from_sorted((0..n - 1).collect(), n);
        (
            UpperBound {
                value: n - 1,
                kind: UpperBoundKind::NMinus1,
            },
            set,
        )
    } else {
        let set = construct_diametral(g, dm)?;
        (
            UpperBound {
                value: set.len(),
                kind: UpperBoundKind::NMinusDiamPlus1,
            },
            set,
        )
    };
    let verdict = verify_doubly_resolving(dm, &set)?;
    assert!(
        verdict.is_resolving(),
        "upper-bound witness failed verification: {verdict:?}"
    );
    Ok((bound, set))
}

/// Exact psi with the default cap. See [`psi_exact_capped`].
pub fn psi_exact(g: &Graph) -> Result<SolveResult, Error> {
    psi_exact_capped(g, DEFAULT_CAP)
}

/// Exact minimum doubly resolving set for a connected graph with
/// `2 <= n <= cap`.
///
/// Candidates of each size k (from the lower bound upward) are restricted to
/// supersets of the leaves that keep at least |class| - 1 members of every
/// twin class — both necessary conditions — and enumerated lexicographically,
/// so the first verified set is the lexicographically least witness at the
/// minimum size.
pub fn psi_exact_capped(g: &Graph, cap: usize) -> Result<SolveResult, Error> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { n, required: 2 });
    }
    if n > cap {
        return Err(Error::OverCap { n, cap });
    }
    let dm = g.distance_matrix()?;
    let tp = g.twin_partition();
    let forced = forced_vertices(g);
    let lower = lower_bound(g, &tp);

    let mut upper = if n == 2 {
        // The pair itself; the n - 1 form starts at n = 3.
        UpperBound {
            value: 2,
            kind: UpperBoundKind::NMinusDiamPlus1,
        }
    } else {
        upper_bound(g, &dm)?.0
    };
    // Constructed sets for trees and unicyclic graphs are often smaller than
    // either distance formula; on a tie they still make the better witness
    // (for trees the leaf set is the optimum itself).
    if g.edge_count() == n - 1 && n >= 2 {
        let basis = construct_tree_basis(g)?;
        if basis.len() <= upper.value {
            upper = UpperBound {
                value: basis.len(),
                kind: UpperBoundKind::Constructive,
            };
        }
    } else if n >= 4 && g.edge_count() == n && !g.is_cycle_graph() {
        let built = construct_unicyclic(g)?;
        if built.set.len() <= upper.value {
            upper = UpperBound {
                value: built.set.len(),
                kind: UpperBoundKind::Constructive,
            };
        }
    }
    debug_assert!(lower.value <= upper.value);

    let free: Vec<usize> = g.vertices().filter(|&v| !forced.contains(v)).collect();
    let class_of = tp.class_of(n);
    let mut examined = 0u64;

    for k in lower.value..=upper.value {
        if k < forced.len() || k > n {
            continue;
        }
        let mut found: Option<VertexSet> = None;
        let mut search = QuotaSearch::new(&tp, &forced, &free, &class_of);
        search.run(k - forced.len(), &mut |members| {
            examined += 1;
            let candidate = VertexSet::from_sorted(members.to_vec(), n);
            let ok = verify_doubly_resolving(&dm, &candidate)
                .expect("candidate sets have at least two members")
                .is_resolving();
            if ok {
                found = Some(candidate);
            }
            ok
        });
        if let Some(witness) = found {
            let certificate = if k == lower.value {
                Certificate::LowerBoundMet
            } else {
                Certificate::ExhaustedBelow { up_to: k - 1 }
            };
            return Ok(SolveResult {
                psi: k,
                witness,
                lower_bound: lower,
                upper_bound: upper,
                certificate,
                stats: SearchStats {
                    candidates_examined: examined,
                },
            });
        }
    }
    unreachable!("the verified upper-bound witness guarantees a hit by k = upper")
}

/// Lexicographic enumeration of k-subsets containing all forced vertices and
/// meeting the per-twin-class quotas, with quota-infeasible branches pruned
/// during generation.
struct QuotaSearch<'a> {
    forced: &'a [usize],
    free: &'a [usize],
    class_of: &'a [Option<usize>],
    /// Per class: members still required beyond forced/chosen ones.
    deficit: Vec<usize>,
    deficit_total: usize,
    /// Per class: members of the class remaining in `free[pos..]`.
    supply: Vec<usize>,
    chosen: Vec<usize>,
}

impl<'a> QuotaSearch<'a> {
    fn new(
        tp: &TwinPartition,
        forced: &'a VertexSet,
        free: &'a [usize],
        class_of: &'a [Option<usize>],
    ) -> Self {
        let mut deficit = Vec::with_capacity(tp.classes.len());
        for class in &tp.classes {
            let have = class.members.iter().filter(|&&v| forced.contains(v)).count();
            deficit.push((class.members.len() - 1).saturating_sub(have));
        }
        let mut supply = vec![0usize; tp.classes.len()];
        for &v in free {
            if let Some(c) = class_of[v] {
                supply[c] += 1;
            }
        }
        let deficit_total = deficit.iter().sum();
        debug_assert!(deficit.iter().zip(&supply).all(|(d, s)| d <= s));
        QuotaSearch {
            forced: forced.members(),
            free,
            class_of,
            deficit,
            deficit_total,
            supply,
            chosen: Vec::new(),
        }
    }

    /// Runs the enumeration; `visit` sees each candidate (forced plus chosen,
    /// merged ascending) and returns true to stop the search.
    fn run(&mut self, slots: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        self.step(0, slots, visit)
    }

    fn step(&mut self, pos: usize, slots: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if self.deficit_total > slots {
            return false;
        }
        if slots == 0 {
            let merged = merge_sorted(self.forced, &self.chosen);
            return visit(&merged);
        }
        if self.free.len() - pos < slots {
            return false;
        }
        let v = self.free[pos];
        let class = self.class_of[v];

        // Advancing past `v` removes it from the remaining supply either way.
        if let Some(c) = class {
            self.supply[c] -= 1;
        }

        // Include v (lexicographically first).
        self.chosen.push(v);
        let used_deficit = match class {
            Some(c) if self.deficit[c] > 0 => {
                self.deficit[c] -= 1;
                self.deficit_total -= 1;
                true
            }
            _ => false,
        };
        let feasible = class.is_none_or(|c| self.deficit[c] <= self.supply[c]);
        if feasible && self.step(pos + 1, slots - 1, visit) {
            return true;
        }
        if used_deficit {
            let c = class.expect("deficit implies a class");
            self.deficit[c] += 1;
            self.deficit_total += 1;
        }
        self.chosen.pop();

        // Exclude v, unless that starves its class.
        let feasible = class.is_none_or(|c| self.deficit[c] <= self.supply[c]);
        let hit = feasible && self.step(pos + 1, slots, visit);

        if let Some(c) = class {
            self.supply[c] += 1;
        }
        hit
    }
}

fn merge_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Reference solver: enumerate all subsets by increasing size and check the
/// definition with no shortcuts — every vertex pair must have some witness
/// pair inside the set. Independent of the fast verifier and of every bound;
/// capped at [`ORACLE_CAP`] vertices.
pub fn psi_brute_oracle(g: &Graph) -> Result<SolveResult, Error> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { n, required: 2 });
    }
    if n > ORACLE_CAP {
        return Err(Error::OverCap { n, cap: ORACLE_CAP });
    }
    let dm = g.distance_matrix()?;
    let mut examined = 0u64;
    for k in 2..=n {
        for combo in (0..n).combinations(k) {
            examined += 1;
            if literal_doubly_resolving(&dm, &combo) {
                let upper_bound = if n >= 3 {
                    UpperBound {
                        value: n - 1,
                        kind: UpperBoundKind::NMinus1,
                    }
                } else {
                    UpperBound {
                        value: 2,
                        kind: UpperBoundKind::NMinusDiamPlus1,
                    }
                };
                let certificate = if k == 2 {
                    Certificate::LowerBoundMet
                } else {
                    Certificate::ExhaustedBelow { up_to: k - 1 }
                };
                return Ok(SolveResult {
                    psi: k,
                    witness: VertexSet::from_sorted(combo, n),
                    lower_bound: LowerBound {
                        value: 2,
                        kind: LowerBoundKind::Trivial2,
                    },
                    upper_bound,
                    certificate,
                    stats: SearchStats {
                        candidates_examined: examined,
                    },
                });
            }
        }
    }
    unreachable!("the full vertex set doubly resolves every connected graph")
}

fn literal_doubly_resolving(dm: &DistanceMatrix, w: &[usize]) -> bool {
    let n = dm.n();
    for u in 0..n {
        for v in u + 1..n {
            let resolved = w.iter().enumerate().any(|(i, &x)| {
                w[i + 1..].iter().any(|&y| {
                    dm.get(v, x) as i64 - dm.get(u, x) as i64
                        != dm.get(v, y) as i64 - dm.get(u, y) as i64
                })
            });
            if !resolved {
                return false;
            }
        }
    }
    true
}
