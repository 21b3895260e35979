//! Doubly resolving sets in connected graphs.
//!
//! A set `W` of vertices *doubly resolves* a connected graph when every vertex
//! pair `(u, v)` has two witnesses `x, y` in `W` with
//! `d(v, x) - d(u, x) != d(v, y) - d(u, y)`; equivalently, the difference
//! function `w -> d(u, w) - d(v, w)` is non-constant over `W`. The minimum
//! cardinality of such a set is written `psi(G)` and is always at least 2.
//!
//! The crate provides:
//!
//! * [`Graph`]: a simple undirected graph on dense indices `0..n`, with
//!   edge-list / JSON parsing and serialization, deterministic generators
//!   ([`generate`]), BFS all-pairs distances ([`Graph::distance_matrix`]), and
//!   structural queries (leaves, twin classes, the cycle of a unicyclic graph).
//! * [`resolve`]: the doubly-resolving verifier with failure witnesses, metric
//!   representations, and the plain resolving-set check.
//! * [`solver`]: theorem-backed lower/upper bounds and the exact solver
//!   [`psi_exact`], plus the definition-literal [`psi_brute_oracle`].
//! * [`families`]: recognition of named families (paths, cycles, complete,
//!   complete bipartite, stars, K2-join-independent, trees, unicyclic), their
//!   closed-form psi values, and the classifier for `psi(G) = n - 1`.
//! * [`constructive`]: explicit doubly resolving sets — diametral-path
//!   complements, tree leaf sets, and leaf-plus-cycle sets for unicyclic
//!   graphs.

pub mod constructive;
mod dist;
pub mod error;
pub mod families;
mod gen;
mod graph;
mod io;
pub mod resolve;
mod set;
pub mod solver;
mod structure;

pub use dist::DistanceMatrix;
pub use error::Error;
pub use gen::{generate, GraphSpec};
pub use graph::Graph;
pub use resolve::{
    doubly_resolves, is_resolving_set, metric_representation, verify_doubly_resolving,
    FailureWitness, MetricRepresentation, Verdict,
};
pub use set::VertexSet;
pub use solver::{psi_brute_oracle, psi_exact, psi_exact_capped, SolveResult};
pub use structure::{CycleStructure, TwinClass, TwinKind, TwinPartition};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
