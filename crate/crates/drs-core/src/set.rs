//! Canonical vertex sets: sorted, duplicate-free, bound to a graph order.

use crate::error::Error;
use serde::Serialize;

/// A set of vertex indices in ascending order, tied to a graph on `n` vertices.
///
/// Serializes as a plain JSON array of indices. `Ord` compares the sorted
/// member sequences lexicographically, which is the tie-break order used by
/// the solver and the constructive searches.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<usize>,
    #[serde(skip)]
    n: usize,
}

impl VertexSet {
    /// Builds a set from arbitrary order, rejecting duplicates and
    /// out-of-range indices.
    pub fn new(members: impl IntoIterator<Item = usize>, n: usize) -> Result<Self, Error> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        for pair in members.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVertex { vertex: pair[0] });
            }
        }
        if let Some(&last) = members.last() {
            if last >= n {
                return Err(Error::VertexOutOfRange { index: last, n });
            }
        }
        Ok(VertexSet { members, n })
    }

    /// Builds a set from members already known to be sorted, unique, in range.
    pub(crate) fn from_sorted(members: Vec<usize>, n: usize) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.last().is_none_or(|&v| v < n));
        VertexSet { members, n }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Order of the graph this set belongs to.
    pub fn context_n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    /// Union with another set over the same context.
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, other.n);
        let mut members: Vec<usize> = self
            .members
            .iter()
            .chain(other.members.iter())
            .copied()
            .collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members, n: self.n }
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
