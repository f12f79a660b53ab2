use std::fmt;

use serde::{Serialize, Serializer};

/// Stable identifier of an edge: its 0-based position in the edge order.
///
/// The activity order is the identifier order. Displayed 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl EdgeId {
    /// 1-based index as used in files and on the command line.
    pub fn ordinal(self) -> usize {
        self.0 + 1
    }

    pub fn from_ordinal(ordinal: usize) -> Option<Self> {
        ordinal.checked_sub(1).map(EdgeId)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.ordinal())
    }
}

impl Serialize for EdgeId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(self.ordinal() as u64)
    }
}

/// Maximum number of edges a graph may carry.
pub const MAX_EDGES: usize = 64;

/// A set of edges stored as a bitmask over edge identifiers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct EdgeSet(u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_bits(bits: u64) -> Self {
        EdgeSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The first `m` edges.
    pub fn prefix(m: usize) -> Self {
        debug_assert!(m <= MAX_EDGES);
        if m == MAX_EDGES {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << m) - 1)
        }
    }

    pub fn single(e: EdgeId) -> Self {
        EdgeSet(1u64 << e.0)
    }

    pub fn contains(self, e: EdgeId) -> bool {
        e.0 < MAX_EDGES && self.0 >> e.0 & 1 == 1
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.0 |= 1u64 << e.0;
    }

    pub fn remove(&mut self, e: EdgeId) {
        self.0 &= !(1u64 << e.0);
    }

    pub fn with(mut self, e: EdgeId) -> Self {
        self.insert(e);
        self
    }

    pub fn without(mut self, e: EdgeId) -> Self {
        self.remove(e);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        EdgeSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        EdgeSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        EdgeSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<EdgeId> {
        (self.0 != 0).then(|| EdgeId(self.0.trailing_zeros() as usize))
    }

    pub fn max(self) -> Option<EdgeId> {
        (self.0 != 0).then(|| EdgeId(63 - self.0.leading_zeros() as usize))
    }

    /// Edges in increasing order.
    pub fn iter(self) -> EdgeSetIter {
        EdgeSetIter(self.0)
    }

    /// All subsets of `self`, each exactly once, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = EdgeSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let current = next?;
            next = if current == full {
                None
            } else {
                Some((current.wrapping_sub(full)) & full)
            };
            Some(EdgeSet(current))
        })
    }

    pub fn to_vec(self) -> Vec<EdgeId> {
        self.iter().collect()
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut set = EdgeSet::EMPTY;
        for e in iter {
            set.insert(e);
        }
        set
    }
}

impl IntoIterator for EdgeSet {
    type Item = EdgeId;
    type IntoIter = EdgeSetIter;

    fn into_iter(self) -> EdgeSetIter {
        self.iter()
    }
}

pub struct EdgeSetIter(u64);

impl Iterator for EdgeSetIter {
    type Item = EdgeId;

    fn next(&mut self) -> Option<EdgeId> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(EdgeId(i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for EdgeSetIter {}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|e| e.ordinal()))
            .finish()
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|e| e.ordinal()))
    }
}
