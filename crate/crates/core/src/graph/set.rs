use std::fmt;

use fixedbitset::FixedBitSet;

use super::{Side, Vertex};

/// A subset of the `2n` vertices of a bipartite graph.
///
/// Slots `0..n` hold the Left side and `n..2n` the Right side, so iteration
/// yields vertices in ascending `(side, index)` order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            bits: FixedBitSet::with_capacity(2 * n),
        }
    }

    /// Every vertex of both sides.
    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(2 * n);
        bits.insert_range(..);
        VertexSet { n, bits }
    }

    /// Every vertex of one side.
    pub fn whole_side(n: usize, side: Side) -> Self {
        let mut s = Self::new(n);
        let off = side.offset(n);
        s.bits.insert_range(off..off + n);
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(n: usize, it: I) -> Self {
        let mut s = Self::new(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    /// Side size of the owning graph.
    pub fn universe(&self) -> usize {
        self.n
    }

    fn slot(&self, v: Vertex) -> usize {
        assert!(
            v.index < self.n,
            "vertex {v} outside universe of {} per side",
            self.n
        );
        v.side.offset(self.n) + v.index
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        let i = self.slot(v);
        !self.bits.put(i)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let i = self.slot(v);
        let was = self.bits.contains(i);
        self.bits.set(i, false);
        was
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.index < self.n && self.bits.contains(v.side.offset(self.n) + v.index)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Number of members on one side.
    pub fn side_len(&self, side: Side) -> usize {
        let off = side.offset(self.n);
        self.bits.count_ones(off..off + self.n)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        let n = self.n;
        self.bits.ones().map(move |i| Vertex::from_slot(n, i))
    }

    /// Members of one side, ascending by index.
    pub fn iter_side(&self, side: Side) -> impl Iterator<Item = Vertex> + '_ {
        self.iter().filter(move |v| v.side == side)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        self.bits.difference_with(&other.bits);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
