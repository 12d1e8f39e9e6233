//! Immutable balanced bipartite graphs and the neighborhood vocabulary the
//! rest of the crate is written in: degrees, k-th neighborhoods, edge counts
//! between vertex sets, induced views, and path/cycle validators.
//!
//! A vertex is identified by its `(side, index)` pair in the parent graph.
//! Induced views never renumber vertices, so any set or path produced on a
//! view can be checked directly against the parent.

mod io;
mod records;
mod set;
mod view;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use io::{parse_edge_list, read_edge_list, to_edge_list_string, write_edge_list};
pub use records::{validate_cycle, validate_path, CycleRecord, PathRecord, Rejection};
pub use set::VertexSet;
pub use view::SubgraphView;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    fn offset(self, n: usize) -> usize {
        match self {
            Side::Left => 0,
            Side::Right => n,
        }
    }

    fn slot(self) -> usize {
        match self {
            Side::Left => 0,
            Side::Right => 1,
        }
    }
}

/// A vertex, ordered by `(side, index)` with Left before Right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub const fn left(index: usize) -> Self {
        Vertex {
            side: Side::Left,
            index,
        }
    }

    pub const fn right(index: usize) -> Self {
        Vertex {
            side: Side::Right,
            index,
        }
    }

    fn from_slot(n: usize, slot: usize) -> Self {
        if slot < n {
            Vertex::left(slot)
        } else {
            Vertex::right(slot - n)
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Left => write!(f, "L{}", self.index),
            Side::Right => write!(f, "R{}", self.index),
        }
    }
}

/// A bipartite graph with `n` vertices on each side.
///
/// Adjacency is kept twice: sorted neighbor lists for ordered iteration and
/// per-vertex bitsets over the opposite side for constant-time edge tests.
#[derive(Clone)]
pub struct BipartiteGraph {
    n: usize,
    adj: [Vec<Vec<usize>>; 2],
    bits: [Vec<FixedBitSet>; 2],
    m: usize,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for BipartiteGraph {}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BipartiteGraph")
            .field("n", &self.n)
            .field("m", &self.m)
            .finish()
    }
}

impl BipartiteGraph {
    /// Builds a graph from `(left, right)` index pairs. Duplicates and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(crate::error::invalid("n must be at least 1"));
        }
        let mut g = Self::empty_unchecked(n);
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: Vertex::left(u),
                    n,
                });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: Vertex::right(v),
                    n,
                });
            }
            if g.bits[0][u].put(v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            g.bits[1][v].insert(u);
            g.adj[0][u].push(v);
            g.adj[1][v].push(u);
            g.m += 1;
        }
        for lists in g.adj.iter_mut() {
            for list in lists.iter_mut() {
                list.sort_unstable();
            }
        }
        Ok(g)
    }

    fn empty_unchecked(n: usize) -> Self {
        BipartiteGraph {
            n,
            adj: [vec![Vec::new(); n], vec![Vec::new(); n]],
            bits: [
                vec![FixedBitSet::with_capacity(n); n],
                vec![FixedBitSet::with_capacity(n); n],
            ],
            m: 0,
        }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    /// `K_{n,n}`.
    pub fn complete(n: usize) -> Result<Self> {
        Self::from_edges(n, (0..n).flat_map(|u| (0..n).map(move |v| (u, v))))
    }

    /// Vertices per side.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.index < self.n
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Sorted neighbor indices of `v`; they live on the opposite side.
    ///
    /// Panics if `v` is out of range.
    pub fn neighbor_indices(&self, v: Vertex) -> &[usize] {
        &self.adj[v.side.slot()][v.index]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let side = v.side.opposite();
        self.neighbor_indices(v)
            .iter()
            .map(move |&index| Vertex { side, index })
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.neighbor_indices(v).len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .flat_map(|side| side.iter().map(Vec::len))
            .max()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        if a.side == b.side || !self.contains(a) || !self.contains(b) {
            return false;
        }
        self.bits[a.side.slot()][a.index].contains(b.index)
    }

    /// Edges as `(left, right)` pairs in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[0]
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        let n = self.n;
        (0..n).map(Vertex::left).chain((0..n).map(Vertex::right))
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N(v)` as a set.
    pub fn neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_vertices(self.n, self.neighbors(v)))
    }

    /// `N(X)`: every vertex adjacent to some member of `x` (members of `x`
    /// included when they have a neighbor in `x`).
    pub fn set_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in x.iter() {
            for u in self.neighbors(v) {
                out.insert(u);
            }
        }
        out
    }

    /// Vertices at graph distance exactly `k` from `v`.
    pub fn kth_neighborhood(&self, v: Vertex, k: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        if k == 0 {
            return Err(crate::error::invalid("k must be at least 1"));
        }
        let mut seen = VertexSet::new(self.n);
        seen.insert(v);
        let mut frontier = vec![v];
        for _ in 0..k {
            let mut next = Vec::new();
            for &x in &frontier {
                for u in self.neighbors(x) {
                    if seen.insert(u) {
                        next.push(u);
                    }
                }
            }
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        Ok(VertexSet::from_vertices(self.n, frontier))
    }

    /// BFS distances from `v`; `None` for unreachable vertices. Indexed by
    /// `(side, index)` via [`Self::distance_slot`].
    pub fn distances_from(&self, v: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; 2 * self.n];
        let mut queue = VecDeque::new();
        dist[self.distance_slot(v)] = Some(0);
        queue.push_back(v);
        while let Some(x) = queue.pop_front() {
            let d = dist[self.distance_slot(x)].unwrap_or(0);
            for u in self.neighbors(x) {
                let s = self.distance_slot(u);
                if dist[s].is_none() {
                    dist[s] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn distance_slot(&self, v: Vertex) -> usize {
        v.side.offset(self.n) + v.index
    }

    /// `e(X, Y)`: ordered pairs `(x, y)` with `x ∈ X`, `y ∈ Y` and `xy ∈ E`.
    /// An edge with both endpoints in `X ∩ Y` is counted twice.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> usize {
        x.iter()
            .map(|v| self.neighbors(v).filter(|u| y.contains(*u)).count())
            .sum()
    }

    /// Unordered edges with both endpoints in `s`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        s.iter_side(Side::Left)
            .map(|v| self.neighbors(v).filter(|u| s.contains(*u)).count())
            .sum()
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> SubgraphView<'_> {
        SubgraphView::new(self, s.clone())
    }

    /// The whole graph as a view.
    pub fn view(&self) -> SubgraphView<'_> {
        SubgraphView::new(self, self.all_vertices())
    }

    /// A new graph without the given `(left, right)` edges. Every listed
    /// pair must be an edge; repeats in `removal` are treated as one.
    pub fn delete_edges<I>(&self, removal: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let removal: BTreeSet<(usize, usize)> = removal.into_iter().collect();
        for &(u, v) in &removal {
            if u >= self.n || v >= self.n || !self.bits[0][u].contains(v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        Self::from_edges(self.n, self.edges().filter(|e| !removal.contains(e)))
    }

    /// Degree sequence, Left side first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj
            .iter()
            .flat_map(|side| side.iter().map(Vec::len))
            .collect()
    }
}
