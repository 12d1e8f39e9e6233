use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BipartiteGraph, SubgraphView, Vertex};

/// A simple path given by its vertex sequence. Length counts edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord(pub Vec<Vertex>);

impl PathRecord {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn start(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn end(&self) -> Option<Vertex> {
        self.0.last().copied()
    }
}

/// A cycle given by its vertex sequence; the closing edge runs from the last
/// vertex back to the first. Length equals the number of vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord(pub Vec<Vertex>);

impl CycleRecord {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rotated(&self, k: usize) -> CycleRecord {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let k = k % v.len();
            v.rotate_left(k);
        }
        CycleRecord(v)
    }

    pub fn reflected(&self) -> CycleRecord {
        let mut v = self.0.clone();
        v.reverse();
        CycleRecord(v)
    }
}

impl fmt::Display for CycleRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The first invariant a path or cycle record violates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rejection {
    Empty,
    /// Cycles need at least four vertices.
    TooShort {
        len: usize,
    },
    OddLength {
        len: usize,
    },
    OutOfRange(Vertex),
    Repeated(Vertex),
    NotAlternating(Vertex, Vertex),
    MissingEdge(Vertex, Vertex),
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Empty => write!(f, "empty vertex sequence"),
            Rejection::TooShort { len } => write!(f, "cycle has {len} vertices, needs at least 4"),
            Rejection::OddLength { len } => write!(f, "cycle has odd length {len}"),
            Rejection::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            Rejection::Repeated(v) => write!(f, "vertex {v} repeated"),
            Rejection::NotAlternating(a, b) => write!(f, "{a} and {b} are on the same side"),
            Rejection::MissingEdge(a, b) => write!(f, "missing edge {a}-{b}"),
        }
    }
}

fn check_sequence(
    seq: &[Vertex],
    cyclic: bool,
    contains: impl Fn(Vertex) -> bool,
    has_edge: impl Fn(Vertex, Vertex) -> bool,
) -> Result<(), Rejection> {
    if let Some(&v) = seq.iter().find(|v| !contains(**v)) {
        return Err(Rejection::OutOfRange(v));
    }
    let mut seen = HashSet::with_capacity(seq.len());
    for &v in seq {
        if !seen.insert(v) {
            return Err(Rejection::Repeated(v));
        }
    }
    let closing = if cyclic && seq.len() > 1 {
        Some((seq[seq.len() - 1], seq[0]))
    } else {
        None
    };
    let pairs = seq.windows(2).map(|w| (w[0], w[1])).chain(closing);
    for (a, b) in pairs {
        if a.side == b.side {
            return Err(Rejection::NotAlternating(a, b));
        }
        if !has_edge(a, b) {
            return Err(Rejection::MissingEdge(a, b));
        }
    }
    Ok(())
}

/// Checks a path against a view: distinct members, alternating sides,
/// consecutive vertices adjacent.
pub fn validate_path(view: &SubgraphView<'_>, path: &PathRecord) -> Result<(), Rejection> {
    if path.0.is_empty() {
        return Err(Rejection::Empty);
    }
    check_sequence(
        &path.0,
        false,
        |v| view.contains(v),
        |a, b| view.has_edge(a, b),
    )
}

/// Checks a cycle against a graph. Returns the first violated invariant in
/// the order: size, parity, range, distinctness, alternation, edges.
pub fn validate_cycle(g: &BipartiteGraph, cycle: &CycleRecord) -> Result<(), Rejection> {
    let len = cycle.0.len();
    if len < 4 {
        return Err(Rejection::TooShort { len });
    }
    if len % 2 == 1 {
        return Err(Rejection::OddLength { len });
    }
    check_sequence(&cycle.0, true, |v| g.contains(v), |a, b| g.has_edge(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> CycleRecord {
        CycleRecord(vec![
            Vertex::left(0),
            Vertex::right(0),
            Vertex::left(1),
            Vertex::right(1),
        ])
    }

    #[test]
    fn c4_in_k22_accepted() {
        let g = BipartiteGraph::complete(2).unwrap();
        assert_eq!(validate_cycle(&g, &c4()), Ok(()));
    }

    #[test]
    fn short_and_odd_rejected() {
        let g = BipartiteGraph::complete(2).unwrap();
        let three = CycleRecord(c4().0[..3].to_vec());
        assert_eq!(
            validate_cycle(&g, &three),
            Err(Rejection::TooShort { len: 3 })
        );
        let g3 = BipartiteGraph::complete(3).unwrap();
        let five = CycleRecord(vec![
            Vertex::left(0),
            Vertex::right(0),
            Vertex::left(1),
            Vertex::right(1),
            Vertex::left(2),
        ]);
        assert_eq!(
            validate_cycle(&g3, &five),
            Err(Rejection::OddLength { len: 5 })
        );
    }

    #[test]
    fn missing_edge_rejected() {
        let g = BipartiteGraph::complete(2)
            .unwrap()
            .delete_edges([(1, 1)])
            .unwrap();
        assert_eq!(
            validate_cycle(&g, &c4()),
            Err(Rejection::MissingEdge(Vertex::left(1), Vertex::right(1)))
        );
    }

    #[test]
    fn repeats_and_same_side_rejected() {
        let g = BipartiteGraph::complete(3).unwrap();
        let rep = CycleRecord(vec![
            Vertex::left(0),
            Vertex::right(0),
            Vertex::left(0),
            Vertex::right(1),
        ]);
        assert_eq!(
            validate_cycle(&g, &rep),
            Err(Rejection::Repeated(Vertex::left(0)))
        );
        let same = CycleRecord(vec![
            Vertex::left(0),
            Vertex::left(1),
            Vertex::right(0),
            Vertex::right(1),
        ]);
        assert!(matches!(
            validate_cycle(&g, &same),
            Err(Rejection::NotAlternating(..))
        ));
        let out = CycleRecord(vec![
            Vertex::left(0),
            Vertex::right(0),
            Vertex::left(7),
            Vertex::right(1),
        ]);
        assert_eq!(
            validate_cycle(&g, &out),
            Err(Rejection::OutOfRange(Vertex::left(7)))
        );
    }

    #[test]
    fn path_validation() {
        let g = BipartiteGraph::from_edges(2, [(0, 0), (1, 0)]).unwrap();
        let p = PathRecord(vec![Vertex::left(0), Vertex::right(0), Vertex::left(1)]);
        assert_eq!(validate_path(&g.view(), &p), Ok(()));
        assert_eq!(p.len(), 2);
        let bad = PathRecord(vec![Vertex::left(0), Vertex::right(1)]);
        assert!(matches!(
            validate_path(&g.view(), &bad),
            Err(Rejection::MissingEdge(..))
        ));
        assert_eq!(
            validate_path(&g.view(), &PathRecord(vec![])),
            Err(Rejection::Empty)
        );
    }
}
