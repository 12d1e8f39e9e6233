//! Minimum-degree cores by worklist peeling.
//!
//! The `d`-core of `g[restrict]` is the unique largest subset whose induced
//! subgraph has minimum degree at least `d`. Every vertex outside it gets
//! peeled regardless of order, so any removal schedule returns the same set.
//! If `g[restrict]` has at least `d * |restrict|` edges the core is
//! nonempty: peeling an entire vertex set deletes fewer than `d` edges per
//! vertex.

use std::collections::VecDeque;

use crate::graph::{BipartiteGraph, Vertex, VertexSet};

/// Result of a peeling run together with its audit trail.
#[derive(Clone, Debug)]
pub struct PruneTrace {
    pub core: VertexSet,
    /// Removed vertices in removal order with their degree at that moment.
    pub removals: Vec<(Vertex, usize)>,
}

/// The `d`-core of `g[restrict]`; possibly empty.
pub fn prune_to_min_degree(g: &BipartiteGraph, restrict: &VertexSet, d: usize) -> VertexSet {
    prune_with_trace(g, restrict, d).core
}

pub fn prune_with_trace(g: &BipartiteGraph, restrict: &VertexSet, d: usize) -> PruneTrace {
    let mut alive = restrict.clone();
    let mut degree = vec![0usize; 2 * g.n()];
    let mut queue = VecDeque::new();
    let mut queued = VertexSet::new(g.n());

    for v in restrict.iter() {
        let k = g.neighbors(v).filter(|u| restrict.contains(*u)).count();
        degree[g.distance_slot(v)] = k;
        if k < d {
            queue.push_back(v);
            queued.insert(v);
        }
    }

    let mut removals = Vec::new();
    while let Some(v) = queue.pop_front() {
        alive.remove(v);
        removals.push((v, degree[g.distance_slot(v)]));
        for u in g.neighbors(v) {
            if !alive.contains(u) {
                continue;
            }
            let slot = g.distance_slot(u);
            degree[slot] -= 1;
            if degree[slot] < d && queued.insert(u) {
                queue.push_back(u);
            }
        }
    }
    PruneTrace {
        core: alive,
        removals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_survives() {
        let g = BipartiteGraph::complete(3).unwrap();
        let core = prune_to_min_degree(&g, &g.all_vertices(), 3);
        assert_eq!(core.len(), 6);
        assert!(prune_to_min_degree(&g, &g.all_vertices(), 4).is_empty());
    }

    #[test]
    fn path_cascades_to_empty() {
        let g = BipartiteGraph::from_edges(2, [(0, 0), (1, 0)]).unwrap();
        assert!(prune_to_min_degree(&g, &g.all_vertices(), 2).is_empty());
    }

    #[test]
    fn hexagon_with_pendant() {
        // C6 on L0..L2 / R0..R2 plus pendant edge L3-R0.
        let g =
            BipartiteGraph::from_edges(4, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0), (3, 0)])
                .unwrap();
        let mut restrict = VertexSet::new(4);
        for i in 0..3 {
            restrict.insert(Vertex::left(i));
            restrict.insert(Vertex::right(i));
        }
        restrict.insert(Vertex::left(3));
        let trace = prune_with_trace(&g, &restrict, 2);
        assert_eq!(
            trace.core,
            restrict.difference(&VertexSet::from_vertices(4, [Vertex::left(3)]))
        );
        assert_eq!(trace.removals, vec![(Vertex::left(3), 1)]);
    }

    #[test]
    fn restriction_is_respected() {
        let g = BipartiteGraph::complete(3).unwrap();
        let s = VertexSet::from_vertices(3, [Vertex::left(0), Vertex::right(0), Vertex::right(1)]);
        let core = prune_to_min_degree(&g, &s, 1);
        assert_eq!(core, s);
        assert!(prune_to_min_degree(&g, &s, 2).is_empty());
    }
}
