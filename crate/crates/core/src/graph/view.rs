use super::{BipartiteGraph, Side, Vertex, VertexSet};

/// The subgraph induced by a vertex set, borrowed from its parent.
///
/// Vertices keep their parent identities; only edges with both endpoints in
/// the member set are visible.
#[derive(Clone, Debug)]
pub struct SubgraphView<'g> {
    graph: &'g BipartiteGraph,
    members: VertexSet,
}

impl<'g> SubgraphView<'g> {
    pub fn new(graph: &'g BipartiteGraph, members: VertexSet) -> Self {
        assert_eq!(
            graph.n(),
            members.universe(),
            "vertex set universe mismatch"
        );
        SubgraphView { graph, members }
    }

    pub fn parent(&self) -> &'g BipartiteGraph {
        self.graph
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.contains(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.members.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter()
    }

    /// Neighbors inside the view, ascending. Empty for non-members.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let inside = self.contains(v);
        self.graph
            .neighbors(v)
            .filter(move |u| inside && self.members.contains(*u))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).count()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.contains(a) && self.contains(b) && self.graph.has_edge(a, b)
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edges_within(&self.members)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    /// `N(X) \ X` computed inside the view. Members of `x` outside the view
    /// contribute nothing.
    pub fn external_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in x.iter() {
            for u in self.neighbors(v) {
                if !x.contains(u) {
                    out.insert(u);
                }
            }
        }
        out
    }

    /// Members on one side, ascending.
    pub fn side(&self, side: Side) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter_side(side)
    }

    /// Materializes the view as a standalone graph on the same index space.
    pub fn to_graph(&self) -> BipartiteGraph {
        let edges: Vec<_> = self
            .side(Side::Left)
            .flat_map(|v| self.neighbors(v).map(move |u| (v.index, u.index)))
            .collect();
        BipartiteGraph::from_edges(self.n(), edges).expect("view edges are valid")
    }
}
