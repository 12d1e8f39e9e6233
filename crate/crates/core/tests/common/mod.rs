#![allow(dead_code)]

use bipcycles::{BipartiteGraph, Vertex, VertexSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random bipartite graph with `lo..=hi` vertices per side.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = BipartiteGraph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let edges = (0..n * n).filter(|&i| bits[i]).map(|i| (i / n, i % n));
            BipartiteGraph::from_edges(n, edges).unwrap()
        })
    })
}

/// Graph together with a subset of its vertices.
pub fn arb_graph_and_set(
    lo: usize,
    hi: usize,
) -> impl Strategy<Value = (BipartiteGraph, VertexSet)> {
    arb_graph(lo, hi).prop_flat_map(|g| {
        let n = g.n();
        proptest::collection::vec(any::<bool>(), 2 * n).prop_map(move |bits| {
            let set = VertexSet::from_vertices(
                n,
                g.vertices()
                    .zip(bits.iter())
                    .filter(|(_, b)| **b)
                    .map(|(v, _)| v),
            );
            (g.clone(), set)
        })
    })
}

/// Random bipartite graph with edge probability `p`, seeded.
pub fn random_graph(n: usize, p: f64, seed: u64) -> BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    BipartiteGraph::from_edges(n, edges).unwrap()
}

/// Longest path (in edges) starting at `v`, by exhaustive search.
pub fn longest_path_from(g: &BipartiteGraph, v: Vertex) -> usize {
    fn go(g: &BipartiteGraph, path: &mut Vec<Vertex>, best: &mut usize) {
        *best = (*best).max(path.len() - 1);
        let end = *path.last().unwrap();
        let next: Vec<Vertex> = g.neighbors(end).collect();
        for u in next {
            if !path.contains(&u) {
                path.push(u);
                go(g, path, best);
                path.pop();
            }
        }
    }
    let mut best = 0;
    go(g, &mut vec![v], &mut best);
    best
}

/// Largest `t` such that every nonempty `X` with `|X| <= t` has
/// `|N(X) \ X| >= 2|X| - slack`, by enumerating all subsets.
pub fn expansion_radius(g: &BipartiteGraph, slack: usize) -> usize {
    let vs: Vec<Vertex> = g.vertices().collect();
    let k = vs.len();
    let mut ok = vec![true; k + 1];
    for mask in 1u64..(1 << k) {
        let x =
            VertexSet::from_vertices(g.n(), (0..k).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]));
        let outside = g.set_neighborhood(&x).difference(&x).len();
        if outside + slack < 2 * x.len() {
            ok[x.len()] = false;
        }
    }
    (1..=k).take_while(|&s| ok[s]).count()
}

/// One acceptance verdict.
pub struct Verdict {
    pub id: u32,
    pub pass: bool,
    pub line: String,
}

pub fn report(id: u32, name: &str, pass: bool, detail: &str) -> Verdict {
    let tag = if pass { "PASS" } else { "FAIL" };
    Verdict {
        id,
        pass,
        line: format!("[{tag}] criterion {id}: {name}: {detail}"),
    }
}
