use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::BipartiteGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AdversaryKind {
    /// Deletes a uniformly random set of edges.
    RandomDelete,
    /// Repeatedly deletes every edge at a current maximum-degree vertex.
    StarKill,
    /// Repeatedly deletes a random edge of some 4-cycle.
    ShortCycleBreaker,
}

impl fmt::Display for AdversaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdversaryKind::RandomDelete => "RandomDelete",
            AdversaryKind::StarKill => "StarKill",
            AdversaryKind::ShortCycleBreaker => "ShortCycleBreaker",
        })
    }
}

impl FromStr for AdversaryKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "randomdelete" | "random" => Ok(AdversaryKind::RandomDelete),
            "starkill" | "star" => Ok(AdversaryKind::StarKill),
            "shortcyclebreaker" | "c4" => Ok(AdversaryKind::ShortCycleBreaker),
            _ => Err(invalid(format!("unknown strategy {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdversaryStrategy {
    pub kind: AdversaryKind,
    /// Number of edges to delete.
    pub budget: usize,
}

/// Mutable copy of a graph's adjacency for the deletion loops.
struct Working {
    left: Vec<BTreeSet<usize>>,
    right: Vec<BTreeSet<usize>>,
    m: usize,
}

impl Working {
    fn new(g: &BipartiteGraph) -> Self {
        let n = g.n();
        let mut left = vec![BTreeSet::new(); n];
        let mut right = vec![BTreeSet::new(); n];
        for (u, v) in g.edges() {
            left[u].insert(v);
            right[v].insert(u);
        }
        Working {
            left,
            right,
            m: g.edge_count(),
        }
    }

    fn remove(&mut self, u: usize, v: usize) {
        if self.left[u].remove(&v) {
            self.right[v].remove(&u);
            self.m -= 1;
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.left
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
            .collect()
    }

    fn finish(self, n: usize) -> BipartiteGraph {
        BipartiteGraph::from_edges(n, self.edges()).expect("subset of a valid edge set")
    }

    fn random_delete(&mut self, budget: usize, rng: &mut ChaCha8Rng) {
        let edges = self.edges();
        for i in sample(rng, edges.len(), budget.min(edges.len())) {
            let (u, v) = edges[i];
            self.remove(u, v);
        }
    }

    /// A 4-cycle through Left `u` as `(u, r1, w, r2)`.
    fn four_cycle_at(
        &self,
        u: usize,
        via: &mut [Option<usize>],
    ) -> Option<(usize, usize, usize, usize)> {
        let mut touched = Vec::new();
        let mut found = None;
        'outer: for &r in &self.left[u] {
            for &w in &self.right[r] {
                if w == u {
                    continue;
                }
                match via[w] {
                    Some(r1) => {
                        found = Some((u, r1, w, r));
                        break 'outer;
                    }
                    None => {
                        via[w] = Some(r);
                        touched.push(w);
                    }
                }
            }
        }
        for w in touched {
            via[w] = None;
        }
        found
    }
}

/// Deletes `strategy.budget` edges from `g`. Deterministic given `seed`.
///
/// `StarKill` picks the maximum-degree vertex (lowest `(side, index)` on
/// ties) and deletes its edges in ascending order, possibly stopping part
/// way through the last star. `ShortCycleBreaker` scans Left vertices in a
/// seed-chosen cyclic order for 4-cycles and deletes a random edge of each
/// one found; once none remain it continues as `RandomDelete`.
pub fn adversary_delete(
    g: &BipartiteGraph,
    strategy: &AdversaryStrategy,
    seed: u64,
) -> Result<BipartiteGraph> {
    let m = g.edge_count();
    if strategy.budget > m {
        return Err(invalid(format!(
            "budget {} exceeds the {m} edges of the graph",
            strategy.budget
        )));
    }
    if strategy.budget == 0 {
        return Ok(g.clone());
    }
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w = Working::new(g);
    let target = m - strategy.budget;

    match strategy.kind {
        AdversaryKind::RandomDelete => w.random_delete(strategy.budget, &mut rng),
        AdversaryKind::StarKill => {
            while w.m > target {
                let (side, index, _) = (0..n)
                    .map(|i| (0u8, i, w.left[i].len()))
                    .chain((0..n).map(|i| (1u8, i, w.right[i].len())))
                    .max_by(|a, b| a.2.cmp(&b.2).then(b.0.cmp(&a.0)).then(b.1.cmp(&a.1)))
                    .expect("n >= 1");
                let star: Vec<usize> = if side == 0 {
                    w.left[index].iter().copied().collect()
                } else {
                    w.right[index].iter().copied().collect()
                };
                for other in star {
                    if w.m == target {
                        break;
                    }
                    if side == 0 {
                        w.remove(index, other);
                    } else {
                        w.remove(other, index);
                    }
                }
            }
        }
        AdversaryKind::ShortCycleBreaker => {
            let mut via = vec![None; n];
            let mut cursor = rng.random_range(0..n);
            let mut idle = 0;
            while w.m > target && idle < n {
                match w.four_cycle_at(cursor, &mut via) {
                    Some((u, r1, x, r2)) => {
                        idle = 0;
                        let edges = [(u, r1), (x, r1), (x, r2), (u, r2)];
                        let (a, b) = edges[rng.random_range(0..4)];
                        w.remove(a, b);
                    }
                    None => {
                        idle += 1;
                        cursor = (cursor + 1) % n;
                    }
                }
            }
            if w.m > target {
                let rest = w.m - target;
                w.random_delete(rest, &mut rng);
            }
        }
    }
    Ok(w.finish(n))
}
