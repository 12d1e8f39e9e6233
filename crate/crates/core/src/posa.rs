//! Long paths from a fixed endpoint by rotation-extension.
//!
//! The search keeps a path `start = p_0, p_1, ..., p_k` and tries to extend
//! it at the far end. When every neighbor of the far end already lies on the
//! path it performs rotations: an edge `p_k p_i` turns the path into
//! `p_0 ... p_i p_k p_{k-1} ... p_{i+1}`, whose far end is `p_{i+1}`. Rotated
//! paths are explored breadth-first, one representative per endpoint, until
//! some endpoint has a neighbor off the path (extend and continue) or the
//! endpoint set `S` is closed under rotation.
//!
//! A closed `S` certifies poor expansion. Every edge broken by a rotation is
//! incident to a vertex of `S`, so for `u` on the path with `u, u-, u+ ∉ S`
//! both path edges at `u` survive in every rotated path, and any edge from an
//! endpoint to `u` would rotate `u-` or `u+` into `S`. Hence
//! `N(S) ⊆ S- ∪ S+` and, since the far end has no successor,
//! `|N(S) \ S| <= 2|S| - 1`.
//!
//! A closed `S` only says the current path is rotation-maximal, not longest.
//! Before a witness is returned, a depth-first search with backtracking
//! (capped at `max(|V|^2, 2^16)` visited nodes) looks for the target path
//! directly.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{PathRecord, SubgraphView, Vertex, VertexSet};

/// A vertex set `X` with `|N(X) \ X| < 2|X|` in the searched view.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionWitness {
    pub x: VertexSet,
    pub neighborhood_size: usize,
}

impl ExpansionWitness {
    /// Measures `|N(X) \ X|` in `view`. Returns `None` if `x` is empty or
    /// expands by at least `2|X|`.
    pub fn try_new(view: &SubgraphView<'_>, x: VertexSet) -> Option<Self> {
        if x.is_empty() {
            return None;
        }
        let neighborhood_size = view.external_neighborhood(&x).len();
        (neighborhood_size < 2 * x.len()).then_some(ExpansionWitness {
            x,
            neighborhood_size,
        })
    }

    /// Recomputes the neighborhood from scratch and checks the violation.
    pub fn verify(&self, view: &SubgraphView<'_>) -> bool {
        !self.x.is_empty()
            && self.x.is_subset(view.members())
            && view.external_neighborhood(&self.x).len() == self.neighborhood_size
            && self.neighborhood_size < 2 * self.x.len()
    }

    pub fn size(&self) -> usize {
        self.x.len()
    }
}

impl Serialize for ExpansionWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            x: Vec<Vertex>,
            size: usize,
            neighborhood_size: usize,
        }
        Repr {
            x: self.x.to_vec(),
            size: self.x.len(),
            neighborhood_size: self.neighborhood_size,
        }
        .serialize(s)
    }
}

/// Outcome of [`find_long_path`].
#[derive(Clone, Debug)]
pub enum PathSearch {
    /// A path from `start` of exactly the requested length.
    Found(PathRecord),
    /// Rotation closure reached without an extension. `best` is the longest
    /// path found.
    Stuck {
        best: PathRecord,
        witness: ExpansionWitness,
    },
    /// More than `|V(view)|^2` rotation states were explored.
    BudgetExhausted { best: PathRecord, states: usize },
}

impl PathSearch {
    pub fn path(&self) -> &PathRecord {
        match self {
            PathSearch::Found(p) => p,
            PathSearch::Stuck { best, .. } | PathSearch::BudgetExhausted { best, .. } => best,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, PathSearch::Found(_))
    }
}

fn positions(path: &[Vertex]) -> HashMap<Vertex, usize> {
    path.iter().enumerate().map(|(i, &v)| (v, i)).collect()
}

fn rotate(path: &[Vertex], pivot: usize) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(path.len());
    out.extend_from_slice(&path[..=pivot]);
    out.extend(path[pivot + 1..].iter().rev());
    out
}

const DFS_MIN_BUDGET: usize = 1 << 16;

/// Depth-first search for a path of `target_len` edges from `start`, giving
/// up after `cap` visited nodes.
fn backtrack(
    view: &SubgraphView<'_>,
    start: Vertex,
    target_len: usize,
    cap: usize,
) -> Option<Vec<Vertex>> {
    let mut path = vec![start];
    let mut on_path = VertexSet::new(view.n());
    on_path.insert(start);
    // Next neighbor index to try at each depth.
    let mut cursor = vec![0usize];
    let mut visited = 0usize;
    while let Some(&end) = path.last() {
        if path.len() > target_len {
            return Some(path);
        }
        let depth = path.len() - 1;
        let next = view
            .neighbors(end)
            .skip(cursor[depth])
            .enumerate()
            .find(|(_, u)| !on_path.contains(*u));
        match next {
            Some((skipped, u)) => {
                cursor[depth] += skipped + 1;
                visited += 1;
                if visited > cap {
                    return None;
                }
                on_path.insert(u);
                path.push(u);
                cursor.push(0);
            }
            None => {
                on_path.remove(end);
                path.pop();
                cursor.pop();
            }
        }
    }
    None
}

/// Searches `view` for a path of length `target_len` with `start` as an end
/// point. Neighbors are scanned in ascending `(side, index)` order, so the
/// result is deterministic.
pub fn find_long_path(
    view: &SubgraphView<'_>,
    start: Vertex,
    target_len: usize,
) -> Result<PathSearch> {
    if !view.contains(start) {
        return Err(invalid(format!("start vertex {start} is not in the view")));
    }
    if target_len == 0 {
        return Err(invalid("target length must be at least 1"));
    }
    let budget = view.vertex_count().pow(2).max(1);
    let mut states = 0usize;

    let mut path = vec![start];
    let mut on_path = VertexSet::new(view.n());
    on_path.insert(start);

    loop {
        if path.len() > target_len {
            path.truncate(target_len + 1);
            return Ok(PathSearch::Found(PathRecord(path)));
        }
        let end = *path.last().expect("path is never empty");
        if let Some(u) = view.neighbors(end).find(|u| !on_path.contains(*u)) {
            on_path.insert(u);
            path.push(u);
            continue;
        }

        let mut endpoints = VertexSet::new(view.n());
        endpoints.insert(end);
        let mut queue = VecDeque::from([path.clone()]);
        let mut extension = None;
        'bfs: while let Some(current) = queue.pop_front() {
            let tail = *current.last().expect("nonempty");
            let pos = positions(&current);
            for u in view.neighbors(tail) {
                let Some(&i) = pos.get(&u) else {
                    extension = Some((current, u));
                    break 'bfs;
                };
                if i + 2 == current.len() {
                    continue;
                }
                let new_end = current[i + 1];
                if endpoints.insert(new_end) {
                    states += 1;
                    if states > budget {
                        return Ok(PathSearch::BudgetExhausted {
                            best: PathRecord(path),
                            states,
                        });
                    }
                    queue.push_back(rotate(&current, i));
                }
            }
        }

        match extension {
            Some((rotated, u)) => {
                path = rotated;
                on_path.insert(u);
                path.push(u);
            }
            None => {
                let cap = view.vertex_count().pow(2).max(DFS_MIN_BUDGET);
                if let Some(found) = backtrack(view, start, target_len, cap) {
                    return Ok(PathSearch::Found(PathRecord(found)));
                }
                let witness = ExpansionWitness::try_new(view, endpoints)
                    .expect("a closed rotation endpoint set never expands by 2|S|");
                return Ok(PathSearch::Stuck {
                    best: PathRecord(path),
                    witness,
                });
            }
        }
    }
}
