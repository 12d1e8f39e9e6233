use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, CycleRecord, Vertex};

/// Largest side size accepted by the exhaustive enumerators.
pub const ORACLE_LIMIT: usize = 6;

/// Every cycle of `g` exactly once, as a vertex sequence that starts at its
/// smallest vertex and whose second vertex is smaller than its last.
pub fn enumerate_cycles(g: &BipartiteGraph) -> Result<Vec<CycleRecord>> {
    if g.n() > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            what: "side size for exhaustive cycle enumeration",
            actual: g.n(),
            limit: ORACLE_LIMIT,
        });
    }
    let mut out = Vec::new();
    for s in g.vertices() {
        let mut path = vec![s];
        extend(g, s, &mut path, &mut out);
    }
    Ok(out)
}

fn extend(g: &BipartiteGraph, s: Vertex, path: &mut Vec<Vertex>, out: &mut Vec<CycleRecord>) {
    let end = *path.last().expect("nonempty");
    for u in g.neighbors(end) {
        if u == s && path.len() >= 4 && path[1] < end {
            out.push(CycleRecord(path.clone()));
        } else if u > s && !path.contains(&u) {
            path.push(u);
            extend(g, s, path, out);
            path.pop();
        }
    }
}

/// Number of cycles of each length.
pub fn cycle_length_counts(g: &BipartiteGraph) -> Result<BTreeMap<usize, usize>> {
    let mut counts = BTreeMap::new();
    for c in enumerate_cycles(g)? {
        *counts.entry(c.len()).or_insert(0) += 1;
    }
    Ok(counts)
}

/// The set of cycle lengths present in `g`.
pub fn brute_force_cycle_oracle(g: &BipartiteGraph) -> Result<BTreeSet<usize>> {
    Ok(cycle_length_counts(g)?.into_keys().collect())
}

/// Formats a length set as `{4, 6, 8}`.
pub fn format_length_set(lengths: &BTreeSet<usize>) -> String {
    let inner: Vec<String> = lengths.iter().map(|t| t.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_cycle;

    #[test]
    fn complete_bipartite_counts() {
        let k33 = BipartiteGraph::complete(3).unwrap();
        let counts = cycle_length_counts(&k33).unwrap();
        assert_eq!(counts, BTreeMap::from([(4, 9), (6, 6)]));
        // K_{4,4}: C(4,2)^2 squares, 4*3*2*4*3*2/6 hexagons, 4!*3!/2 octagons.
        let k44 = BipartiteGraph::complete(4).unwrap();
        let counts = cycle_length_counts(&k44).unwrap();
        assert_eq!(counts, BTreeMap::from([(4, 36), (6, 96), (8, 72)]));
        assert_eq!(
            format_length_set(&brute_force_cycle_oracle(&k44).unwrap()),
            "{4, 6, 8}"
        );
    }

    #[test]
    fn enumerated_cycles_are_valid() {
        let g = BipartiteGraph::complete(4).unwrap();
        for c in enumerate_cycles(&g).unwrap() {
            assert_eq!(validate_cycle(&g, &c), Ok(()));
        }
    }

    #[test]
    fn forest_has_none() {
        let g = BipartiteGraph::from_edges(3, [(0, 0), (1, 0), (1, 1), (2, 2)]).unwrap();
        assert!(brute_force_cycle_oracle(&g).unwrap().is_empty());
        assert_eq!(format_length_set(&BTreeSet::new()), "{}");
    }

    #[test]
    fn rejects_large() {
        let g = BipartiteGraph::empty(7).unwrap();
        assert!(enumerate_cycles(&g).is_err());
    }
}
