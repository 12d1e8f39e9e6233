//! Even cycles in dense subgraphs of random bipartite graphs.
//!
//! The crate turns the constructive argument behind "every subgraph of
//! `G(n, n, p)` with more than `(1 + eps) n^2 p / 2` edges contains a cycle of
//! every even length `t` in `[4, (1 + eps/2) n / 30]`" into executable
//! algorithms:
//!
//! * [`graph`]: immutable bipartite graphs, vertex sets, induced views,
//!   path/cycle validators and the edge-list text format.
//! * [`random_model`]: seeded `G(n, n, p)` sampling and the Chernoff tail.
//! * [`degeneracy`]: minimum-degree cores by worklist peeling.
//! * [`posa`]: rotation-extension long paths with expansion certificates.
//! * [`expansion`]: exact and sampled vertex-expansion checks, a dense
//!   small-set search and the union bound for dense small sets.
//! * [`pipeline`]: root selection, bridge set, core, long path and cycle
//!   closure, producing a catalog of verified cycles.
//! * [`harness`]: adversarial edge deletion, a brute-force cycle oracle and
//!   seeded Monte Carlo experiments with CSV reports.
//! * [`cli`]: the `bipcycles` command line.

pub mod cli;
pub mod degeneracy;
pub mod error;
pub mod expansion;
pub mod graph;
pub mod harness;
pub mod pipeline;
pub mod posa;
pub mod random_model;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, CycleRecord, PathRecord, Side, SubgraphView, Vertex, VertexSet};

/// Ceiling that ignores floating-point noise just above an integer.
pub(crate) fn ceil_tol(x: f64) -> usize {
    if x <= 0.0 {
        0
    } else {
        (x - 1e-9).ceil() as usize
    }
}

/// Floor that ignores floating-point noise just below an integer.
pub(crate) fn floor_tol(x: f64) -> usize {
    if x <= 0.0 {
        0
    } else {
        (x + 1e-9).floor() as usize
    }
}
