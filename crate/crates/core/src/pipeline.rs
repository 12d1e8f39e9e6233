//! Even cycles of every length in a dense subgraph `G'` of `G(n, n, p)`.
//!
//! The construction:
//!
//! 1. Heavy vertices: `B0` (Left) and `B1` (Right) have degree at least
//!    `(1 + eps/2) n p / 2` in `G'`.
//! 2. Root: a vertex `v0` with at least `eps n p / 4` heavy neighbors,
//!    maximizing that count (Left side first, then Right with roles swapped).
//! 3. Bridge set: with `W = N(v0) ∩ B1`, pick `B ⊆ B0 ∩ N(W) \ {v0}` of size
//!    `ceil(eps n^2 p^2 / 4)`, greedily by the number of neighbors in `W`.
//!    `B` lies at distance two from `v0`, on `v0`'s side.
//! 4. Core: the minimum-degree core `D` of `G'[B ∪ N(v0)]`. Every vertex of
//!    `D` on the far side is a neighbor of `v0`.
//! 5. Long path: rotation-extension in `G'[D]` from `v2`, where `v0 v1 v2`
//!    is a path with `v1, v2 ∈ D`.
//! 6. Closure: on the path `v2 x1 x2 ...` every odd-position `x_i` is a
//!    neighbor of `v0`, so `v0 v1 v2 x1 ... x_s` (when `x1 != v1`) and
//!    `v0 x1 ... x_s` (when `x1 = v1`) close into cycles for odd `s`.
//!
//! Every emitted cycle is re-validated against `G'`.
//!
//! The bridge-set edge bound `e(N(v0), B) >= eps (1 + eps/2) n^3 p^3 / 8`
//! asks for edge density `(1 + eps/2) / 2` between `N(v0)` and `B`, which a
//! sparse random graph cannot supply. [`BridgeMode::Strict`] enforces it
//! together with the core degree `ceil((1 + eps/2) n p / 4)`.
//! [`BridgeMode::Adaptive`] (the default) records both bounds and lowers the
//! core degree to `floor(e(Y) / |Y|)` for `Y = B ∪ N(v0)`, the largest degree
//! for which the core is guaranteed nonempty.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::degeneracy::prune_to_min_degree;
use crate::error::{invalid, Result};
use crate::graph::{
    validate_cycle, BipartiteGraph, CycleRecord, PathRecord, Rejection, Side, Vertex, VertexSet,
};
use crate::posa::{find_long_path, ExpansionWitness, PathSearch};
use crate::random_model::ModelParams;
use crate::{ceil_tol, floor_tol};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum BridgeMode {
    /// Bridge density, union size and core degree bounds are hard errors.
    Strict,
    /// Bounds are measured and reported; the core degree falls back to the
    /// average-degree guarantee of `G'[B ∪ N(v0)]`.
    #[default]
    Adaptive,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PipelineConfig {
    pub eps: f64,
    pub t_max_override: Option<usize>,
    pub verify_each_cycle: bool,
    pub bridge_mode: BridgeMode,
}

impl PipelineConfig {
    pub fn new(eps: f64) -> Result<Self> {
        let cfg = PipelineConfig {
            eps,
            t_max_override: None,
            verify_each_cycle: true,
            bridge_mode: BridgeMode::default(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_t_max(mut self, t_max: usize) -> Result<Self> {
        self.t_max_override = Some(t_max);
        self.validate()?;
        Ok(self)
    }

    pub fn with_bridge_mode(mut self, mode: BridgeMode) -> Self {
        self.bridge_mode = mode;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0 && self.eps <= 0.4) {
            return Err(invalid(format!(
                "eps must lie in (0, 2/5], got {}",
                self.eps
            )));
        }
        if let Some(t) = self.t_max_override {
            if t < 4 || t % 2 == 1 {
                return Err(invalid(format!(
                    "t_max must be even and at least 4, got {t}"
                )));
            }
        }
        Ok(())
    }

    /// Override, or `(1 + eps/2) n / 30` rounded down to an even integer.
    pub fn t_max(&self, n: usize) -> usize {
        self.t_max_override
            .unwrap_or_else(|| 2 * floor_tol((1.0 + self.eps / 2.0) * n as f64 / 60.0))
    }
}

/// Heavy vertices of `G'`.
#[derive(Clone, Debug)]
pub struct HeavyVertexSets {
    /// Heavy Left vertices.
    pub b0: VertexSet,
    /// Heavy Right vertices.
    pub b1: VertexSet,
    pub degree_threshold: f64,
    /// `(required, met)` for `|B0| >= eps / (2 + 3 eps) n`, present when
    /// `G'` is above the edge threshold.
    pub b0_lower_bound: Option<(f64, bool)>,
}

impl HeavyVertexSets {
    pub fn on_side(&self, side: Side) -> &VertexSet {
        match side {
            Side::Left => &self.b0,
            Side::Right => &self.b1,
        }
    }
}

/// `(1 + eps) n^2 p / 2`, the edge count `G'` must exceed.
pub fn edge_threshold(params: &ModelParams, eps: f64) -> f64 {
    (1.0 + eps) * params.expected_edges() / 2.0
}

pub fn heavy_vertices(gprime: &BipartiteGraph, params: &ModelParams, eps: f64) -> HeavyVertexSets {
    let n = gprime.n();
    let threshold = (1.0 + eps / 2.0) * params.np() / 2.0;
    let heavy = |side: Side| {
        VertexSet::from_vertices(
            n,
            (0..n)
                .map(|i| Vertex { side, index: i })
                .filter(|&v| gprime.neighbor_indices(v).len() as f64 >= threshold - 1e-9),
        )
    };
    let b0 = heavy(Side::Left);
    let b1 = heavy(Side::Right);
    let b0_lower_bound = (gprime.edge_count() as f64 > edge_threshold(params, eps)).then(|| {
        let required = eps / (2.0 + 3.0 * eps) * n as f64;
        (required, b0.len() as f64 >= required - 1e-9)
    });
    HeavyVertexSets {
        b0,
        b1,
        degree_threshold: threshold,
        b0_lower_bound,
    }
}

/// No vertex has enough heavy neighbors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NoRoot {
    pub required: f64,
    pub best_left: usize,
    pub best_right: usize,
}

impl fmt::Display for NoRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no root: best heavy-neighbor counts {} (Left), {} (Right), need {:.2}",
            self.best_left, self.best_right, self.required
        )
    }
}

fn best_root(
    gprime: &BipartiteGraph,
    side: Side,
    heavy_other: &VertexSet,
) -> Option<(Vertex, usize)> {
    let mut best: Option<(Vertex, usize)> = None;
    for index in 0..gprime.n() {
        let v = Vertex { side, index };
        let count = gprime
            .neighbors(v)
            .filter(|u| heavy_other.contains(*u))
            .count();
        if best.is_none_or(|(_, c)| count > c) {
            best = Some((v, count));
        }
    }
    best
}

/// A vertex maximizing its number of heavy neighbors, provided that number
/// reaches `eps n p / 4`. Left is tried first; ties go to the lowest index.
pub fn select_root(
    gprime: &BipartiteGraph,
    heavy: &HeavyVertexSets,
    params: &ModelParams,
    eps: f64,
) -> std::result::Result<Vertex, NoRoot> {
    let required = eps * params.np() / 4.0;
    let (left, lc) = best_root(gprime, Side::Left, &heavy.b1).expect("n >= 1");
    if lc > 0 && lc as f64 >= required - 1e-9 {
        return Ok(left);
    }
    let (right, rc) = best_root(gprime, Side::Right, &heavy.b0).expect("n >= 1");
    if rc > 0 && rc as f64 >= required - 1e-9 {
        return Ok(right);
    }
    Err(NoRoot {
        required,
        best_left: lc,
        best_right: rc,
    })
}

/// Measurements taken while building the bridge set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BridgeStats {
    /// `|N(v0) ∩ B1|`.
    pub heavy_neighbors: usize,
    /// `|B0 ∩ N(N(v0) ∩ B1) \ {v0}|`.
    pub pool_size: usize,
    /// `e(N(v0), B)`.
    pub bridge_edges: usize,
    /// `eps (1 + eps/2) n^3 p^3 / 8`.
    pub required_bridge_edges: f64,
    /// `|B ∪ N(v0)|`.
    pub union_size: usize,
    /// `eps n^2 p^2 / 2`.
    pub max_union_size: f64,
    /// `ceil((1 + eps/2) n p / 4)`.
    pub nominal_core_degree: usize,
}

impl BridgeStats {
    pub fn density_bound_met(&self) -> bool {
        self.bridge_edges as f64 >= self.required_bridge_edges - 1e-9
    }

    pub fn union_bound_met(&self) -> bool {
        self.union_size as f64 <= self.max_union_size + 1e-9
    }
}

#[derive(Clone, Debug)]
pub struct RootSelection {
    pub v0: Vertex,
    pub bridge_b: VertexSet,
    pub core_d: VertexSet,
    /// Minimum degree the core was pruned to.
    pub core_degree: usize,
    pub stats: BridgeStats,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum BridgeError {
    /// The second-neighborhood pool is not larger than `eps n^2 p^2 / 4`.
    SparseSecondNeighborhood {
        pool: usize,
        required: f64,
    },
    BridgeDensity {
        edges: usize,
        required: f64,
    },
    UnionTooLarge {
        size: usize,
        limit: f64,
    },
    CoreEmpty {
        degree: usize,
    },
}

impl fmt::Display for BridgeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BridgeError::SparseSecondNeighborhood { pool, required } => write!(
                f,
                "second neighborhood too sparse: pool {pool}, need more than {required:.1}"
            ),
            BridgeError::BridgeDensity { edges, required } => write!(
                f,
                "bridge density: e(N(v0), B) = {edges}, need {required:.1}"
            ),
            BridgeError::UnionTooLarge { size, limit } => {
                write!(f, "bridge union has {size} vertices, limit {limit:.1}")
            }
            BridgeError::CoreEmpty { degree } => write!(f, "core empty at minimum degree {degree}"),
        }
    }
}

pub fn build_bridge_set(
    gprime: &BipartiteGraph,
    v0: Vertex,
    heavy: &HeavyVertexSets,
    params: &ModelParams,
    eps: f64,
    mode: BridgeMode,
) -> std::result::Result<RootSelection, BridgeError> {
    let n = gprime.n();
    let np = params.np();
    let root_side = v0.side;
    let heavy_root = heavy.on_side(root_side);
    let heavy_other = heavy.on_side(root_side.opposite());

    let nv0 = VertexSet::from_vertices(n, gprime.neighbors(v0));
    let w = nv0.intersection(heavy_other);
    let mut pool = gprime.set_neighborhood(&w);
    pool.intersect_with(heavy_root);
    pool.remove(v0);

    let target = eps * np * np / 4.0;
    if pool.len() as f64 <= target + 1e-9 {
        return Err(BridgeError::SparseSecondNeighborhood {
            pool: pool.len(),
            required: target,
        });
    }
    let size = ceil_tol(target);

    let mut ranked: Vec<(usize, Vertex)> = pool
        .iter()
        .map(|u| (gprime.neighbors(u).filter(|x| w.contains(*x)).count(), u))
        .collect();
    ranked.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let bridge_b = VertexSet::from_vertices(n, ranked.iter().take(size).map(|&(_, u)| u));

    let union = bridge_b.union(&nv0);
    let stats = BridgeStats {
        heavy_neighbors: w.len(),
        pool_size: pool.len(),
        bridge_edges: gprime.edges_between(&nv0, &bridge_b),
        required_bridge_edges: eps * (1.0 + eps / 2.0) * np.powi(3) / 8.0,
        union_size: union.len(),
        max_union_size: eps * np * np / 2.0,
        nominal_core_degree: ceil_tol((1.0 + eps / 2.0) * np / 4.0),
    };

    let core_degree = match mode {
        BridgeMode::Strict => {
            if !stats.density_bound_met() {
                return Err(BridgeError::BridgeDensity {
                    edges: stats.bridge_edges,
                    required: stats.required_bridge_edges,
                });
            }
            if !stats.union_bound_met() {
                return Err(BridgeError::UnionTooLarge {
                    size: stats.union_size,
                    limit: stats.max_union_size,
                });
            }
            stats.nominal_core_degree
        }
        BridgeMode::Adaptive => {
            // Edges of G'[Y] all run between B and N(v0).
            let average = stats.bridge_edges / stats.union_size.max(1);
            stats.nominal_core_degree.min(average.max(1))
        }
    };

    let core_d = prune_to_min_degree(gprime, &union, core_degree);
    if core_d.is_empty() {
        return Err(BridgeError::CoreEmpty {
            degree: core_degree,
        });
    }
    Ok(RootSelection {
        v0,
        bridge_b,
        core_d,
        core_degree,
        stats,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClosureCase {
    /// `x1 != v1`: cycle `v0 v1 v2 x1 ... x_s`, `s = t - 3`.
    ViaStartPair,
    /// `x1 = v1`: cycle `v0 x1 ... x_s`, `s = t - 1`. Also used when `v1`
    /// reappears further along the path, where the first shape would repeat
    /// it.
    AlongPath,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum CloseError {
    OddLength(usize),
    TooShort(usize),
    /// The path has `have` edges after `v2`; the cycle needs `need`.
    PathTooShort {
        need: usize,
        have: usize,
    },
}

impl fmt::Display for CloseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CloseError::OddLength(t) => write!(f, "length {t} is odd"),
            CloseError::TooShort(t) => write!(f, "length {t} is below 4"),
            CloseError::PathTooShort { need, have } => {
                write!(
                    f,
                    "path too short: need {need} vertices after v2, have {have}"
                )
            }
        }
    }
}

/// Which closure shape a path from `v2` uses.
pub fn closure_case(path: &PathRecord, v1: Vertex) -> ClosureCase {
    if path.vertices().iter().skip(1).any(|&x| x == v1) {
        ClosureCase::AlongPath
    } else {
        ClosureCase::ViaStartPair
    }
}

/// Closes a path `v2 x1 x2 ...` into a cycle of length `t` through `v0`.
pub fn close_cycle(
    path: &PathRecord,
    v0: Vertex,
    v1: Vertex,
    t: usize,
) -> std::result::Result<CycleRecord, CloseError> {
    if t % 2 == 1 {
        return Err(CloseError::OddLength(t));
    }
    if t < 4 {
        return Err(CloseError::TooShort(t));
    }
    let verts = path.vertices();
    let xs = verts.get(1..).unwrap_or(&[]);
    let cycle = match closure_case(path, v1) {
        ClosureCase::AlongPath => {
            let s = t - 1;
            if xs.len() < s {
                return Err(CloseError::PathTooShort {
                    need: s,
                    have: xs.len(),
                });
            }
            std::iter::once(v0).chain(xs[..s].iter().copied()).collect()
        }
        ClosureCase::ViaStartPair => {
            let s = t - 3;
            if xs.len() < s {
                return Err(CloseError::PathTooShort {
                    need: s,
                    have: xs.len(),
                });
            }
            [v0, v1, verts[0]]
                .into_iter()
                .chain(xs[..s].iter().copied())
                .collect()
        }
    };
    Ok(CycleRecord(cycle))
}

#[derive(Clone, Debug, Serialize)]
pub enum MissReason {
    NoRoot(NoRoot),
    Bridge(BridgeError),
    /// No `v1 ∈ D ∩ N(v0)` with a neighbor `v2 ∈ D`.
    NoStartPair,
    /// Rotation-extension stopped at `path_len` edges.
    PathTooShort {
        path_len: usize,
        needed: usize,
        witness: Option<ExpansionWitness>,
        budget_exhausted: bool,
    },
    Close(CloseError),
    Validation(Rejection),
}

impl fmt::Display for MissReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MissReason::NoRoot(e) => write!(f, "{e}"),
            MissReason::Bridge(e) => write!(f, "{e}"),
            MissReason::NoStartPair => write!(f, "no start pair v1, v2 in the core"),
            MissReason::PathTooShort {
                path_len,
                needed,
                witness,
                budget_exhausted,
            } => {
                write!(f, "path reached {path_len} edges, need {needed}")?;
                if let Some(w) = witness {
                    write!(
                        f,
                        " (witness |X| = {}, |N(X)\\X| = {})",
                        w.size(),
                        w.neighborhood_size
                    )?;
                }
                if *budget_exhausted {
                    write!(f, " (rotation budget exhausted)")?;
                }
                Ok(())
            }
            MissReason::Close(e) => write!(f, "{e}"),
            MissReason::Validation(r) => write!(f, "validation failed: {r}"),
        }
    }
}

/// Summary of the construction for reports.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineTrace {
    pub v0: Vertex,
    pub v1: Option<Vertex>,
    pub v2: Option<Vertex>,
    pub bridge_size: usize,
    pub core_size: usize,
    pub core_degree: usize,
    pub stats: BridgeStats,
    pub path_len: Option<usize>,
    pub case: Option<ClosureCase>,
}

#[derive(Clone, Debug, Serialize)]
pub enum Notice {
    /// `t_max < 4`: nothing to look for at this scale.
    DegenerateScale { t_max: usize },
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CycleCatalog {
    pub t_max: usize,
    pub cycles: BTreeMap<usize, CycleRecord>,
    pub misses: Vec<(usize, MissReason)>,
    pub notice: Option<Notice>,
    /// Set when `e(G') <= (1 + eps) n^2 p / 2`.
    pub below_edge_threshold: bool,
    pub trace: Option<PipelineTrace>,
}

impl CycleCatalog {
    /// Even lengths the catalog is responsible for.
    pub fn lengths(&self) -> impl Iterator<Item = usize> {
        (4..=self.t_max).step_by(2)
    }

    /// A cycle for every even length in range and no degenerate notice.
    pub fn is_complete(&self) -> bool {
        self.notice.is_none()
            && self.misses.is_empty()
            && self.lengths().all(|t| self.cycles.contains_key(&t))
    }
}

fn miss_all(catalog: &mut CycleCatalog, reason: MissReason) {
    let lengths: Vec<usize> = catalog.lengths().collect();
    catalog.misses = lengths.into_iter().map(|t| (t, reason.clone())).collect();
}

/// Runs the full construction and returns a cycle (or a recorded miss) for
/// every even `t` in `[4, t_max]`.
pub fn find_all_even_cycles(
    gprime: &BipartiteGraph,
    config: &PipelineConfig,
    params: &ModelParams,
) -> Result<CycleCatalog> {
    config.validate()?;
    params.validate()?;
    if params.n != gprime.n() {
        return Err(invalid(format!(
            "model has n = {}, graph has n = {}",
            params.n,
            gprime.n()
        )));
    }
    let eps = config.eps;
    let mut catalog = CycleCatalog {
        t_max: config.t_max(gprime.n()),
        below_edge_threshold: gprime.edge_count() as f64 <= edge_threshold(params, eps),
        ..CycleCatalog::default()
    };
    if catalog.t_max < 4 {
        catalog.notice = Some(Notice::DegenerateScale {
            t_max: catalog.t_max,
        });
        return Ok(catalog);
    }

    let heavy = heavy_vertices(gprime, params, eps);
    let v0 = match select_root(gprime, &heavy, params, eps) {
        Ok(v) => v,
        Err(e) => {
            miss_all(&mut catalog, MissReason::NoRoot(e));
            return Ok(catalog);
        }
    };
    let sel = match build_bridge_set(gprime, v0, &heavy, params, eps, config.bridge_mode) {
        Ok(s) => s,
        Err(e) => {
            miss_all(&mut catalog, MissReason::Bridge(e));
            return Ok(catalog);
        }
    };
    let mut trace = PipelineTrace {
        v0,
        v1: None,
        v2: None,
        bridge_size: sel.bridge_b.len(),
        core_size: sel.core_d.len(),
        core_degree: sel.core_degree,
        stats: sel.stats.clone(),
        path_len: None,
        case: None,
    };

    let core = gprime.induced_subgraph(&sel.core_d);
    let start_pair = core
        .side(v0.side.opposite())
        .filter(|&v1| gprime.has_edge(v0, v1))
        .find_map(|v1| core.neighbors(v1).next().map(|v2| (v1, v2)));
    let Some((v1, v2)) = start_pair else {
        miss_all(&mut catalog, MissReason::NoStartPair);
        catalog.trace = Some(trace);
        return Ok(catalog);
    };
    trace.v1 = Some(v1);
    trace.v2 = Some(v2);

    let target = catalog.t_max - 1;
    let search = find_long_path(&core, v2, target)?;
    let path = search.path().clone();
    trace.path_len = Some(path.len());
    trace.case = Some(closure_case(&path, v1));
    catalog.trace = Some(trace);

    let lengths: Vec<usize> = catalog.lengths().collect();
    for t in lengths {
        match close_cycle(&path, v0, v1, t) {
            Ok(cycle) => {
                if config.verify_each_cycle {
                    if let Err(r) = validate_cycle(gprime, &cycle) {
                        catalog.misses.push((t, MissReason::Validation(r)));
                        continue;
                    }
                }
                catalog.cycles.insert(t, cycle);
            }
            Err(CloseError::PathTooShort { need, .. }) => {
                let (witness, budget_exhausted) = match &search {
                    PathSearch::Stuck { witness, .. } => (Some(witness.clone()), false),
                    PathSearch::BudgetExhausted { .. } => (None, true),
                    PathSearch::Found(_) => (None, false),
                };
                catalog.misses.push((
                    t,
                    MissReason::PathTooShort {
                        path_len: path.len(),
                        needed: need,
                        witness,
                        budget_exhausted,
                    },
                ));
            }
            Err(e) => catalog.misses.push((t, MissReason::Close(e))),
        }
    }
    Ok(catalog)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(side: Side, i: usize) -> Vertex {
        Vertex { side, index: i }
    }

    #[test]
    fn config_validation() {
        assert!(PipelineConfig::new(0.0).is_err());
        assert!(PipelineConfig::new(0.41).is_err());
        let cfg = PipelineConfig::new(0.4).unwrap();
        assert!(cfg.with_t_max(5).is_err());
        assert!(cfg.with_t_max(2).is_err());
        assert_eq!(cfg.t_max(900), 36);
        assert_eq!(cfg.with_t_max(10).unwrap().t_max(900), 10);
    }

    #[test]
    fn heavy_sets_extremes() {
        let k = BipartiteGraph::complete(5).unwrap();
        let params = ModelParams::with_p(5, 1.0, 0).unwrap();
        let h = heavy_vertices(&k, &params, 0.4);
        assert_eq!(h.b0.len() + h.b1.len(), 10);
        let e = BipartiteGraph::empty(5).unwrap();
        let h = heavy_vertices(&e, &params, 0.4);
        assert!(h.b0.is_empty() && h.b1.is_empty());
        assert!(h.b0_lower_bound.is_none());
    }

    #[test]
    fn heavy_threshold_arithmetic() {
        let params = ModelParams::with_p(900, 0.0858, 0).unwrap();
        let e = BipartiteGraph::empty(900).unwrap();
        let h = heavy_vertices(&e, &params, 0.4);
        assert!((h.degree_threshold - 46.332).abs() < 1e-3);
        assert_eq!(ceil_tol(h.degree_threshold), 47);
    }

    #[test]
    fn root_in_complete_graph_is_left_zero() {
        let k = BipartiteGraph::complete(6).unwrap();
        let params = ModelParams::with_p(6, 1.0, 0).unwrap();
        let h = heavy_vertices(&k, &params, 0.4);
        assert_eq!(select_root(&k, &h, &params, 0.4), Ok(Vertex::left(0)));
        let e = BipartiteGraph::empty(6).unwrap();
        let h = heavy_vertices(&e, &params, 0.4);
        assert!(select_root(&e, &h, &params, 0.4).is_err());
    }

    #[test]
    fn root_falls_back_to_right() {
        // Left 0 is adjacent to every Right vertex; Right vertices are light.
        let g = BipartiteGraph::from_edges(4, (0..4).map(|j| (0, j))).unwrap();
        let params = ModelParams::with_p(4, 1.0, 0).unwrap();
        let h = heavy_vertices(&g, &params, 0.4);
        // threshold 2.4: only Left 0 is heavy
        assert_eq!(h.b0.to_vec(), vec![Vertex::left(0)]);
        assert!(h.b1.is_empty());
        assert_eq!(select_root(&g, &h, &params, 0.4), Ok(Vertex::right(0)));
    }

    #[test]
    fn bridge_fails_without_second_neighborhood() {
        // Star at Left 0: its second neighborhood is empty.
        let g = BipartiteGraph::from_edges(4, (0..4).map(|j| (0, j))).unwrap();
        let params = ModelParams::with_p(4, 1.0, 0).unwrap();
        let h = HeavyVertexSets {
            b0: VertexSet::whole_side(4, Side::Left),
            b1: VertexSet::whole_side(4, Side::Right),
            degree_threshold: 0.0,
            b0_lower_bound: None,
        };
        let err = build_bridge_set(&g, Vertex::left(0), &h, &params, 0.4, BridgeMode::Adaptive)
            .unwrap_err();
        assert!(matches!(
            err,
            BridgeError::SparseSecondNeighborhood { pool: 0, .. }
        ));
    }

    #[test]
    fn bridge_size_exceeds_side_in_complete_graph() {
        // eps n^2 p^2 / 4 = 0.1 * 144 = 14.4 > 11 = pool
        let k = BipartiteGraph::complete(12).unwrap();
        let params = ModelParams::with_p(12, 1.0, 0).unwrap();
        let h = heavy_vertices(&k, &params, 0.4);
        let err = build_bridge_set(&k, Vertex::left(0), &h, &params, 0.4, BridgeMode::Strict)
            .unwrap_err();
        let BridgeError::SparseSecondNeighborhood { pool, required } = err else {
            panic!("{err:?}")
        };
        assert_eq!(pool, 11);
        assert!((required - 14.4).abs() < 1e-9);
    }

    #[test]
    fn bridge_in_small_complete_graph_passes_strict() {
        // n = 8, p = 1, eps = 0.2: |B| = ceil(0.05 * 64) = 4 <= 7 = pool,
        // e(N(v0), B) = 8 * 4 = 32 >= 0.2 * 1.1 * 512 / 8 = 14.08,
        // |B ∪ N(v0)| = 12 <= 6.4 fails the union bound.
        let k = BipartiteGraph::complete(8).unwrap();
        let params = ModelParams::with_p(8, 1.0, 0).unwrap();
        let h = heavy_vertices(&k, &params, 0.2);
        let err = build_bridge_set(&k, Vertex::left(0), &h, &params, 0.2, BridgeMode::Strict)
            .unwrap_err();
        assert!(matches!(err, BridgeError::UnionTooLarge { size: 12, .. }));
        let sel =
            build_bridge_set(&k, Vertex::left(0), &h, &params, 0.2, BridgeMode::Adaptive).unwrap();
        assert_eq!(
            sel.bridge_b.to_vec(),
            (1..5).map(Vertex::left).collect::<Vec<_>>()
        );
        assert_eq!(sel.stats.bridge_edges, 32);
        assert!(sel.stats.density_bound_met());
        assert!(!sel.stats.union_bound_met());
        // nominal ceil(1.1 * 8 / 4) = 3, average floor(32 / 12) = 2
        assert_eq!(sel.core_degree, 2);
        assert_eq!(sel.core_d.len(), 12);
    }

    #[test]
    fn close_cycle_case_two() {
        let (v0, v1) = (v(Side::Left, 0), v(Side::Right, 0));
        let v2 = v(Side::Left, 1);
        let path = PathRecord(vec![v2, v1, v(Side::Left, 2), v(Side::Right, 1)]);
        let c = close_cycle(&path, v0, v1, 4).unwrap();
        assert_eq!(c.0, vec![v0, v1, v(Side::Left, 2), v(Side::Right, 1)]);
        assert!(matches!(
            close_cycle(&path, v0, v1, 6),
            Err(CloseError::PathTooShort { need: 5, have: 3 })
        ));
    }

    #[test]
    fn close_cycle_case_one() {
        let (v0, v1) = (v(Side::Left, 0), v(Side::Right, 0));
        let v2 = v(Side::Left, 1);
        let x1 = v(Side::Right, 3);
        let path = PathRecord(vec![v2, x1]);
        let c = close_cycle(&path, v0, v1, 4).unwrap();
        assert_eq!(c.0, vec![v0, v1, v2, x1]);
    }

    #[test]
    fn close_cycle_rejects_odd_and_short() {
        let path = PathRecord(vec![Vertex::left(1)]);
        let (v0, v1) = (Vertex::left(0), Vertex::right(0));
        assert_eq!(close_cycle(&path, v0, v1, 5), Err(CloseError::OddLength(5)));
        assert_eq!(close_cycle(&path, v0, v1, 2), Err(CloseError::TooShort(2)));
    }

    #[test]
    fn v1_later_on_path_uses_along_path_shape() {
        let (v0, v1) = (Vertex::left(0), Vertex::right(0));
        let path = PathRecord(vec![
            Vertex::left(1),
            Vertex::right(1),
            Vertex::left(2),
            v1,
            Vertex::left(3),
            Vertex::right(2),
        ]);
        assert_eq!(closure_case(&path, v1), ClosureCase::AlongPath);
        let c = close_cycle(&path, v0, v1, 6).unwrap();
        assert_eq!(c.0[0], v0);
        assert_eq!(&c.0[1..], &path.vertices()[1..]);
    }

    #[test]
    fn complete_k66_small_range() {
        let k = BipartiteGraph::complete(6).unwrap();
        let params = ModelParams::with_p(6, 1.0, 0).unwrap();
        let cfg = PipelineConfig::new(0.4).unwrap().with_t_max(6).unwrap();
        let cat = find_all_even_cycles(&k, &cfg, &params).unwrap();
        assert!(cat.is_complete(), "{:?}", cat.misses);
        assert_eq!(cat.cycles.keys().copied().collect::<Vec<_>>(), vec![4, 6]);
        for (t, c) in &cat.cycles {
            assert_eq!(c.len(), *t);
            assert_eq!(validate_cycle(&k, c), Ok(()));
        }
    }

    #[test]
    fn empty_graph_misses_everything() {
        let e = BipartiteGraph::empty(900).unwrap();
        let params = ModelParams::with_c(900, 8.0, 0).unwrap();
        let cfg = PipelineConfig::new(0.4).unwrap();
        let cat = find_all_even_cycles(&e, &cfg, &params).unwrap();
        assert!(cat.cycles.is_empty());
        assert_eq!(cat.misses.len(), 17);
        assert!(cat
            .misses
            .iter()
            .all(|(_, r)| matches!(r, MissReason::NoRoot(_))));
        assert!(cat.below_edge_threshold);
    }

    #[test]
    fn degenerate_scale_is_flagged() {
        let k = BipartiteGraph::complete(6).unwrap();
        let params = ModelParams::with_p(6, 1.0, 0).unwrap();
        let cat = find_all_even_cycles(&k, &PipelineConfig::new(0.4).unwrap(), &params).unwrap();
        assert!(matches!(
            cat.notice,
            Some(Notice::DegenerateScale { t_max: 0 })
        ));
        assert!(!cat.is_complete());
    }

    #[test]
    fn mismatched_params_rejected() {
        let k = BipartiteGraph::complete(6).unwrap();
        let params = ModelParams::with_p(7, 1.0, 0).unwrap();
        assert!(find_all_even_cycles(&k, &PipelineConfig::new(0.4).unwrap(), &params).is_err());
    }
}
