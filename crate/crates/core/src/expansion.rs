//! Vertex-expansion checks for small sets.
//!
//! The property of interest: every `X` with `|X| <= limit` satisfies
//! `|N(X) \ X| >= 2|X|`. It quantifies over exponentially many sets, so it is
//! checked exactly only on views of at most [`EXACT_LIMIT`] vertices and by
//! random sampling elsewhere. A sampled `Ok` is evidence, never a proof.
//!
//! Also here: a greedy search for small sets that span many edges, and the
//! log of the first-moment bound on the probability that some `a`-set of
//! `G(n, n, p)` spans at least `k` edges.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{SubgraphView, Vertex, VertexSet};
use crate::posa::ExpansionWitness;

/// Largest view the exhaustive checker accepts (2^24 subsets).
pub const EXACT_LIMIT: usize = 24;

#[derive(Clone, Debug, Serialize)]
pub enum ExpansionCheck {
    /// No violating set among those examined.
    Ok {
        sets_checked: u64,
        exhaustive: bool,
    },
    Witness(ExpansionWitness),
}

impl ExpansionCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, ExpansionCheck::Ok { .. })
    }

    pub fn witness(&self) -> Option<&ExpansionWitness> {
        match self {
            ExpansionCheck::Witness(w) => Some(w),
            ExpansionCheck::Ok { .. } => None,
        }
    }
}

/// Smallest `k`-subset mask greater than `x` with the same popcount.
fn next_combination(x: u32) -> u32 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Checks every nonempty `X` with `|X| <= limit`, by size and then in
/// lexicographic order of members. Returns the first violation.
pub fn check_expansion_exact(view: &SubgraphView<'_>, limit: usize) -> Result<ExpansionCheck> {
    let verts: Vec<Vertex> = view.vertices().collect();
    let k = verts.len();
    if k > EXACT_LIMIT {
        return Err(Error::TooLarge {
            what: "view vertex count (use the sampled checker)",
            actual: k,
            limit: EXACT_LIMIT,
        });
    }
    if limit > k {
        return Err(invalid(format!(
            "limit {limit} exceeds the {k} vertices of the view"
        )));
    }
    let masks: Vec<u32> = verts
        .iter()
        .map(|&v| {
            view.neighbors(v)
                .map(|u| 1u32 << verts.binary_search(&u).expect("neighbor in view"))
                .fold(0, |acc, b| acc | b)
        })
        .collect();
    let full: u32 = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };

    let mut checked = 0u64;
    for size in 1..=limit {
        let mut x: u32 = (1u32 << size) - 1;
        while x <= full {
            checked += 1;
            let mut nb = 0u32;
            let mut rest = x;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                nb |= masks[i];
                rest &= rest - 1;
            }
            let outside = (nb & !x).count_ones() as usize;
            if outside < 2 * size {
                let set = VertexSet::from_vertices(
                    view.n(),
                    (0..k).filter(|i| x >> i & 1 == 1).map(|i| verts[i]),
                );
                return Ok(ExpansionCheck::Witness(ExpansionWitness {
                    x: set,
                    neighborhood_size: outside,
                }));
            }
            if size == k {
                break;
            }
            x = next_combination(x);
        }
    }
    Ok(ExpansionCheck::Ok {
        sets_checked: checked,
        exhaustive: true,
    })
}

/// Draws `trials` random sets: size uniform in `1..=limit`, then members
/// uniform without replacement. Returns the first violation found.
pub fn check_expansion_sampled(
    view: &SubgraphView<'_>,
    limit: usize,
    trials: u64,
    seed: u64,
) -> Result<ExpansionCheck> {
    if trials == 0 {
        return Err(invalid("trials must be at least 1"));
    }
    if limit == 0 {
        return Err(invalid("limit must be at least 1"));
    }
    let verts: Vec<Vertex> = view.vertices().collect();
    let limit = limit.min(verts.len());
    if limit == 0 {
        return Ok(ExpansionCheck::Ok {
            sets_checked: 0,
            exhaustive: false,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let size = rng.random_range(1..=limit);
        let x = VertexSet::from_vertices(
            view.n(),
            sample(&mut rng, verts.len(), size)
                .into_iter()
                .map(|i| verts[i]),
        );
        if let Some(w) = ExpansionWitness::try_new(view, x) {
            return Ok(ExpansionCheck::Witness(w));
        }
    }
    Ok(ExpansionCheck::Ok {
        sets_checked: trials,
        exhaustive: false,
    })
}

/// A vertex set spanning many edges.
#[derive(Clone, Debug, Serialize)]
pub struct DenseSet {
    #[serde(serialize_with = "ser_set")]
    pub y: VertexSet,
    pub edges: usize,
}

fn ser_set<S: serde::Serializer>(s: &VertexSet, ser: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(s.len()))?;
    for v in s.iter() {
        seq.serialize_element(&v)?;
    }
    seq.end()
}

#[derive(Clone, Debug, Serialize)]
pub enum DensityCheck {
    Ok { restarts: u64 },
    Dense(DenseSet),
}

/// Greedy search for `Y` with `a_min <= |Y| <= a_max` and
/// `e(Y) >= threshold_coeff * |Y|`.
///
/// Restart 0 peels the whole view; later restarts peel a random subset of
/// random size in `a_max..=|V|`. Peeling repeatedly drops a minimum-degree
/// vertex (lowest index on ties) and tests every intermediate size in range.
pub fn small_set_density_check(
    view: &SubgraphView<'_>,
    a_min: usize,
    a_max: usize,
    threshold_coeff: f64,
    trials: u64,
    seed: u64,
) -> Result<DensityCheck> {
    let verts: Vec<Vertex> = view.vertices().collect();
    if a_min == 0 || a_min > a_max || a_max > verts.len() {
        return Err(invalid(format!(
            "need 1 <= a_min <= a_max <= {}, got a_min = {a_min}, a_max = {a_max}",
            verts.len()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let restarts = trials.max(1);
    for r in 0..restarts {
        let members: Vec<usize> = if r == 0 {
            (0..verts.len()).collect()
        } else {
            let size = rng.random_range(a_max..=verts.len());
            let mut idx = sample(&mut rng, verts.len(), size).into_vec();
            idx.sort_unstable();
            idx
        };
        if let Some(found) = peel(view, &verts, &members, a_min, a_max, threshold_coeff) {
            return Ok(DensityCheck::Dense(found));
        }
    }
    Ok(DensityCheck::Ok { restarts })
}

fn peel(
    view: &SubgraphView<'_>,
    verts: &[Vertex],
    members: &[usize],
    a_min: usize,
    a_max: usize,
    coeff: f64,
) -> Option<DenseSet> {
    let n = view.n();
    let mut alive = VertexSet::from_vertices(n, members.iter().map(|&i| verts[i]));
    let mut live: Vec<Vertex> = alive.to_vec();
    let mut degree: Vec<usize> = live
        .iter()
        .map(|&v| view.neighbors(v).filter(|u| alive.contains(*u)).count())
        .collect();
    let mut edges: usize = degree.iter().sum::<usize>() / 2;

    loop {
        let size = live.len();
        if size < a_min {
            return None;
        }
        if size <= a_max && edges as f64 >= coeff * size as f64 {
            return Some(DenseSet {
                y: alive.clone(),
                edges,
            });
        }
        let (pos, _) = degree
            .iter()
            .enumerate()
            .min_by_key(|&(i, d)| (*d, live[i]))
            .expect("size >= a_min >= 1");
        let v = live.remove(pos);
        let dv = degree.remove(pos);
        alive.remove(v);
        edges -= dv;
        for (i, u) in live.iter().enumerate() {
            if view.has_edge(v, *u) {
                degree[i] -= 1;
            }
        }
    }
}

/// `ln C(x, y)` via log-gamma; `-inf` when `y > x`.
pub fn ln_binomial(x: f64, y: f64) -> f64 {
    if y < 0.0 || y > x {
        return f64::NEG_INFINITY;
    }
    libm::lgamma(x + 1.0) - libm::lgamma(y + 1.0) - libm::lgamma(x - y + 1.0)
}

/// Natural log of
/// `sum_{b=1}^{a-1} C(n, b) C(n, a-b) C((a-b) b, k) p^k`,
/// the first-moment bound on the probability that some set with `b` Left
/// and `a - b` Right vertices spans at least `k` edges of `G(n, n, p)`.
/// Terms with `b > n`, `a - b > n` or `(a - b) b < k` vanish; returns `-inf`
/// if all of them do.
pub fn union_bound_for_edges(n: usize, a: usize, k: usize, p: f64) -> Result<f64> {
    if a == 0 || a > 2 * n {
        return Err(invalid(format!("a must lie in [1, 2n], got {a}")));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(invalid(format!("p must lie in (0, 1], got {p}")));
    }
    let ln_p = p.ln();
    let terms: Vec<f64> = (1..a)
        .filter(|&b| b <= n && a - b <= n && (a - b) * b >= k)
        .map(|b| {
            let pairs = ((a - b) * b) as f64;
            ln_binomial(n as f64, b as f64)
                + ln_binomial(n as f64, (a - b) as f64)
                + ln_binomial(pairs, k as f64)
                + k as f64 * ln_p
        })
        .collect();
    Ok(log_sum_exp(&terms))
}

fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + terms.iter().map(|t| (t - max).exp()).sum::<f64>().ln()
}

/// Number of edges a dense `a`-set must span: `ceil(a * eps' * n * p / 6)`.
pub fn dense_set_edge_threshold(n: usize, a: usize, eps_prime: f64, p: f64) -> usize {
    crate::ceil_tol(a as f64 * eps_prime * n as f64 * p / 6.0)
}

/// [`union_bound_for_edges`] at `k = ceil(a eps' n p / 6)`.
pub fn eval_density_union_bound(n: usize, a: usize, eps_prime: f64, p: f64) -> Result<f64> {
    if !(eps_prime > 0.0 && eps_prime < 1.0) {
        return Err(invalid(format!("eps' must lie in (0, 1), got {eps_prime}")));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(invalid(format!("p must lie in (0, 1], got {p}")));
    }
    union_bound_for_edges(n, a, dense_set_edge_threshold(n, a, eps_prime, p), p)
}
