//! Seeded sampling of `G(n, n, p)` and the Chernoff tail used to set
//! statistical tolerances.
//!
//! # Reproducibility
//!
//! The generator is ChaCha8 ([`rand_chacha::ChaCha8Rng`]) seeded with
//! `seed_from_u64(seed)`. Edges are decided in row-major order (Left index
//! outer, Right index inner), one `u64` draw per candidate edge: the edge is
//! present iff the draw is below `floor(p * 2^64)` (always present for
//! `p = 1`). The output is therefore a pure function of `(n, p, seed)` on
//! every platform.
//!
//! Independent streams for many trials come from [`derive_seed`], a
//! SplitMix64 mix of a master seed and a stream number.

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::BipartiteGraph;

/// Parameters of one `G(n, n, p)` draw.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    /// Set when `p` was derived as `c * n^(-2/3)`.
    pub c: Option<f64>,
}

/// `c * n^(-2/3)`.
pub fn p_from_c(n: usize, c: f64) -> f64 {
    c * (n as f64).powf(-2.0 / 3.0)
}

impl ModelParams {
    pub fn with_p(n: usize, p: f64, seed: u64) -> Result<Self> {
        let params = ModelParams {
            n,
            p,
            seed,
            c: None,
        };
        params.validate()?;
        Ok(params)
    }

    /// `p = c * n^(-2/3)`; fails if that exceeds 1.
    pub fn with_c(n: usize, c: f64, seed: u64) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(invalid(format!("C must be positive and finite, got {c}")));
        }
        let params = ModelParams {
            n,
            p: p_from_c(n, c),
            seed,
            c: Some(c),
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(invalid("n must be at least 1"));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(invalid(format!("p must lie in [0, 1], got {}", self.p)));
        }
        if let Some(c) = self.c {
            let expected = p_from_c(self.n, c);
            if (self.p - expected).abs() > 1e-12 * expected.abs().max(f64::MIN_POSITIVE) {
                return Err(invalid(format!(
                    "p = {} inconsistent with C = {c} (expected {expected})",
                    self.p
                )));
            }
        }
        Ok(())
    }

    /// Expected edge count `n^2 p`.
    pub fn expected_edges(&self) -> f64 {
        (self.n as f64).powi(2) * self.p
    }

    pub fn np(&self) -> f64 {
        self.n as f64 * self.p
    }
}

fn threshold(p: f64) -> Option<u64> {
    if p >= 1.0 {
        None
    } else {
        // p < 1 so the product is below 2^64.
        Some((p * 18_446_744_073_709_551_616.0) as u64)
    }
}

/// Draws `G(n, n, p)` with the row-major Bernoulli scheme described in the
/// module docs.
pub fn sample_gnnp(params: &ModelParams) -> Result<BipartiteGraph> {
    params.validate()?;
    let n = params.n;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let cut = threshold(params.p);
    let mut edges = Vec::with_capacity(params.expected_edges().ceil() as usize);
    for u in 0..n {
        for v in 0..n {
            let x = rng.next_u64();
            let keep = match cut {
                None => true,
                Some(t) => x < t,
            };
            if keep {
                edges.push((u, v));
            }
        }
    }
    BipartiteGraph::from_edges(n, edges)
}

/// Two-sided Chernoff bound `2 exp(-eps^2 mean / 3)` for a binomial variable
/// with the given mean, valid for `0 < eps <= 3/2`.
pub fn chernoff_tail(eps: f64, mean: f64) -> Result<f64> {
    if !(eps > 0.0 && eps <= 1.5) {
        return Err(invalid(format!("eps must lie in (0, 3/2], got {eps}")));
    }
    if !(mean > 0.0 && mean.is_finite()) {
        return Err(invalid(format!("mean must be positive, got {mean}")));
    }
    Ok(2.0 * (-eps * eps * mean / 3.0).exp())
}

/// `ceil((1 + eps) n p)`, the maximum degree a typical sample stays under.
pub fn max_degree_bound(params: &ModelParams, eps: f64) -> Result<usize> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(invalid(format!("eps must lie in (0, 1), got {eps}")));
    }
    Ok(crate::ceil_tol((1.0 + eps) * params.np()))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for stream `stream` under `master`:
/// `splitmix64(master ^ splitmix64(stream))`.
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    splitmix64(master ^ splitmix64(stream))
}
