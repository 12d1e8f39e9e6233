mod common;

use bipcycles::expansion::{eval_density_union_bound, union_bound_for_edges};
use bipcycles::harness::{brute_force_cycle_oracle, cycle_length_counts};
use bipcycles::random_model::{chernoff_tail, max_degree_bound, sample_gnnp, ModelParams};
use bipcycles::{BipartiteGraph, Vertex, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exact binomial coefficient as f64 via a multiplicative loop.
fn binom(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn union_bound_direct(n: u64, a: u64, k: u64, p: f64) -> f64 {
    (1..a)
        .filter(|&b| b <= n && a - b <= n)
        .map(|b| binom(n, b) * binom(n, a - b) * binom((a - b) * b, k) * p.powi(k as i32))
        .sum()
}

#[test]
fn union_bound_matches_direct_summation() {
    for &(n, a, k, p) in &[
        (4u64, 4u64, 4u64, 0.3),
        (10, 6, 5, 0.2),
        (20, 8, 10, 0.5),
        (50, 12, 20, 0.1),
        (30, 2, 1, 0.9),
    ] {
        let direct = union_bound_direct(n, a, k, p);
        let ln = union_bound_for_edges(n as usize, a as usize, k as usize, p).unwrap();
        assert!(
            (ln - direct.ln()).abs() < 1e-9 * direct.ln().abs().max(1.0),
            "n={n} a={a} k={k}: {ln} vs {}",
            direct.ln()
        );
    }
}

#[test]
fn union_bound_is_monotone_in_k() {
    // Each term C(m, k) p^k decreases once k + 1 > (m - k) p; the largest
    // m is 25 here, so from k = 4 on.
    let mut prev = f64::INFINITY;
    for k in 4..=25 {
        let v = union_bound_for_edges(40, 10, k, 0.15).unwrap();
        assert!(v <= prev + 1e-12, "k={k}");
        prev = v;
    }
    assert_eq!(
        union_bound_for_edges(40, 10, 26, 0.15).unwrap(),
        f64::NEG_INFINITY
    );
}

#[test]
fn union_bound_is_trivial_at_moderate_scale() {
    // k = ceil(10 * 0.5 * 100 * 0.2 / 6) = 17; the bound exceeds 1.
    let ln = eval_density_union_bound(100, 10, 0.5, 0.2).unwrap();
    assert!(ln > 0.0, "{ln}");
}

/// Does some 2+2 vertex set of G(4, 4, p) span all four possible edges?
fn has_square(g: &BipartiteGraph) -> bool {
    bipcycles::harness::cycle_length_counts(g)
        .unwrap()
        .contains_key(&4)
}

#[test]
fn union_bound_dominates_monte_carlo() {
    // n = 4, a = 4, k = 4: only b = 2 contributes, 36 p^4.
    let p = 0.3;
    let bound = union_bound_for_edges(4, 4, 4, p).unwrap().exp();
    assert!((bound - 36.0 * p.powi(4)).abs() < 1e-12);

    let trials = 100_000;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut hits = 0u32;
    for _ in 0..trials {
        let g = common::random_graph(4, p, rng.random());
        if has_square(&g) {
            hits += 1;
        }
    }
    let freq = hits as f64 / trials as f64;
    let sigma = (freq * (1.0 - freq) / trials as f64).sqrt();
    assert!(
        freq - 3.0 * sigma <= bound,
        "empirical {freq} vs bound {bound}"
    );
}

#[test]
fn union_bound_term_is_an_expectation() {
    // For one fixed pair of 2-sets the term C(4, 4) p^4 is exactly the
    // probability that all four pairs are edges.
    let p = 0.4;
    let trials = 200_000;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let hits = (0..trials)
        .filter(|_| (0..4).all(|_| rng.random_bool(p)))
        .count();
    let freq = hits as f64 / trials as f64;
    let sigma = (p.powi(4) * (1.0 - p.powi(4)) / trials as f64).sqrt();
    assert!((freq - p.powi(4)).abs() < 4.0 * sigma);
}

#[test]
fn chernoff_closed_form() {
    assert!((chernoff_tail(1.0, 3.0).unwrap() - 2.0 * (-1.0f64).exp()).abs() < 1e-12);
    assert!((chernoff_tail(1.0, 3.0).unwrap() - 0.735759).abs() < 1e-6);
    let v = chernoff_tail(0.5, 100.0).unwrap();
    assert!((v - 2.0 * (-25.0f64 / 3.0).exp()).abs() < 1e-15);
    assert!((v - 4.80e-4).abs() < 1e-6);
    assert!(chernoff_tail(0.1, 10.0).unwrap() > chernoff_tail(0.2, 10.0).unwrap());
}

#[test]
fn max_degree_bound_arithmetic() {
    let params = ModelParams::with_p(900, 0.0858, 0).unwrap();
    assert_eq!(max_degree_bound(&params, 0.4).unwrap(), 109);
    let params = ModelParams::with_p(100, 0.0, 0).unwrap();
    assert_eq!(max_degree_bound(&params, 0.4).unwrap(), 0);
    let params = ModelParams::with_p(50, 1.0, 0).unwrap();
    assert!(max_degree_bound(&params, 0.4).unwrap() >= 50);
}

/// `P(Bin(n, p) <= b)` by direct summation of the probability mass.
fn binomial_cdf(n: u64, p: f64, b: u64) -> f64 {
    (0..=b.min(n))
        .map(|k| binom(n, k) * p.powi(k as i32) * (1.0 - p).powf((n - k) as f64))
        .sum()
}

/// Fraction of 100 seeds at n = 500, C = 5 with max degree within
/// `max_degree_bound(eps)`, and the prediction `q^(2n)` from the exact
/// binomial tail (degrees on one side are independent).
fn degree_rate(eps: f64) -> (f64, f64) {
    let mut within = 0;
    let mut predicted = 0.0;
    for seed in 0..100 {
        let params = ModelParams::with_c(500, 5.0, seed).unwrap();
        let bound = max_degree_bound(&params, eps).unwrap();
        predicted = binomial_cdf(500, params.p, bound as u64).powi(1000);
        let g = sample_gnnp(&params).unwrap();
        if g.max_degree() <= bound {
            within += 1;
        }
    }
    (within as f64 / 100.0, predicted)
}

#[test]
fn degree_concentration_matches_binomial_tail() {
    // At eps = 0.4 the bound 56 sits 2.7 standard deviations above the mean
    // degree 39.7, so among 1000 vertices some exceed it in about 98% of
    // graphs. The measured rate must agree with the exact prediction.
    for eps in [0.4, 0.5, 0.7] {
        let (rate, predicted) = degree_rate(eps);
        let sigma = (predicted * (1.0 - predicted) / 100.0).sqrt().max(0.01);
        assert!(
            (rate - predicted).abs() <= 3.0 * sigma + 0.02,
            "eps={eps}: {rate} vs {predicted}"
        );
        if eps == 0.7 {
            assert!(rate >= 0.95, "{rate}");
        }
    }
}

#[test]
fn k33_cycle_counts() {
    // Squares: C(3,2)^2 choices of two Left and two Right vertices.
    // Hexagons: 3! * 3! / (2 * 3) Hamilton cycles.
    let g = BipartiteGraph::complete(3).unwrap();
    let counts = cycle_length_counts(&g).unwrap();
    assert_eq!(counts.get(&4), Some(&9));
    assert_eq!(counts.get(&6), Some(&6));
    assert_eq!(
        brute_force_cycle_oracle(&g)
            .unwrap()
            .into_iter()
            .collect::<Vec<_>>(),
        vec![4, 6]
    );
}

#[test]
fn octagon_has_only_its_own_length() {
    let g = BipartiteGraph::from_edges(4, (0..4).flat_map(|i| [(i, i), ((i + 1) % 4, i)])).unwrap();
    assert_eq!(
        brute_force_cycle_oracle(&g)
            .unwrap()
            .into_iter()
            .collect::<Vec<_>>(),
        vec![8]
    );
}

#[test]
fn expansion_of_complete_bipartite_by_hand() {
    // In K_{4,4}, X with l Left and r Right vertices has N(X) \ X of size
    // (4 - r if l > 0) + (4 - l if r > 0).
    let g = BipartiteGraph::complete(4).unwrap();
    let view = g.view();
    for l in 0..=4usize {
        for r in 0..=4usize {
            if l + r == 0 {
                continue;
            }
            let x = VertexSet::from_vertices(
                4,
                (0..l).map(Vertex::left).chain((0..r).map(Vertex::right)),
            );
            let expected = if l > 0 { 4 - r } else { 0 } + if r > 0 { 4 - l } else { 0 };
            assert_eq!(view.external_neighborhood(&x).len(), expected);
        }
    }
}
