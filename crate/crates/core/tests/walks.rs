mod common;

use graph_boundary::generators::{connected_graphs_up_to, grid, path, random_connected};
use graph_boundary::walks::{
    estimate_exit_time, hitting_potential, interval_mean_exact, interval_tail_series, simulate_exit_time,
    walk_distribution, RngSeed,
};
use graph_boundary::{all_pairs_distances, boundary_set, Error};
use num_rational::Ratio;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{grounded_solve_exact, to_f64, walk_by_matrix_power};

#[test]
fn potential_matches_exact_rational_solve() {
    for g in connected_graphs_up_to(6).into_iter().filter(|g| g.n() >= 2) {
        let d = all_pairs_distances(&g);
        let b = boundary_set(&g, &d);
        let members: Vec<usize> = b.members().collect();
        let phi = hitting_potential(&g, &members).unwrap().phi;
        let exact = grounded_solve_exact(&g, &b.mask(), |v| g.degree(v) as i128);
        for v in 0..g.n() {
            assert!((phi[v] - to_f64(&exact[v])).abs() < 1e-10 * to_f64(&exact[v]).max(1.0));
        }
    }
}

#[test]
fn potential_on_paths_is_quadratic() {
    for n in [5usize, 21, 40] {
        let phi = hitting_potential(&path(n), &[0, n - 1]).unwrap().phi;
        for (x, p) in phi.iter().enumerate() {
            let expected = (x * (n - 1 - x)) as f64;
            assert!((p - expected).abs() < 1e-8 * expected.max(1.0), "n={n}, x={x}");
        }
    }
}

#[test]
fn potential_errors() {
    assert_eq!(hitting_potential(&path(3), &[]).unwrap_err(), Error::EmptyAbsorbingSet);
}

#[test]
fn distribution_matches_matrix_power() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let g = random_connected(15, 0.15, &mut rng);
        let d = all_pairs_distances(&g);
        let b = boundary_set(&g, &d);
        let members: Vec<usize> = b.members().collect();
        let v0 = b.interior().first().copied().unwrap_or(0);
        for k in [0, 1, 3, 17] {
            let mine = walk_distribution(&g, &members, v0, k).unwrap();
            let oracle = walk_by_matrix_power(&g, &b.mask(), v0, k);
            for v in 0..g.n() {
                assert!((mine.mass[v] - oracle[v]).abs() < 1e-12);
            }
            assert!((mine.total() - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn simulation_agrees_with_potential() {
    let g = grid(6, 6);
    let members: Vec<usize> = boundary_set(&g, &all_pairs_distances(&g)).members().collect();
    let exact = hitting_potential(&g, &members).unwrap().phi[14];
    let est = estimate_exit_time(&g, &members, 14, 20_000, 3).unwrap();
    assert!((est.mean - exact).abs() < 4.0 * est.stderr);
    let again = estimate_exit_time(&g, &members, 14, 20_000, 3).unwrap();
    assert_eq!(est, again);
    assert_eq!(simulate_exit_time(&g, &members, 0, RngSeed::new(1, 0)).unwrap(), 0);
}

/// `P(T >= k)` from the sine eigenbasis of the killed walk on the interval.
fn interval_tail_spectral(m: u32, x0: i64, k: usize) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let len = 2.0 * f64::from(m);
    let a = (x0 + i64::from(m)) as f64;
    let mut total = 0.0;
    for j in 1..(2 * m) {
        let theta = f64::from(j) * std::f64::consts::PI / len;
        let weight: f64 = (1..(2 * m)).map(|i| (theta * f64::from(i)).sin()).sum();
        total += (2.0 / len) * (theta * a).sin() * weight * theta.cos().powi(k as i32 - 1);
    }
    total
}

#[test]
fn interval_tails_match_spectral_formula() {
    for m in 1u32..=8 {
        for x0 in -(i64::from(m) - 1)..i64::from(m) {
            let series = interval_tail_series(m, x0, 300);
            for (k, &p) in series.iter().enumerate() {
                assert!((p - interval_tail_spectral(m, x0, k)).abs() < 1e-12, "m={m} x0={x0} k={k}");
            }
        }
    }
}

#[test]
fn interval_means_are_exact() {
    for m in 1u32..=12 {
        for x0 in -i64::from(m)..=i64::from(m) {
            let expected = i128::from(m * m) - i128::from(x0 * x0);
            assert_eq!(interval_mean_exact(m, x0), Ratio::from_integer(expected));
        }
    }
}

proptest! {
    #[test]
    fn potential_solves_the_mean_value_equation(n in 3usize..40, p in 0.0f64..0.4, seed in any::<u64>()) {
        let g = random_connected(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let members: Vec<usize> = boundary_set(&g, &all_pairs_distances(&g)).members().collect();
        let hp = hitting_potential(&g, &members).unwrap();
        prop_assert!(hp.relative_residual(&g) < 1e-9);
        prop_assert!(hp.phi.iter().all(|&x| x >= 0.0));
    }
}
