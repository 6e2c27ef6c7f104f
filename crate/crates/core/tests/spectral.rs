mod common;

use graph_boundary::generators::{connected_graphs_up_to, cycle, grid, path, random_connected};
use graph_boundary::spectral::{
    dirichlet_laplacian, dirichlet_laplacian_via_subgraph, faber_krahn_report, hotspots_report,
    neumann_second_eigenpair, rayleigh_quotient, smallest_dirichlet_eigenpair, HotspotsOverall,
};
use graph_boundary::{all_pairs_distances, boundary_set, Error};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{grounded_laplacian_rows, jacobi_eigenvalues};

#[test]
fn dirichlet_eigenvalue_matches_jacobi() {
    for g in connected_graphs_up_to(7).into_iter().filter(|g| g.n() >= 2) {
        let d = all_pairs_distances(&g);
        let b = boundary_set(&g, &d);
        if b.len() == g.n() {
            continue;
        }
        let members: Vec<usize> = b.members().collect();
        let pair = smallest_dirichlet_eigenpair(&g, &members).unwrap();
        let oracle = jacobi_eigenvalues(grounded_laplacian_rows(&g, &b.mask()))[0];
        assert!((pair.value - oracle).abs() < 1e-9);
        assert!(pair.residual < 1e-8);
        assert!(pair.vector.iter().all(|&x| x >= 0.0));
    }
}

#[test]
fn both_dirichlet_constructions_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..30 {
        let g = random_connected(20, 0.1, &mut rng);
        let members: Vec<usize> = boundary_set(&g, &all_pairs_distances(&g)).members().collect();
        if members.len() == g.n() {
            continue;
        }
        let deleted = dirichlet_laplacian(&g, &members).unwrap().to_dense();
        let rebuilt = dirichlet_laplacian_via_subgraph(&g, &members).unwrap();
        assert_eq!(deleted, rebuilt);
    }
}

#[test]
fn neumann_spectrum_of_cycles() {
    for n in [5usize, 6, 9, 12] {
        let s = neumann_second_eigenpair(&cycle(n)).unwrap();
        let expected = 2.0 - 2.0 * (2.0 * std::f64::consts::PI / n as f64).cos();
        assert!((s.pair.value - expected).abs() < 1e-10);
        assert_eq!(s.multiplicity, 2);
    }
    let s = neumann_second_eigenpair(&path(8)).unwrap();
    let oracle = jacobi_eigenvalues(grounded_laplacian_rows(&path(8), &[false; 8]))[1];
    assert!((s.pair.value - oracle).abs() < 1e-10);
    assert_eq!(neumann_second_eigenpair(&path(1)).unwrap_err(), Error::DegenerateGraph);
}

#[test]
fn hot_spots_hold_on_grids_and_paths() {
    for g in [grid(4, 7), grid(6, 6), path(15), cycle(10)] {
        let b = boundary_set(&g, &all_pairs_distances(&g));
        assert_ne!(hotspots_report(&g, &b).unwrap().overall, HotspotsOverall::Violated);
    }
}

#[test]
fn faber_krahn_on_paths() {
    for n in 3usize..20 {
        let g = path(n);
        let d = all_pairs_distances(&g);
        let r = faber_krahn_report(&g, &d, &boundary_set(&g, &d)).unwrap();
        let expected = 2.0 - 2.0 * (std::f64::consts::PI / (n - 1) as f64).cos();
        assert!((r.lambda1.unwrap() - expected).abs() < 1e-10);
        assert!(r.holds);
    }
}

proptest! {
    #[test]
    fn rayleigh_quotients_dominate_lambda1(n in 4usize..30, p in 0.0f64..0.3, seed in any::<u64>(), scale in prop::collection::vec(-1.0f64..1.0, 30)) {
        let g = random_connected(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let b = boundary_set(&g, &all_pairs_distances(&g));
        prop_assume!(b.len() < g.n());
        let members: Vec<usize> = b.members().collect();
        let lambda = smallest_dirichlet_eigenpair(&g, &members).unwrap().value;
        let f: Vec<f64> = (0..n).map(|v| if b.contains(v) { 0.0 } else { scale[v] }).collect();
        prop_assume!(f.iter().any(|&x| x != 0.0));
        prop_assert!(rayleigh_quotient(&g, &f).unwrap() >= lambda - 1e-9);
    }
}
