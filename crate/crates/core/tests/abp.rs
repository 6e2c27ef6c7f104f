mod common;

use graph_boundary::abp::{abp_check, abp_sharp_constant, abp_universal_coefficient, torsion_function};
use graph_boundary::generators::{binary_tree, connected_graphs, grid, random_connected};
use graph_boundary::spectral::apply_laplacian;
use graph_boundary::{all_pairs_distances, boundary_set};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{abp_constant_lp, grounded_solve_exact, to_f64};

#[test]
fn sharp_constant_matches_lp_for_arbitrary_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for g in connected_graphs(5).into_iter().chain(connected_graphs(6).into_iter().step_by(7)) {
        for _ in 0..3 {
            let x: Vec<bool> = (0..g.n()).map(|_| rand::Rng::gen_bool(&mut rng, 0.35)).collect();
            let count = x.iter().filter(|&&b| b).count();
            if count == 0 || count == g.n() {
                continue;
            }
            let xs: Vec<usize> = (0..g.n()).filter(|&v| x[v]).collect();
            let c = abp_sharp_constant(&g, &xs).unwrap();
            assert!((c - abp_constant_lp(&g, &x)).abs() < 1e-6);
        }
    }
}

#[test]
fn torsion_matches_exact_solve() {
    let g = grid(4, 5);
    let b = boundary_set(&g, &all_pairs_distances(&g));
    let members: Vec<usize> = b.members().collect();
    let t = torsion_function(&g, &members).unwrap();
    let exact = grounded_solve_exact(&g, &b.mask(), |_| 1);
    for v in 0..g.n() {
        assert!((t.u[v] - to_f64(&exact[v])).abs() < 1e-12);
    }
}

#[test]
fn binary_tree_constants_follow_the_closed_form() {
    for depth in 1u32..=8 {
        let c = abp_sharp_constant(&binary_tree(depth), &[0]).unwrap();
        let expected = f64::from((1u32 << (depth + 1)) - 2 - depth);
        assert!((c - expected).abs() < 1e-8 * expected, "depth {depth}: {c}");
    }
}

proptest! {
    #[test]
    fn estimate_holds_for_random_functions(n in 3usize..30, p in 0.0f64..0.3, seed in any::<u64>(), vals in prop::collection::vec(-3.0f64..3.0, 30)) {
        let g = random_connected(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let d = all_pairs_distances(&g);
        let b = boundary_set(&g, &d);
        prop_assume!(b.len() < g.n());
        let r = abp_check(&g, &d, &b, &vals[..n]).unwrap();
        prop_assert!(r.holds);
        prop_assert!(r.one_sided_rhs <= r.rhs);
        // the sharp constant already suffices
        let members: Vec<usize> = b.members().collect();
        let c = abp_sharp_constant(&g, &members).unwrap();
        prop_assert!(c <= abp_universal_coefficient(&g, &d) + 1e-9);
        let lf = apply_laplacian(&g, &vals[..n]).unwrap();
        let sup = b.interior().iter().map(|&v| lf[v].abs()).fold(0.0, f64::max);
        let bmax = members.iter().map(|&v| vals[v]).fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(r.lhs <= bmax + c * sup + 1e-9);
    }
}
