// Measures maximizing `sum f(d(v, w)) mu(v) mu(w)` for convex increasing
// kernels put no mass on interior vertices.

use graph_boundary::energy::{energy, improvement_move, maximize_energy, Kernel, MaximizeOptions, VertexMeasure};
use graph_boundary::generators::{grid, path};
use graph_boundary::{all_pairs_distances, boundary_set};

fn main() {
    let g = grid(3, 3);
    let d = all_pairs_distances(&g);
    let b = boundary_set(&g, &d);
    let k = Kernel::power(2.0, d.diameter());
    let center = VertexMeasure::point(9, 4);
    let moved = improvement_move(&g, &b, &k, &center, 4).unwrap();
    println!(
        "grid(3, 3): moving the center atom raises the energy {} -> {}",
        energy(&d, &k, &center).unwrap(),
        energy(&d, &k, &moved).unwrap()
    );

    for (name, g) in [("path(5)", path(5)), ("grid(4, 4)", grid(4, 4))] {
        let d = all_pairs_distances(&g);
        let b = boundary_set(&g, &d);
        for alpha in [1.0, 1.5, 2.0] {
            let k = Kernel::power(alpha, d.diameter());
            let m = maximize_energy(&g, &d, &b, &k, MaximizeOptions::default()).unwrap();
            let support: Vec<usize> = (0..g.n()).filter(|&v| m.mu_star.mass[v] > 1e-9).collect();
            println!(
                "{name}, d^{alpha}: energy {:.6}, interior mass {:.1e}, support {support:?}",
                m.energy, m.interior_mass
            );
        }
    }
}
