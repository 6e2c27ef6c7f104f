// Lowest eigenvalue of the Laplacian with the boundary deleted, against
// `mindeg / (4 diam^2)`, and the decay of the interior mass of the walk.

use graph_boundary::generators::{grid, path};
use graph_boundary::graph::degree_extremes;
use graph_boundary::spectral::{faber_krahn_report, smallest_dirichlet_eigenpair};
use graph_boundary::walks::AbsorbedWalk;
use graph_boundary::{all_pairs_distances, boundary_set};

fn main() {
    for (name, g) in [("path(9)", path(9)), ("grid(6, 6)", grid(6, 6))] {
        let d = all_pairs_distances(&g);
        let b = boundary_set(&g, &d);
        let r = faber_krahn_report(&g, &d, &b).unwrap();
        println!("{name}: lambda1 = {:.6} >= {:.6}", r.lambda1.unwrap(), r.bound);

        let members: Vec<usize> = b.members().collect();
        let pair = smallest_dirichlet_eigenpair(&g, &members).unwrap();
        let v0 = (0..g.n()).fold(0, |m, v| if pair.vector[v] > pair.vector[m] { v } else { m });
        let (mindeg, _) = degree_extremes(&g);
        let rate = 1.0 - pair.value / mindeg as f64;
        let interior: Vec<bool> = b.mask().iter().map(|m| !m).collect();
        let mut walk = AbsorbedWalk::new(&g, &members, v0).unwrap();
        for k in 0..=20 {
            if k % 5 == 0 {
                let mass = walk.current().mass_on(&interior);
                println!("  step {k:>2}: interior mass {mass:.5} >= {:.5}", rate.powi(k));
            }
            walk.step();
        }
    }
}
