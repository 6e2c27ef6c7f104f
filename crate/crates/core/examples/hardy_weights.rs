// Hardy weights `deg / phi` and the spectral certificate that the Hardy
// inequality holds for every function vanishing on the boundary.

use graph_boundary::generators::grid;
use graph_boundary::hardy::{hardy_certificate, hardy_check};
use graph_boundary::walks::hitting_potential;
use graph_boundary::{all_pairs_distances, boundary_set};

fn main() {
    let g = grid(5, 5);
    let b = boundary_set(&g, &all_pairs_distances(&g));
    let members: Vec<usize> = b.members().collect();
    let hp = hitting_potential(&g, &members).unwrap();
    for v in b.interior() {
        println!("vertex {v:>2}: phi {:.4}, weight {:.4}", hp.phi[v], g.degree(v) as f64 / hp.phi[v]);
    }
    println!("certificate (smallest eigenvalue): {:.3e}", hardy_certificate(&g, &b, &hp).unwrap());
    let bump: Vec<f64> = (0..g.n()).map(|v| if b.contains(v) { 0.0 } else { 1.0 }).collect();
    let r = hardy_check(&g, &b, &hp, &bump).unwrap();
    println!("indicator of the interior: energy {:.4} >= weighted mass {:.4}", r.lhs, r.rhs);
}
