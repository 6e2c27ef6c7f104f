// Where the second Laplacian eigenvector peaks, and how often it peaks off
// the boundary across all small connected graphs.

use graph_boundary::generators::{connected_graphs_up_to, grid};
use graph_boundary::spectral::{hotspots_ratio_check, hotspots_report, HotspotsOverall};
use graph_boundary::{all_pairs_distances, boundary_set};

fn main() {
    let g = grid(4, 6);
    let d = all_pairs_distances(&g);
    let b = boundary_set(&g, &d);
    let r = hotspots_report(&g, &b).unwrap();
    println!("grid(4, 6): lambda2 {:.5}, multiplicity {}, {}", r.lambda2, r.multiplicity, r.overall);
    let ratio = hotspots_ratio_check(&g, &d, &b).unwrap();
    println!("  interior/boundary ratio {:?} <= {:?}", ratio.ratio, ratio.bound);

    let mut counts = [0usize; 3];
    for g in connected_graphs_up_to(7).into_iter().filter(|g| g.n() >= 2) {
        let b = boundary_set(&g, &all_pairs_distances(&g));
        match hotspots_report(&g, &b).unwrap().overall {
            HotspotsOverall::Holds => counts[0] += 1,
            HotspotsOverall::Violated => counts[1] += 1,
            HotspotsOverall::Degenerate => counts[2] += 1,
        }
    }
    println!(
        "connected graphs on 2..7 vertices: {} hold, {} violated, {} degenerate",
        counts[0], counts[1], counts[2]
    );
}
