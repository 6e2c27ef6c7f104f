// Expected exit times of the random walk absorbed on the boundary: exact
// potential, Monte-Carlo estimate, and the diameter-based bound.

use graph_boundary::generators::grid;
use graph_boundary::graph::degree_extremes;
use graph_boundary::walks::{estimate_exit_time, hitting_potential, interval_mean_exact};
use graph_boundary::{all_pairs_distances, boundary_set};

fn main() {
    let g = grid(8, 8);
    let d = all_pairs_distances(&g);
    let members: Vec<usize> = boundary_set(&g, &d).members().collect();
    let phi = hitting_potential(&g, &members).unwrap();
    let (_, maxdeg) = degree_extremes(&g);
    let diam = d.diameter() as f64;
    let start = 3 * 8 + 3;
    let est = estimate_exit_time(&g, &members, start, 50_000, 1).unwrap();
    println!("8x8 grid, start {start}");
    println!("  exact      {:.4}", phi.phi[start]);
    println!("  simulated  {:.4} +- {:.4}", est.mean, est.stderr);
    println!("  max {:.4} <= maxdeg * diam^2 = {}", phi.max(), maxdeg as f64 * diam * diam);

    for m in [2u32, 5, 10] {
        println!("interval [-{m}, {m}] from 0: mean exit time {}", interval_mean_exact(m, 0));
    }
}
