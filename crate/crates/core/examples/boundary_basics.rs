// Boundary vertices of a few small graphs, with the witness that certifies each.

use graph_boundary::boundary::isoperimetric_report;
use graph_boundary::generators::{binary_tree, cycle, grid, path};
use graph_boundary::{all_pairs_distances, boundary_set};

fn main() {
    for (name, g) in [
        ("path(6)", path(6)),
        ("cycle(7)", cycle(7)),
        ("grid(4, 5)", grid(4, 5)),
        ("binary_tree(3)", binary_tree(3)),
    ] {
        let d = all_pairs_distances(&g);
        let b = boundary_set(&g, &d);
        let iso = isoperimetric_report(&g, &d, &b).unwrap();
        println!("{name}: {} of {} vertices on the boundary", b.len(), g.n());
        for v in b.members().take(4) {
            println!("  {v} witnessed by {}", b.witness(v).unwrap());
        }
        println!("  isoperimetric: {} >= {} ({})", iso.lhs, iso.rhs, iso.holds);
    }
}
