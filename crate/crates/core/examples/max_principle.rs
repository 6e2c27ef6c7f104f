// Sharp maximum-principle constants from torsion functions, against the
// universal `2 (maxdeg / mindeg) diam^2` coefficient.

use graph_boundary::abp::{abp_sharp_constant, abp_universal_coefficient, torsion_function};
use graph_boundary::generators::{binary_tree, grid, path};
use graph_boundary::{all_pairs_distances, boundary_set};

fn main() {
    for (name, g) in [("path(11)", path(11)), ("grid(7, 7)", grid(7, 7))] {
        let d = all_pairs_distances(&g);
        let members: Vec<usize> = boundary_set(&g, &d).members().collect();
        println!(
            "{name}: sharp {:.4}, universal {:.1}",
            abp_sharp_constant(&g, &members).unwrap(),
            abp_universal_coefficient(&g, &d)
        );
    }
    println!("binary trees with X = root:");
    for depth in 1..=7 {
        let t = torsion_function(&binary_tree(depth), &[0]).unwrap();
        println!("  depth {depth}: C = {}", t.max());
    }
}
