// Reading and writing graph6 and edge lists, and DOT output with the boundary in red.

use graph_boundary::io::{parse_edgelist, parse_graph6, to_dot, to_graph6};
use graph_boundary::{all_pairs_distances, boundary_set};

fn main() {
    let g = parse_graph6("DQc").unwrap();
    println!("DQc: {} vertices, edges {:?}", g.n(), g.edges().collect::<Vec<_>>());

    let h = parse_edgelist("# a small house\nroof left\nroof right\nleft right\nleft floor1\nright floor2\nfloor1 floor2\n").unwrap();
    println!("house as graph6: {}", to_graph6(&h));
    let b = boundary_set(&h, &all_pairs_distances(&h));
    print!("{}", to_dot(&h, &b));

    match parse_graph6("A?") {
        Ok(_) => unreachable!(),
        Err(e) => println!("A?: {e}"),
    }
}
