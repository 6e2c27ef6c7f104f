//! Graphviz output with boundary vertices drawn in red.

use std::fmt::Write as _;
use std::path::Path;

use crate::boundary::BoundarySet;
use crate::error::Result;
use crate::graph::Graph;

pub fn to_dot(g: &Graph, boundary: &BoundarySet) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let label = g.label(v).replace('"', "\\\"");
        if boundary.contains(v) {
            writeln!(out, "  {v} [label=\"{label}\", color=red, style=filled, fillcolor=red];").unwrap();
        } else {
            writeln!(out, "  {v} [label=\"{label}\"];").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn write_dot(g: &Graph, boundary: &BoundarySet, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_dot(g, boundary))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::boundary_set;
    use crate::generators::{complete, grid, path};
    use crate::graph::all_pairs_distances;

    fn red_count(g: &Graph) -> usize {
        let b = boundary_set(g, &all_pairs_distances(g));
        to_dot(g, &b).matches(", color=red").count()
    }

    #[test]
    fn boundary_is_red() {
        let g = path(3);
        let b = boundary_set(&g, &all_pairs_distances(&g));
        let dot = to_dot(&g, &b);
        assert!(dot.contains("  0 [label=\"0\", color=red"));
        assert!(dot.contains("  1 [label=\"1\"];"));
        assert!(dot.contains("  2 [label=\"2\", color=red"));
        assert_eq!(red_count(&complete(4)), 4);
        assert_eq!(red_count(&grid(3, 3)), 8);
    }

    #[test]
    fn writes_file() {
        let g = path(3);
        let b = boundary_set(&g, &all_pairs_distances(&g));
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("p3.dot");
        write_dot(&g, &b, &p).unwrap();
        assert_eq!(std::fs::read_to_string(p).unwrap(), to_dot(&g, &b));
    }
}
