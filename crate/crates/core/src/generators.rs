//! Built-in graph families and exhaustive enumeration of small connected graphs.

use std::collections::BTreeSet;

use rand::Rng;

use crate::graph::{build_graph, Graph};

fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
    build_graph(n, edges).expect("generator produced an invalid graph")
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    from_edges(n, &edges)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    from_edges(n, &edges)
}

/// `rows x cols` grid; vertex `(r, c)` has id `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    from_edges(rows * cols, &edges)
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    from_edges(n, &edges)
}

/// Star `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    from_edges(leaves + 1, &edges)
}

/// Complete binary tree with `depth` levels below the root (root is vertex 0, heap order).
pub fn binary_tree(depth: u32) -> Graph {
    let n = (1usize << (depth + 1)) - 1;
    let edges: Vec<_> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    from_edges(n, &edges)
}

/// Uniform random labelled tree via a Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1);
    if n <= 2 {
        return path(n);
    }
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &p in &prufer {
        degree[p] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &p in &prufer {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, p));
        degree[p] -= 1;
        if degree[p] == 1 {
            leaves.insert(p);
        }
    }
    let mut rest = leaves.into_iter();
    let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((u, v));
    from_edges(n, &edges)
}

/// Random spanning tree plus every remaining pair independently with probability `p`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges: Vec<_> = tree.edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    from_edges(n, &edges)
}

/// Largest vertex count [`connected_graphs`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// All connected graphs on `n` vertices up to isomorphism, in canonical-code order.
///
/// Graphs are grown one vertex at a time from the connected graphs on `n - 1`
/// vertices (every connected graph has a non-cut vertex) and deduplicated by a
/// canonical code from individualization-refinement.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        (1..=MAX_ENUMERATION_ORDER).contains(&n),
        "enumeration supports 1..={MAX_ENUMERATION_ORDER} vertices"
    );
    let mut level: Vec<Vec<u16>> = vec![vec![0]];
    for k in 2..=n {
        let mut codes = BTreeSet::new();
        for parent in &level {
            for mask in 1u16..(1 << (k - 1)) {
                let mut adj = parent.clone();
                adj.push(mask);
                for (u, a) in adj.iter_mut().enumerate().take(k - 1) {
                    if mask & (1 << u) != 0 {
                        *a |= 1 << (k - 1);
                    }
                }
                codes.insert(canonical_code(&adj));
            }
        }
        level = codes.into_iter().map(|c| decode(c, k)).collect();
    }
    level
        .into_iter()
        .map(|adj| {
            let edges: Vec<_> = (0..n)
                .flat_map(|u| {
                    let a = adj[u];
                    (u + 1..n).filter(move |&v| a & (1 << v) != 0).map(move |v| (u, v))
                })
                .collect();
            from_edges(n, &edges)
        })
        .collect()
}

/// All connected graphs with `1..=max_n` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

fn code_of(adj: &[u16], perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut code = 0u64;
    for j in 1..n {
        let row = adj[perm[j]];
        for &pi in &perm[..j] {
            code = (code << 1) | u64::from(row & (1 << pi) != 0);
        }
    }
    code
}

fn decode(code: u64, n: usize) -> Vec<u16> {
    let bits = n * (n - 1) / 2;
    let mut adj = vec![0u16; n];
    let mut k = bits;
    for j in 1..n {
        for i in 0..j {
            k -= 1;
            if code & (1 << k) != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn refine(adj: &[u16], cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u16> = cells
            .iter()
            .map(|c| c.iter().fold(0u16, |m, &v| m | (1 << v)))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            changed |= keyed.first().map(|k| &k.0) != keyed.last().map(|k| &k.0);
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn search(adj: &[u16], mut cells: Vec<Vec<usize>>, best: &mut u64) {
    refine(adj, &mut cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            *best = (*best).min(code_of(adj, &perm));
        }
        Some(idx) => {
            for &v in &cells[idx] {
                let mut child = Vec::with_capacity(cells.len() + 1);
                child.extend_from_slice(&cells[..idx]);
                child.push(vec![v]);
                child.push(cells[idx].iter().copied().filter(|&u| u != v).collect());
                child.extend_from_slice(&cells[idx + 1..]);
                search(adj, child, best);
            }
        }
    }
}

/// Isomorphism-invariant code of a graph given as neighbor bitmasks.
pub(crate) fn canonical_code(adj: &[u16]) -> u64 {
    let mut best = u64::MAX;
    search(adj, vec![(0..adj.len()).collect()], &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349
        let expected = [1, 1, 2, 6, 21, 112, 853];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(connected_graphs(i + 1).len(), count, "n = {}", i + 1);
        }
    }

    #[test]
    fn canonical_code_ignores_labels() {
        // P4 labelled two ways
        let a = [0b0010u16, 0b0101, 0b1010, 0b0100];
        let b = [0b0100u16, 0b1000, 0b1001, 0b0010];
        assert_eq!(canonical_code(&a), canonical_code(&b));
        let star = [0b1110u16, 0b0001, 0b0001, 0b0001];
        assert_ne!(canonical_code(&a), canonical_code(&star));
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..40 {
            let t = random_tree(n, &mut rng);
            assert_eq!(t.n(), n);
            assert!(t.is_tree());
        }
    }

    #[test]
    fn family_shapes() {
        assert_eq!(cycle(6).edge_count(), 6);
        assert_eq!(grid(3, 4).edge_count(), 17);
        assert_eq!(binary_tree(3).n(), 15);
        assert_eq!(star(4).degree(0), 4);
    }
}
