//! Simple connected undirected graphs and their shortest-path metric.

use std::borrow::Cow;
use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Default vertex count up to which [`all_pairs_distances`] stores the full table.
pub const DEFAULT_DISTANCE_CAP: usize = 5000;

/// Immutable simple connected undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

/// Validate and build a graph from an edge list.
///
/// Edges are unordered pairs; `(u, v)` and `(v, u)` count as the same edge.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut adjacency = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange(u, v, n));
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    for (u, nbrs) in adjacency.iter_mut().enumerate() {
        nbrs.sort_unstable();
        if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
            let (a, b) = (u.min(w[0]), u.max(w[0]));
            return Err(Error::DuplicateEdge(a, b));
        }
    }
    let dist = bfs_row(&adjacency, 0);
    if let Some(unreached) = dist.iter().position(|&d| d == u32::MAX) {
        return Err(Error::Disconnected { unreached });
    }
    Ok(Graph {
        adjacency,
        edge_count: edges.len(),
        labels: None,
    })
}

impl Graph {
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Original vertex labels when the graph was read from a labelled source.
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    /// Breadth-first distances from `source`.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        bfs_row(&self.adjacency, source)
    }

    /// True iff the graph is a path (including the single vertex and K₂).
    pub fn is_path(&self) -> bool {
        let n = self.n();
        if n == 1 {
            return true;
        }
        self.edge_count == n - 1 && self.adjacency.iter().all(|a| a.len() <= 2)
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.n()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        self.adjacency.iter().all(|a| a.len() == d)
    }
}

fn bfs_row(adjacency: &[Vec<usize>], source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adjacency.len()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for &v in &adjacency[u] {
            if dist[v] == u32::MAX {
                dist[v] = du + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

#[derive(Debug, Clone)]
enum DistanceStorage {
    Dense(Vec<u32>),
    // rows are recomputed by BFS when the table would be too large
    OnDemand(Vec<Vec<usize>>),
}

/// Exact all-pairs shortest-path distances.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    storage: DistanceStorage,
    diameter: u32,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn get(&self, v: usize, w: usize) -> u32 {
        match &self.storage {
            DistanceStorage::Dense(d) => d[v * self.n + w],
            DistanceStorage::OnDemand(adj) => bfs_row(adj, v)[w],
        }
    }

    /// Distances from `v` to every vertex.
    pub fn row(&self, v: usize) -> Cow<'_, [u32]> {
        match &self.storage {
            DistanceStorage::Dense(d) => Cow::Borrowed(&d[v * self.n..(v + 1) * self.n]),
            DistanceStorage::OnDemand(adj) => Cow::Owned(bfs_row(adj, v)),
        }
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.storage, DistanceStorage::Dense(_))
    }

    /// Eccentricity of `v`.
    pub fn eccentricity(&self, v: usize) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }
}

/// BFS from every vertex, storing the full table for graphs up to [`DEFAULT_DISTANCE_CAP`].
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    all_pairs_distances_with_cap(g, DEFAULT_DISTANCE_CAP)
}

pub fn all_pairs_distances_with_cap(g: &Graph, cap: usize) -> DistanceMatrix {
    let n = g.n();
    if n <= cap {
        let mut table = Vec::with_capacity(n * n);
        for v in 0..n {
            table.extend(g.bfs(v));
        }
        let diameter = table.iter().copied().max().unwrap_or(0);
        DistanceMatrix {
            n,
            storage: DistanceStorage::Dense(table),
            diameter,
        }
    } else {
        let diameter = (0..n)
            .map(|v| g.bfs(v).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        DistanceMatrix {
            n,
            storage: DistanceStorage::OnDemand(g.adjacency.clone()),
            diameter,
        }
    }
}

/// `(min degree, max degree)`; a single vertex reports `(0, 0)`.
pub fn degree_extremes(g: &Graph) -> (usize, usize) {
    let degs = g.adjacency.iter().map(Vec::len);
    let min = degs.clone().min().unwrap_or(0);
    let max = degs.max().unwrap_or(0);
    (min, max)
}
