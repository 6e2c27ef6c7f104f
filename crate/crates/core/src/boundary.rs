//! The boundary ∂G of a graph.
//!
//! A vertex `v` is a boundary vertex when some other vertex `w` (the witness)
//! is strictly closer, on average, to the neighbors of `v` than to `v` itself:
//!
//! ```text
//! deg(v) * d(v, w) > sum over neighbors x of v of d(x, w)
//! ```
//!
//! Everything in this module is exact integer (or rational) arithmetic.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{degree_extremes, DistanceMatrix, Graph};

/// Boundary vertices, each with the first witness found in ascending vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySet {
    n: usize,
    witness: BTreeMap<usize, usize>,
}

impl BoundarySet {
    pub fn from_members(n: usize, witness: BTreeMap<usize, usize>) -> Self {
        BoundarySet { n, witness }
    }

    pub fn len(&self) -> usize {
        self.witness.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witness.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.witness.contains_key(&v)
    }

    pub fn witness(&self, v: usize) -> Option<usize> {
        self.witness.get(&v).copied()
    }

    /// Members in ascending order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.witness.keys().copied()
    }

    pub fn member_set(&self) -> BTreeSet<usize> {
        self.witness.keys().copied().collect()
    }

    /// Membership mask indexed by vertex.
    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.n];
        for v in self.members() {
            m[v] = true;
        }
        m
    }

    /// Vertices not in the boundary, ascending.
    pub fn interior(&self) -> Vec<usize> {
        (0..self.n).filter(|v| !self.contains(*v)).collect()
    }
}

/// Vertices grouped by their distance from a root: `levels[i]` is `A_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelPartition {
    pub root: usize,
    pub levels: Vec<Vec<usize>>,
}

pub fn level_partition(dist: &DistanceMatrix, root: usize) -> LevelPartition {
    let row = dist.row(root);
    let ecc = row.iter().copied().max().unwrap_or(0) as usize;
    let mut levels = vec![Vec::new(); ecc + 1];
    for (v, &d) in row.iter().enumerate() {
        levels[d as usize].push(v);
    }
    LevelPartition { root, levels }
}

/// Does `w` witness `v` as a boundary vertex?
pub fn is_witnessed(g: &Graph, dist: &DistanceMatrix, v: usize, w: usize) -> Result<bool> {
    if v == w {
        return Err(Error::InvalidWitness(v));
    }
    Ok(witnessed_unchecked(g, dist, v, w))
}

fn witnessed_unchecked(g: &Graph, dist: &DistanceMatrix, v: usize, w: usize) -> bool {
    let lhs = g.degree(v) as u64 * u64::from(dist.get(v, w));
    let rhs: u64 = g.neighbors(v).iter().map(|&x| u64::from(dist.get(x, w))).sum();
    lhs > rhs
}

/// Compute ∂G by testing every `(v, w)` pair.
pub fn boundary_set(g: &Graph, dist: &DistanceMatrix) -> BoundarySet {
    let n = g.n();
    let mut witness = BTreeMap::new();
    if dist.is_dense() {
        for v in 0..n {
            if let Some(w) = (0..n).find(|&w| w != v && witnessed_unchecked(g, dist, v, w)) {
                witness.insert(v, w);
            }
        }
    } else {
        // iterate by witness so each BFS row is computed once
        for w in 0..n {
            let row = dist.row(w);
            for v in 0..n {
                if v == w || witness.contains_key(&v) {
                    continue;
                }
                let lhs = g.degree(v) as u64 * u64::from(row[v]);
                let rhs: u64 = g.neighbors(v).iter().map(|&x| u64::from(row[x])).sum();
                if lhs > rhs {
                    witness.insert(v, w);
                }
            }
        }
    }
    BoundarySet { n, witness }
}

/// Compute ∂G from level counts: `v` at level `i` from some root with strictly more
/// neighbors at level `i - 1` than at level `i + 1`.
pub fn boundary_via_levels(g: &Graph, dist: &DistanceMatrix) -> BTreeSet<usize> {
    let n = g.n();
    let mut members = BTreeSet::new();
    for root in 0..n {
        let row = dist.row(root);
        for v in 0..n {
            if v == root || members.contains(&v) {
                continue;
            }
            let level = row[v];
            let (mut inward, mut outward) = (0usize, 0usize);
            for &x in g.neighbors(v) {
                if row[x] + 1 == level {
                    inward += 1;
                } else if row[x] == level + 1 {
                    outward += 1;
                }
            }
            if inward > outward {
                members.insert(v);
            }
        }
    }
    members
}

/// True iff for every other vertex `w`, `v` has at least as many neighbors farther
/// from `w` as closer to it.
pub fn interior_check(g: &Graph, dist: &DistanceMatrix, v: usize) -> bool {
    let row_v = dist.row(v);
    (0..g.n()).filter(|&w| w != v).all(|w| {
        let dvw = row_v[w];
        let row_w = dist.row(w);
        let (mut closer, mut farther) = (0usize, 0usize);
        for &x in g.neighbors(v) {
            match row_w[x].cmp(&dvw) {
                std::cmp::Ordering::Less => closer += 1,
                std::cmp::Ordering::Greater => farther += 1,
                std::cmp::Ordering::Equal => {}
            }
        }
        farther >= closer
    })
}

/// Comparison of `|∂G|` against `n / (2 * maxdeg * diam)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoperimetricReport {
    pub lhs: u64,
    #[serde(serialize_with = "ser_ratio")]
    pub rhs: Ratio<u64>,
    pub holds: bool,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

pub fn isoperimetric_report(
    g: &Graph,
    dist: &DistanceMatrix,
    boundary: &BoundarySet,
) -> Result<IsoperimetricReport> {
    let diam = u64::from(dist.diameter());
    if diam == 0 {
        return Err(Error::DegenerateGraph);
    }
    let (_, maxdeg) = degree_extremes(g);
    let rhs = Ratio::new(g.n() as u64, 2 * maxdeg as u64 * diam);
    let lhs = boundary.len() as u64;
    Ok(IsoperimetricReport {
        lhs,
        holds: Ratio::from_integer(lhs) >= rhs,
        rhs,
    })
}
