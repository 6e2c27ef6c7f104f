//! Kirchhoff and Dirichlet Laplacians, their low eigenpairs, and the reports
//! built on them: the Faber–Krahn bound, hot-spots classification, and the
//! hot-spots ratio bound.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::boundary::BoundarySet;
use crate::error::{Error, Result};
use crate::graph::{degree_extremes, DistanceMatrix, Graph};
use crate::linalg::{grounded_laplacian, sorted_symmetric_eigen, Grounding};

/// An eigenvalue counts as positive when it exceeds this multiple of the max degree.
pub const POSITIVE_EIGENVALUE_GAP: f64 = 1e-8;
/// Eigenvalues within this relative gap of λ₂ are grouped into its eigenspace.
pub const MULTIPLICITY_REL_GAP: f64 = 1e-6;
/// Vertices within this fraction of `‖f‖∞` of an extreme value count as extremal.
pub const ARGMAX_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LaplacianMode {
    /// Full `L = D - A`.
    Neumann,
    /// `L` with the rows and columns of `grounded` erased.
    Dirichlet { grounded: Vec<usize> },
}

/// The Kirchhoff Laplacian of a graph, optionally restricted to the complement of a vertex set.
#[derive(Debug, Clone)]
pub struct LaplacianView<'g> {
    graph: &'g Graph,
    mode: LaplacianMode,
    grounding: Grounding,
}

impl<'g> LaplacianView<'g> {
    pub fn neumann(graph: &'g Graph) -> Self {
        LaplacianView {
            graph,
            mode: LaplacianMode::Neumann,
            grounding: Grounding::new(graph.n(), &vec![false; graph.n()]),
        }
    }

    pub fn mode(&self) -> &LaplacianMode {
        &self.mode
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    /// Vertices indexing the rows, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.grounding.kept
    }

    pub fn dim(&self) -> usize {
        self.grounding.len()
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        grounded_laplacian(self.graph, &self.grounding)
    }

    /// `<x, L x>` for `x` indexed by rows.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        let m = self.to_dense();
        let v = DVector::from_column_slice(x);
        v.dot(&(m * &v))
    }
}

/// `(L f)(v) = sum over neighbors w of (f(v) - f(w))`.
pub fn apply_laplacian(g: &Graph, f: &[f64]) -> Result<Vec<f64>> {
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    Ok((0..g.n())
        .map(|v| g.neighbors(v).iter().map(|&w| f[v] - f[w]).sum())
        .collect())
}

fn grounded_mask(g: &Graph, x: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; g.n()];
    for &v in x {
        mask[v] = true;
    }
    let count = mask.iter().filter(|&&m| m).count();
    if count == 0 {
        return Err(Error::EmptyX);
    }
    if count == g.n() {
        return Err(Error::XCoversAllVertices);
    }
    Ok(mask)
}

/// Dirichlet Laplacian: erase the rows and columns of `x` from `L`.
pub fn dirichlet_laplacian<'g>(g: &'g Graph, x: &[usize]) -> Result<LaplacianView<'g>> {
    let mask = grounded_mask(g, x)?;
    let mut grounded: Vec<usize> = (0..g.n()).filter(|&v| mask[v]).collect();
    grounded.dedup();
    Ok(LaplacianView {
        graph: g,
        mode: LaplacianMode::Dirichlet { grounded },
        grounding: Grounding::new(g.n(), &mask),
    })
}

/// Dirichlet Laplacian built the other way: Laplacian of the subgraph induced on
/// `V \ x`, plus one on the diagonal per neighbor in `x`.
pub fn dirichlet_laplacian_via_subgraph(g: &Graph, x: &[usize]) -> Result<DMatrix<f64>> {
    let mask = grounded_mask(g, x)?;
    let kept: Vec<usize> = (0..g.n()).filter(|&v| !mask[v]).collect();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let m = kept.len();
    let mut a = DMatrix::zeros(m, m);
    for (i, &v) in kept.iter().enumerate() {
        for &w in g.neighbors(v) {
            if mask[w] {
                a[(i, i)] += 1.0;
            } else {
                a[(i, i)] += 1.0;
                a[(i, index[w])] -= 1.0;
            }
        }
    }
    Ok(a)
}

/// Edge sum of squared differences over the vertex sum of squares.
pub fn rayleigh_quotient(g: &Graph, f: &[f64]) -> Result<f64> {
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    let denom: f64 = f.iter().map(|x| x * x).sum();
    if denom == 0.0 {
        return Err(Error::ZeroFunction);
    }
    Ok(dirichlet_energy(g, f) / denom)
}

/// `sum over edges (f(u) - f(v))^2`.
pub fn dirichlet_energy(g: &Graph, f: &[f64]) -> f64 {
    g.edges().map(|(u, v)| (f[u] - f[v]).powi(2)).sum()
}

/// Eigenvalue with a unit eigenvector over all vertices (zero on grounded vertices).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eigenpair {
    pub value: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
}

fn residual_of(view: &LaplacianView<'_>, value: f64, full: &[f64]) -> f64 {
    let kept = view.vertices();
    let x: Vec<f64> = kept.iter().map(|&v| full[v]).collect();
    let lx = view.to_dense() * DVector::from_column_slice(&x);
    lx.iter()
        .zip(&x)
        .map(|(a, b)| (a - value * b).powi(2))
        .sum::<f64>()
        .sqrt()
}

fn interior_components(g: &Graph, grounded: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = grounded.to_vec();
    let mut comps = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Smallest eigenvalue of the Dirichlet Laplacian on `V \ x` with a nonnegative eigenvector.
///
/// The grounded operator is block diagonal over the components of `V \ x`; each
/// block's ground state has constant sign, so the eigenvector is taken from the
/// block with the smallest eigenvalue.
pub fn smallest_dirichlet_eigenpair(g: &Graph, x: &[usize]) -> Result<Eigenpair> {
    let view = dirichlet_laplacian(g, x)?;
    let mask = grounded_mask(g, x)?;
    let mut best: Option<(f64, Vec<f64>)> = None;
    for comp in interior_components(g, &mask) {
        let mut outside = vec![true; g.n()];
        for &v in &comp {
            outside[v] = false;
        }
        let grounding = Grounding::new(g.n(), &outside);
        let (vals, vecs) = sorted_symmetric_eigen(grounded_laplacian(g, &grounding))?;
        if best.as_ref().is_none_or(|(b, _)| vals[0] < *b) {
            let col: Vec<f64> = vecs.column(0).iter().map(|x| x.abs()).collect();
            best = Some((vals[0], grounding.extend(&col)));
        }
    }
    let (value, mut vector) = best.expect("interior is nonempty");
    let norm = vector.iter().map(|x| x * x).sum::<f64>().sqrt();
    vector.iter_mut().for_each(|x| *x /= norm);
    let residual = residual_of(&view, value, &vector);
    Ok(Eigenpair {
        value,
        vector,
        residual,
    })
}

/// `λ₁(L₂)` against `mindeg / (4 diam²)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FaberKrahnReport {
    pub lambda1: Option<f64>,
    pub bound: f64,
    pub q: Option<f64>,
    pub holds: bool,
    pub interior_empty: bool,
}

pub fn faber_krahn_report(
    g: &Graph,
    dist: &DistanceMatrix,
    boundary: &BoundarySet,
) -> Result<FaberKrahnReport> {
    let diam = dist.diameter();
    if diam == 0 {
        return Err(Error::DegenerateGraph);
    }
    let (mindeg, _) = degree_extremes(g);
    let bound = 0.25 * mindeg as f64 / f64::from(diam).powi(2);
    if boundary.len() == g.n() {
        return Ok(FaberKrahnReport {
            lambda1: None,
            bound,
            q: None,
            holds: true,
            interior_empty: true,
        });
    }
    let members: Vec<usize> = boundary.members().collect();
    let pair = smallest_dirichlet_eigenpair(g, &members)?;
    Ok(FaberKrahnReport {
        lambda1: Some(pair.value),
        bound,
        q: Some(pair.value / mindeg as f64),
        holds: pair.value >= bound - 1e-9,
        interior_empty: false,
    })
}

/// λ₂ of the Kirchhoff Laplacian with a basis of its eigenspace.
#[derive(Debug, Clone, PartialEq)]
pub struct NeumannSecond {
    pub pair: Eigenpair,
    pub multiplicity: usize,
    pub basis: Vec<Vec<f64>>,
}

pub fn neumann_second_eigenpair(g: &Graph) -> Result<NeumannSecond> {
    if g.n() < 2 {
        return Err(Error::DegenerateGraph);
    }
    let view = LaplacianView::neumann(g);
    let (_, maxdeg) = degree_extremes(g);
    let (vals, vecs) = sorted_symmetric_eigen(view.to_dense())?;
    let first = vals
        .iter()
        .position(|&l| l > POSITIVE_EIGENVALUE_GAP * maxdeg as f64)
        .expect("a connected graph on two or more vertices has a positive eigenvalue");
    let lambda2 = vals[first];
    let last = (first..vals.len())
        .take_while(|&j| (vals[j] - lambda2).abs() < MULTIPLICITY_REL_GAP * lambda2)
        .last()
        .unwrap_or(first);
    let basis: Vec<Vec<f64>> = (first..=last)
        .map(|j| vecs.column(j).iter().copied().collect())
        .collect();
    let vector = basis[0].clone();
    let residual = residual_of(&view, lambda2, &vector);
    Ok(NeumannSecond {
        pair: Eigenpair {
            value: lambda2,
            vector,
            residual,
        },
        multiplicity: last - first + 1,
        basis,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HotspotVerdict {
    pub max_in_boundary: bool,
    pub min_in_boundary: bool,
}

impl HotspotVerdict {
    pub fn holds(&self) -> bool {
        self.max_in_boundary && self.min_in_boundary
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HotspotsOverall {
    Holds,
    Violated,
    Degenerate,
}

impl std::fmt::Display for HotspotsOverall {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            HotspotsOverall::Holds => "holds",
            HotspotsOverall::Violated => "violated",
            HotspotsOverall::Degenerate => "degenerate",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HotspotsReport {
    pub lambda2: f64,
    pub multiplicity: usize,
    pub verdicts: Vec<HotspotVerdict>,
    pub overall: HotspotsOverall,
}

/// Vertices whose value lies within `ARGMAX_TOL * ‖f‖∞` of the maximum.
pub fn argmax_set(f: &[f64]) -> Vec<usize> {
    let sup = f.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let max = f.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let tol = ARGMAX_TOL * sup;
    (0..f.len()).filter(|&v| f[v] >= max - tol).collect()
}

fn verdict(f: &[f64], boundary: &BoundarySet) -> HotspotVerdict {
    let neg: Vec<f64> = f.iter().map(|x| -x).collect();
    HotspotVerdict {
        max_in_boundary: argmax_set(f).into_iter().any(|v| boundary.contains(v)),
        min_in_boundary: argmax_set(&neg).into_iter().any(|v| boundary.contains(v)),
    }
}

/// Do the extrema of the second Laplacian eigenvector(s) meet ∂G?
pub fn hotspots_report(g: &Graph, boundary: &BoundarySet) -> Result<HotspotsReport> {
    let second = neumann_second_eigenpair(g)?;
    // negating a vector swaps its max and min sets, so one pass covers both signs
    let verdicts: Vec<HotspotVerdict> = second.basis.iter().map(|f| verdict(f, boundary)).collect();
    let all = verdicts.iter().all(HotspotVerdict::holds);
    let any = verdicts.iter().any(HotspotVerdict::holds);
    let overall = if all {
        HotspotsOverall::Holds
    } else if second.multiplicity > 1 && any {
        HotspotsOverall::Degenerate
    } else {
        HotspotsOverall::Violated
    };
    Ok(HotspotsReport {
        lambda2: second.pair.value,
        multiplicity: second.multiplicity,
        verdicts,
        overall,
    })
}

/// Interior-to-boundary maximum ratio of the second eigenvector against
/// `(1 - λ₂/mindeg)^(-2 maxdeg diam²)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HotspotsRatioCheck {
    pub lambda2: f64,
    pub ratio: Option<f64>,
    pub bound: Option<f64>,
    pub applicable: bool,
    pub holds: bool,
}

pub fn hotspots_ratio_check(
    g: &Graph,
    dist: &DistanceMatrix,
    boundary: &BoundarySet,
) -> Result<HotspotsRatioCheck> {
    let second = neumann_second_eigenpair(g)?;
    let lambda2 = second.pair.value;
    let inapplicable = HotspotsRatioCheck {
        lambda2,
        ratio: None,
        bound: None,
        applicable: false,
        holds: true,
    };
    let interior = boundary.interior();
    if lambda2 >= 1.0 - POSITIVE_EIGENVALUE_GAP || second.multiplicity != 1 || interior.is_empty() {
        return Ok(inapplicable);
    }
    let (mindeg, maxdeg) = degree_extremes(g);
    let diam = f64::from(dist.diameter());
    let exponent = 2.0 * maxdeg as f64 * diam * diam;
    let bound = (1.0 - lambda2 / mindeg as f64).powf(-exponent);
    let f = &second.pair.vector;
    let sup = f.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut worst: Option<f64> = None;
    for sign in [1.0, -1.0] {
        let bmax = boundary
            .members()
            .map(|v| sign * f[v])
            .fold(f64::NEG_INFINITY, f64::max);
        if bmax <= ARGMAX_TOL * sup {
            continue;
        }
        let imax = interior
            .iter()
            .map(|&v| sign * f[v])
            .fold(f64::NEG_INFINITY, f64::max);
        let r = imax / bmax;
        worst = Some(worst.map_or(r, |w: f64| w.max(r)));
    }
    match worst {
        None => Ok(inapplicable),
        Some(ratio) => Ok(HotspotsRatioCheck {
            lambda2,
            ratio: Some(ratio),
            bound: Some(bound),
            applicable: true,
            holds: ratio <= bound * (1.0 + 1e-9),
        }),
    }
}
