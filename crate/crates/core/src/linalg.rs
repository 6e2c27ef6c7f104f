//! Dense and iterative solvers for the grounded (Dirichlet) Laplacian.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Interior size up to which the grounded system is factorized directly.
pub const DIRECT_SOLVE_CAP: usize = 2000;

/// Largest matrix handed to the dense symmetric eigensolver.
pub const DENSE_SPECTRUM_CAP: usize = 4000;

/// Index map between graph vertices and rows of a grounded operator.
#[derive(Debug, Clone)]
pub struct Grounding {
    /// Vertices kept, ascending.
    pub kept: Vec<usize>,
    /// `row[v]` is the row of vertex `v`, or `None` when `v` is grounded.
    pub row: Vec<Option<usize>>,
}

impl Grounding {
    pub fn new(n: usize, grounded: &[bool]) -> Self {
        let mut row = vec![None; n];
        let mut kept = Vec::new();
        for v in 0..n {
            if !grounded[v] {
                row[v] = Some(kept.len());
                kept.push(v);
            }
        }
        Grounding { kept, row }
    }

    pub fn len(&self) -> usize {
        self.kept.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kept.is_empty()
    }

    /// Extend a vector on kept vertices to all vertices, zero on the grounded set.
    pub fn extend(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.row.len()];
        for (i, &v) in self.kept.iter().enumerate() {
            out[v] = x[i];
        }
        out
    }
}

/// `L = D - A` with grounded rows and columns erased, as a dense matrix.
pub fn grounded_laplacian(g: &Graph, grounding: &Grounding) -> DMatrix<f64> {
    let m = grounding.len();
    let mut a = DMatrix::zeros(m, m);
    for (i, &v) in grounding.kept.iter().enumerate() {
        a[(i, i)] = g.degree(v) as f64;
        for &w in g.neighbors(v) {
            if let Some(j) = grounding.row[w] {
                a[(i, j)] = -1.0;
            }
        }
    }
    a
}

fn apply_grounded(g: &Graph, grounding: &Grounding, x: &[f64], out: &mut [f64]) {
    for (i, &v) in grounding.kept.iter().enumerate() {
        let mut s = g.degree(v) as f64 * x[i];
        for &w in g.neighbors(v) {
            if let Some(j) = grounding.row[w] {
                s -= x[j];
            }
        }
        out[i] = s;
    }
}

/// Solve the grounded system `L_X u = rhs` (rhs indexed by kept rows).
///
/// The matrix is a nonsingular M-matrix whenever the graph is connected and the
/// grounded set is nonempty, hence SPD.
pub fn solve_grounded(g: &Graph, grounding: &Grounding, rhs: &[f64]) -> Result<Vec<f64>> {
    let m = grounding.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    if m <= DIRECT_SOLVE_CAP {
        let a = grounded_laplacian(g, grounding);
        let chol = a
            .cholesky()
            .ok_or_else(|| Error::SolverFailure("grounded Laplacian is not positive definite".into()))?;
        let x = chol.solve(&DVector::from_column_slice(rhs));
        Ok(x.as_slice().to_vec())
    } else {
        conjugate_gradient(g, grounding, rhs, 1e-13, 20 * m)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Jacobi-preconditioned conjugate gradient on the grounded Laplacian.
pub fn conjugate_gradient(
    g: &Graph,
    grounding: &Grounding,
    rhs: &[f64],
    rel_tol: f64,
    max_iter: usize,
) -> Result<Vec<f64>> {
    let m = grounding.len();
    let diag: Vec<f64> = grounding.kept.iter().map(|&v| g.degree(v) as f64).collect();
    let mut x = vec![0.0; m];
    let mut r = rhs.to_vec();
    let mut z: Vec<f64> = r.iter().zip(&diag).map(|(r, d)| r / d).collect();
    let mut p = z.clone();
    let mut ap = vec![0.0; m];
    let bnorm = dot(rhs, rhs).sqrt();
    if bnorm == 0.0 {
        return Ok(x);
    }
    let mut rz = dot(&r, &z);
    for _ in 0..max_iter {
        apply_grounded(g, grounding, &p, &mut ap);
        let alpha = rz / dot(&p, &ap);
        for i in 0..m {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        if dot(&r, &r).sqrt() <= rel_tol * bnorm {
            return Ok(x);
        }
        for i in 0..m {
            z[i] = r[i] / diag[i];
        }
        let rz_next = dot(&r, &z);
        let beta = rz_next / rz;
        rz = rz_next;
        for i in 0..m {
            p[i] = z[i] + beta * p[i];
        }
    }
    Err(Error::SolverFailure(format!(
        "conjugate gradient did not converge in {max_iter} iterations"
    )))
}

/// Eigenvalues ascending with matching unit eigenvectors (columns).
pub fn sorted_symmetric_eigen(a: DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = a.nrows();
    if n > DENSE_SPECTRUM_CAP {
        return Err(Error::SpectrumTooLarge {
            vertices: n,
            cap: DENSE_SPECTRUM_CAP,
        });
    }
    let eig = SymmetricEigen::new(a);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    Ok((values, vectors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{grid, path};

    #[test]
    fn cg_matches_cholesky() {
        let g = grid(12, 12);
        let mut grounded = vec![false; g.n()];
        for (v, gr) in grounded.iter_mut().enumerate() {
            let (r, c) = (v / 12, v % 12);
            *gr = r == 0 || c == 0 || r == 11 || c == 11;
        }
        let gr = Grounding::new(g.n(), &grounded);
        let rhs: Vec<f64> = gr.kept.iter().map(|&v| g.degree(v) as f64).collect();
        let direct = solve_grounded(&g, &gr, &rhs).unwrap();
        let iter = conjugate_gradient(&g, &gr, &rhs, 1e-14, 10_000).unwrap();
        for (a, b) in direct.iter().zip(&iter) {
            assert!((a - b).abs() < 1e-9 * a.abs().max(1.0));
        }
    }

    #[test]
    fn eigen_sorted_ascending() {
        let g = path(4);
        let gr = Grounding::new(4, &[false; 4]);
        let (vals, vecs) = sorted_symmetric_eigen(grounded_laplacian(&g, &gr)).unwrap();
        assert!(vals.windows(2).all(|w| w[0] <= w[1]));
        assert!(vals[0].abs() < 1e-12);
        assert!((vals[1] - (2.0 - 2f64.sqrt())).abs() < 1e-12);
        assert_eq!(vecs.ncols(), 4);
    }
}
