//! Hardy inequality with the hitting potential as weight source, and the
//! positive-supersolution criterion for quadratic forms
//! `Q(f) = sum over edges (f(u) - f(v))^2 + sum over vertices W(v) f(v)^2`.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::boundary::BoundarySet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{grounded_laplacian, sorted_symmetric_eigen, Grounding};
use crate::spectral::{apply_laplacian, dirichlet_energy};
use crate::walks::HittingPotential;

/// Potential `W` of the quadratic form, possibly undefined at some vertices.
///
/// The Hardy weight is `deg / phi`; it enters the form with a negative sign,
/// so `W(v) = -deg(v) / phi(v)` off the boundary and `None` on it.
#[derive(Debug, Clone, PartialEq)]
pub struct HardyWeight {
    pub w: Vec<Option<f64>>,
}

impl HardyWeight {
    pub fn from_potential(g: &Graph, potential: &HittingPotential) -> Self {
        let w = (0..g.n())
            .map(|v| {
                if potential.absorbing[v] {
                    None
                } else {
                    Some(-(g.degree(v) as f64) / potential.phi[v])
                }
            })
            .collect();
        HardyWeight { w }
    }

    pub fn defined(w: Vec<f64>) -> Self {
        HardyWeight {
            w: w.into_iter().map(Some).collect(),
        }
    }
}

pub fn quadratic_form(g: &Graph, weight: &HardyWeight, f: &[f64]) -> Result<f64> {
    if f.len() != g.n() || weight.w.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: if f.len() != g.n() { f.len() } else { weight.w.len() },
        });
    }
    let mut potential = 0.0;
    for (v, (&fv, wv)) in f.iter().zip(&weight.w).enumerate() {
        if fv == 0.0 {
            continue;
        }
        match wv {
            Some(w) => potential += w * fv * fv,
            None => return Err(Error::WUndefinedWhereFNonzero(v)),
        }
    }
    Ok(dirichlet_energy(g, f) + potential)
}

/// Is `phi` a strictly positive supersolution of `(D - A) phi + W phi >= 0` off `x`?
pub fn aap_supersolution_check(g: &Graph, weight: &HardyWeight, phi: &[f64], x: &[usize]) -> bool {
    let mut excluded = vec![false; g.n()];
    for &v in x {
        excluded[v] = true;
    }
    let lphi = apply_laplacian(g, phi).expect("phi has one entry per vertex");
    (0..g.n()).filter(|&v| !excluded[v]).all(|v| {
        if phi[v] <= 0.0 {
            return false;
        }
        match weight.w[v] {
            Some(w) => lphi[v] + w * phi[v] >= -1e-12,
            None => false,
        }
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HardyCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// Compare the Dirichlet energy of `f` with `sum over interior of deg(v) f(v)^2 / phi(v)`.
pub fn hardy_check(
    g: &Graph,
    boundary: &BoundarySet,
    potential: &HittingPotential,
    f: &[f64],
) -> Result<HardyCheck> {
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    if let Some(v) = boundary.members().find(|&v| f[v] != 0.0) {
        return Err(Error::FNotVanishingOnBoundary(v));
    }
    let lhs = dirichlet_energy(g, f);
    let rhs: f64 = (0..g.n())
        .filter(|&v| !boundary.contains(v))
        .map(|v| g.degree(v) as f64 * f[v] * f[v] / potential.phi[v])
        .sum();
    Ok(HardyCheck {
        lhs,
        rhs,
        holds: lhs >= rhs - 1e-9 * lhs,
    })
}

/// The interior matrix `L₂ - diag(deg / phi)`.
pub fn hardy_operator(g: &Graph, boundary: &BoundarySet, potential: &HittingPotential) -> DMatrix<f64> {
    let grounding = Grounding::new(g.n(), &boundary.mask());
    let mut m = grounded_laplacian(g, &grounding);
    for (i, &v) in grounding.kept.iter().enumerate() {
        m[(i, i)] -= g.degree(v) as f64 / potential.phi[v];
    }
    m
}

/// Smallest eigenvalue of `L₂ - diag(deg / phi)`; nonnegative iff the Hardy
/// inequality holds for every `f` vanishing on ∂G.
pub fn hardy_certificate(g: &Graph, boundary: &BoundarySet, potential: &HittingPotential) -> Result<f64> {
    if boundary.len() == g.n() {
        return Err(Error::InteriorEmpty);
    }
    let (vals, _) = sorted_symmetric_eigen(hardy_operator(g, boundary, potential))?;
    Ok(vals[0])
}
