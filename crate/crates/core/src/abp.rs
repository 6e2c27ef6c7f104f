//! Torsion functions and maximum-principle (ABP-type) estimates.
//!
//! For a vertex set `X`, the least constant `C(X)` in
//! `max_V f <= max_X f + C(X) * ‖Lf‖∞ on V \ X` is the maximum of the torsion
//! function `u` (`Lu = 1` off `X`, `u = 0` on `X`): any competitor `f` with
//! `f <= 0` on `X` and `|Lf| <= 1` off `X` satisfies `L(u - f) >= 0` there, so
//! `f <= u` by the minimum principle, and `u` itself attains the bound.

use serde::Serialize;

use crate::boundary::BoundarySet;
use crate::error::{Error, Result};
use crate::graph::{degree_extremes, DistanceMatrix, Graph};
use crate::linalg::{solve_grounded, Grounding};
use crate::spectral::apply_laplacian;

#[derive(Debug, Clone, PartialEq)]
pub struct TorsionFunction {
    pub u: Vec<f64>,
    pub x: Vec<bool>,
}

impl TorsionFunction {
    pub fn max(&self) -> f64 {
        self.u.iter().copied().fold(0.0, f64::max)
    }
}

fn set_mask(n: usize, x: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; n];
    for &v in x {
        mask[v] = true;
    }
    match mask.iter().filter(|&&m| m).count() {
        0 => Err(Error::EmptyX),
        c if c == n => Err(Error::XCoversAllVertices),
        _ => Ok(mask),
    }
}

/// Solve `Lu = 1` on `V \ x` with `u = 0` on `x`.
pub fn torsion_function(g: &Graph, x: &[usize]) -> Result<TorsionFunction> {
    let mask = set_mask(g.n(), x)?;
    let grounding = Grounding::new(g.n(), &mask);
    let u = solve_grounded(g, &grounding, &vec![1.0; grounding.len()])?;
    Ok(TorsionFunction {
        u: grounding.extend(&u),
        x: mask,
    })
}

/// Least constant `C(x)` of the maximum-principle estimate.
pub fn abp_sharp_constant(g: &Graph, x: &[usize]) -> Result<f64> {
    Ok(torsion_function(g, x)?.max())
}

/// Universal coefficient `2 (maxdeg / mindeg) diam²` for `X = ∂G`.
pub fn abp_universal_coefficient(g: &Graph, dist: &DistanceMatrix) -> f64 {
    let (mindeg, maxdeg) = degree_extremes(g);
    let diam = f64::from(dist.diameter());
    2.0 * maxdeg as f64 / mindeg as f64 * diam * diam
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AbpCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub one_sided_rhs: f64,
}

/// Evaluate both sides of the boundary ABP estimate for `f`, plus the variant
/// that only charges the positive part of `Lf`.
pub fn abp_check(g: &Graph, dist: &DistanceMatrix, boundary: &BoundarySet, f: &[f64]) -> Result<AbpCheck> {
    let lf = apply_laplacian(g, f)?;
    let lhs = f.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let bmax = boundary
        .members()
        .map(|v| f[v])
        .fold(f64::NEG_INFINITY, f64::max);
    let (mut sup, mut sup_pos) = (0.0f64, 0.0f64);
    for v in (0..g.n()).filter(|&v| !boundary.contains(v)) {
        sup = sup.max(lf[v].abs());
        sup_pos = sup_pos.max(lf[v].max(0.0));
    }
    let coeff = abp_universal_coefficient(g, dist);
    let rhs = bmax + coeff * sup;
    Ok(AbpCheck {
        lhs,
        rhs,
        holds: lhs <= rhs + 1e-9,
        one_sided_rhs: bmax + coeff * sup_pos,
    })
}
