//! Distance energies `sum over v, w of f(d(v, w)) mu(v) mu(w)` of probability
//! measures on the vertices, and their maximization.
//!
//! For a convex nondecreasing kernel, moving the mass of an interior vertex
//! uniformly onto its neighbors never lowers the energy, and strictly raises it
//! when the kernel is strictly convex. [`purge_interior`] iterates that move;
//! [`maximize_energy`] combines it with multistart replicator ascent.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::boundary::BoundarySet;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::walks::RngSeed;

/// Move cap for [`purge_interior`].
pub const PURGE_MOVE_CAP: usize = 1_000_000;

/// Kernel values `f(0), f(1), ..., f(D)` on integer distances.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel {
    values: Vec<f64>,
    nondecreasing: bool,
    convex: bool,
    strictly_convex: bool,
}

impl Kernel {
    pub fn from_values(values: Vec<f64>) -> Self {
        assert!(!values.is_empty(), "kernel needs f(0)");
        let nondecreasing = values.windows(2).all(|w| w[1] >= w[0]);
        let second = |w: &[f64]| w[2] - 2.0 * w[1] + w[0];
        let convex = values.windows(3).all(|w| second(w) >= 0.0);
        let strictly_convex = values.windows(3).all(|w| second(w) > 0.0);
        Kernel {
            values,
            nondecreasing,
            convex,
            strictly_convex,
        }
    }

    /// `f(d) = d^alpha` for `d = 0..=max_distance`.
    pub fn power(alpha: f64, max_distance: u32) -> Self {
        Self::from_values((0..=max_distance).map(|d| f64::from(d).powf(alpha)).collect())
    }

    pub fn value(&self, d: u32) -> f64 {
        self.values[d as usize]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn max_distance(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.nondecreasing
    }

    pub fn is_convex(&self) -> bool {
        self.convex
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.strictly_convex
    }

    /// Convex and nondecreasing: the improvement move never lowers the energy.
    pub fn is_admissible(&self) -> bool {
        self.nondecreasing && self.convex
    }

    fn check_covers(&self, dist: &DistanceMatrix) -> Result<()> {
        let need = dist.diameter() as usize;
        if self.max_distance() < need {
            return Err(Error::KernelTooShort {
                have: self.max_distance(),
                need,
            });
        }
        Ok(())
    }

    /// Dense matrix `f(d(v, w))`.
    pub fn gram(&self, dist: &DistanceMatrix) -> Result<DMatrix<f64>> {
        self.check_covers(dist)?;
        let n = dist.n();
        let mut m = DMatrix::zeros(n, n);
        for v in 0..n {
            let row = dist.row(v);
            for w in 0..n {
                m[(v, w)] = self.value(row[w]);
            }
        }
        Ok(m)
    }
}

/// Probability measure on the vertices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexMeasure {
    pub mass: Vec<f64>,
}

impl VertexMeasure {
    pub fn new(mass: Vec<f64>) -> Result<Self> {
        if let Some(v) = mass.iter().position(|&m| m.is_nan() || m < 0.0) {
            return Err(Error::NotAMeasure(format!("mass at vertex {v} is {}", mass[v])));
        }
        let total: f64 = mass.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::NotAMeasure(format!("total mass {total}")));
        }
        Ok(VertexMeasure { mass })
    }

    pub fn point(n: usize, v: usize) -> Self {
        let mut mass = vec![0.0; n];
        mass[v] = 1.0;
        VertexMeasure { mass }
    }

    pub fn uniform(n: usize) -> Self {
        VertexMeasure {
            mass: vec![1.0 / n as f64; n],
        }
    }

    pub fn interior_mass(&self, boundary: &BoundarySet) -> f64 {
        self.mass
            .iter()
            .enumerate()
            .filter(|(v, _)| !boundary.contains(*v))
            .map(|(_, m)| m)
            .sum()
    }
}

fn check_measure(mu: &VertexMeasure, n: usize) -> Result<()> {
    if mu.mass.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: mu.mass.len(),
        });
    }
    VertexMeasure::new(mu.mass.clone()).map(|_| ())
}

/// Full double sum, including the diagonal terms `f(0) mu(v)^2`.
pub fn energy(dist: &DistanceMatrix, kernel: &Kernel, mu: &VertexMeasure) -> Result<f64> {
    check_measure(mu, dist.n())?;
    kernel.check_covers(dist)?;
    Ok(energy_unchecked(dist, kernel, &mu.mass))
}

fn energy_unchecked(dist: &DistanceMatrix, kernel: &Kernel, mass: &[f64]) -> f64 {
    let mut total = 0.0;
    for (v, &mv) in mass.iter().enumerate() {
        if mv == 0.0 {
            continue;
        }
        let row = dist.row(v);
        let inner: f64 = mass.iter().zip(row.iter()).map(|(&mw, &d)| kernel.value(d) * mw).sum();
        total += mv * inner;
    }
    total
}

fn quad(f: &DMatrix<f64>, x: &[f64]) -> f64 {
    let v = DVector::from_column_slice(x);
    v.dot(&(f * &v))
}

/// Move the mass of interior vertex `a` uniformly onto its neighbors.
///
/// A vertex without mass is returned unchanged.
pub fn improvement_move(
    g: &Graph,
    boundary: &BoundarySet,
    kernel: &Kernel,
    mu: &VertexMeasure,
    a: usize,
) -> Result<VertexMeasure> {
    if boundary.contains(a) {
        return Err(Error::VertexInBoundary(a));
    }
    if !kernel.is_admissible() {
        return Err(Error::KernelNotAdmissible);
    }
    check_measure(mu, g.n())?;
    Ok(VertexMeasure {
        mass: spread(g, &mu.mass, a),
    })
}

fn spread(g: &Graph, mass: &[f64], a: usize) -> Vec<f64> {
    let mut out = mass.to_vec();
    let share = mass[a] / g.degree(a) as f64;
    if share == 0.0 {
        return out;
    }
    out[a] = 0.0;
    for &x in g.neighbors(a) {
        out[x] += share;
    }
    out
}

/// Apply improvement moves, largest interior atom first (ties to the lower id),
/// until the interior carries at most `eps` mass.
pub fn purge_interior(
    g: &Graph,
    boundary: &BoundarySet,
    kernel: &Kernel,
    mu: &VertexMeasure,
    eps: f64,
) -> Result<VertexMeasure> {
    if !kernel.is_admissible() {
        return Err(Error::KernelNotAdmissible);
    }
    check_measure(mu, g.n())?;
    let interior = boundary.interior();
    let mut mass = mu.mass.clone();
    for _ in 0..PURGE_MOVE_CAP {
        let total: f64 = interior.iter().map(|&v| mass[v]).sum();
        if total <= eps {
            return Ok(VertexMeasure { mass });
        }
        let a = interior
            .iter()
            .copied()
            .fold(None::<usize>, |best, v| match best {
                Some(b) if mass[b] >= mass[v] => Some(b),
                _ => Some(v),
            })
            .expect("interior is nonempty when it carries mass");
        mass = spread(g, &mass, a);
    }
    Err(Error::NonTermination(PURGE_MOVE_CAP))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaximizeOptions {
    pub restarts: usize,
    pub seed: u64,
    pub polish_iters: usize,
}

impl Default for MaximizeOptions {
    fn default() -> Self {
        MaximizeOptions {
            restarts: 16,
            seed: 0,
            polish_iters: 2000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnergyMaximum {
    pub mu_star: VertexMeasure,
    pub energy: f64,
    pub interior_mass: f64,
}

/// Multiplicative (replicator) ascent on `shifted`, a row-major nonnegative
/// shift of the Gram matrix. Stops early once the update no longer moves mass.
fn replicator(shifted: &[f64], mass: &mut [f64], iters: usize) {
    let n = mass.len();
    let mut next = vec![0.0; n];
    for _ in 0..iters {
        let mut total = 0.0;
        for i in 0..n {
            next[i] = if mass[i] == 0.0 {
                0.0
            } else {
                let row = &shifted[i * n..(i + 1) * n];
                mass[i] * row.iter().zip(mass.iter()).map(|(a, b)| a * b).sum::<f64>()
            };
            total += next[i];
        }
        if total <= 0.0 {
            return;
        }
        let mut moved = 0.0;
        for i in 0..n {
            let m = next[i] / total;
            moved += (m - mass[i]).abs();
            mass[i] = m;
        }
        if moved < 1e-15 {
            return;
        }
    }
}

/// Stationary point of the quadratic form restricted to the current support.
fn support_polish(f: &DMatrix<f64>, mass: &mut [f64]) {
    let peak = mass.iter().copied().fold(0.0, f64::max);
    let support: Vec<usize> = (0..mass.len()).filter(|&i| mass[i] > 1e-7 * peak).collect();
    let k = support.len();
    let sub = DMatrix::from_fn(k, k, |r, c| f[(support[r], support[c])]);
    let Some(x) = sub.lu().solve(&DVector::from_element(k, 1.0)) else {
        return;
    };
    let total: f64 = x.iter().sum();
    if !(total.is_finite() && total != 0.0) || x.iter().any(|&xi| xi / total <= 0.0) {
        return;
    }
    let mut candidate = vec![0.0; mass.len()];
    for (i, &v) in support.iter().enumerate() {
        candidate[v] = x[i] / total;
    }
    if quad(f, &candidate) >= quad(f, mass) {
        mass.copy_from_slice(&candidate);
    }
}

fn random_simplex_point<R: Rng>(n: usize, rng: &mut R) -> Vec<f64> {
    let e: Vec<f64> = (0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    let s: f64 = e.iter().sum();
    e.into_iter().map(|x| x / s).collect()
}

/// Heuristic global maximization of the energy over probability measures.
///
/// Each restart runs replicator ascent from a random point of the simplex
/// (restart 0 starts from the uniform measure), purges interior mass with the
/// improvement move, re-runs the ascent on the boundary, and snaps to the
/// stationary point on the final support. Restarts run in parallel; the best
/// energy wins, ties going to the lower restart index.
pub fn maximize_energy(
    g: &Graph,
    dist: &DistanceMatrix,
    boundary: &BoundarySet,
    kernel: &Kernel,
    options: MaximizeOptions,
) -> Result<EnergyMaximum> {
    if !kernel.is_admissible() {
        return Err(Error::KernelNotAdmissible);
    }
    let n = g.n();
    let f = kernel.gram(dist)?;
    let (lo, hi) = f.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    let shift = -lo + 1e-6 * (hi - lo).max(1.0);
    let shifted: Vec<f64> = (0..n * n).map(|k| f[(k / n, k % n)] + shift).collect();
    let restarts = options.restarts.max(1);
    let results: Vec<Result<(f64, Vec<f64>)>> = (0..restarts)
        .into_par_iter()
        .map(|r| {
            let mut mass = if r == 0 {
                vec![1.0 / n as f64; n]
            } else {
                random_simplex_point(n, &mut RngSeed::new(options.seed, r as u64).rng())
            };
            replicator(&shifted, &mut mass, options.polish_iters);
            let purged = purge_interior(g, boundary, kernel, &VertexMeasure { mass }, 1e-14)?;
            let mut mass = purged.mass;
            for v in boundary.interior() {
                mass[v] = 0.0;
            }
            let s: f64 = mass.iter().sum();
            mass.iter_mut().for_each(|m| *m /= s);
            for _ in 0..4 {
                replicator(&shifted, &mut mass, options.polish_iters);
                support_polish(&f, &mut mass);
                // reopen a boundary vertex that would gain mass, if any
                let e = quad(&f, &mass);
                let grad: Vec<f64> = (0..n).map(|i| (0..n).map(|j| f[(i, j)] * mass[j]).sum()).collect();
                let Some(j) = boundary
                    .members()
                    .filter(|&j| mass[j] == 0.0 && grad[j] > e + 1e-10 * e.abs().max(1.0))
                    .max_by(|&a, &b| grad[a].total_cmp(&grad[b]))
                else {
                    break;
                };
                mass.iter_mut().for_each(|m| *m *= 0.99);
                mass[j] += 0.01;
            }
            Ok((quad(&f, &mass), mass))
        })
        .collect();
    let mut best: Option<(f64, Vec<f64>)> = None;
    for r in results {
        let (e, mass) = r?;
        if best.as_ref().is_none_or(|(b, _)| e > *b) {
            best = Some((e, mass));
        }
    }
    let (_, mass) = best.expect("at least one restart");
    let mu_star = VertexMeasure { mass };
    Ok(EnergyMaximum {
        energy: energy_unchecked(dist, kernel, &mu_star.mass),
        interior_mass: mu_star.interior_mass(boundary),
        mu_star,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BruteForceMaximum {
    pub mu: VertexMeasure,
    pub energy: f64,
}

/// Exhaustive search over measures with masses in multiples of `1/grid_steps`,
/// followed by pairwise mass-exchange ascent from the best grid points.
///
/// Intended as a test oracle for graphs with at most about eight vertices.
pub fn brute_force_max(dist: &DistanceMatrix, kernel: &Kernel, grid_steps: usize) -> Result<BruteForceMaximum> {
    let f = kernel.gram(dist)?;
    let n = dist.n();
    let steps = grid_steps.max(1);
    const KEEP: usize = 8;
    let mut top: Vec<(f64, Vec<usize>)> = Vec::new();
    let mut counts = vec![0usize; n];
    enumerate_compositions(&mut counts, 0, steps, &mut |c| {
        let e = grid_energy(&f, c, steps);
        if top.len() < KEEP || e > top[KEEP - 1].0 {
            if top.iter().any(|(te, _)| (te - e).abs() <= 1e-12 * te.abs().max(1.0)) {
                return;
            }
            top.push((e, c.to_vec()));
            top.sort_by(|a, b| b.0.total_cmp(&a.0));
            top.truncate(KEEP);
        }
    });
    let mut best: Option<(f64, Vec<f64>)> = None;
    for (_, c) in top {
        let mut mass: Vec<f64> = c.iter().map(|&k| k as f64 / steps as f64).collect();
        pairwise_ascent(&f, &mut mass);
        let e = quad(&f, &mass);
        if best.as_ref().is_none_or(|(b, _)| e > *b) {
            best = Some((e, mass));
        }
    }
    let (energy, mass) = best.expect("the grid is nonempty");
    Ok(BruteForceMaximum {
        mu: VertexMeasure { mass },
        energy,
    })
}

fn grid_energy(f: &DMatrix<f64>, counts: &[usize], steps: usize) -> f64 {
    let mut e = 0.0;
    for (i, &ci) in counts.iter().enumerate() {
        if ci == 0 {
            continue;
        }
        for (j, &cj) in counts.iter().enumerate() {
            e += f[(i, j)] * (ci * cj) as f64;
        }
    }
    e / (steps * steps) as f64
}

fn enumerate_compositions(counts: &mut [usize], i: usize, left: usize, visit: &mut dyn FnMut(&[usize])) {
    if i + 1 == counts.len() {
        counts[i] = left;
        visit(counts);
        return;
    }
    for k in 0..=left {
        counts[i] = k;
        enumerate_compositions(counts, i + 1, left - k, visit);
    }
}

/// Coordinate ascent along `e_i - e_j` directions with exact line maximization.
fn pairwise_ascent(f: &DMatrix<f64>, mass: &mut [f64]) {
    let n = mass.len();
    let mut grad: Vec<f64> = (0..n).map(|i| (0..n).map(|j| f[(i, j)] * mass[j]).sum()).collect();
    for _ in 0..20_000 {
        let mut gained = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                // E(mu + t (e_i - e_j)) - E(mu) = b t + a t^2 with t in [-mu_i, mu_j]
                let a = f[(i, i)] + f[(j, j)] - 2.0 * f[(i, j)];
                let b = 2.0 * (grad[i] - grad[j]);
                let (lo, hi) = (-mass[i], mass[j]);
                let gain = |t: f64| b * t + a * t * t;
                let mut t = if gain(hi) >= gain(lo) { hi } else { lo };
                if a < 0.0 {
                    let stationary = (-b / (2.0 * a)).clamp(lo, hi);
                    if gain(stationary) > gain(t) {
                        t = stationary;
                    }
                }
                let dg = gain(t);
                if dg <= 0.0 || t == 0.0 {
                    continue;
                }
                gained += dg;
                mass[i] += t;
                mass[j] -= t;
                for (k, gk) in grad.iter_mut().enumerate() {
                    *gk += t * (f[(k, i)] - f[(k, j)]);
                }
            }
        }
        if gained <= 1e-16 {
            break;
        }
    }
    for m in mass.iter_mut() {
        *m = m.max(0.0);
    }
    let s: f64 = mass.iter().sum();
    mass.iter_mut().for_each(|m| *m /= s);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::boundary_set;
    use crate::generators::{cycle, grid, path};
    use crate::graph::all_pairs_distances;

    fn setup(g: &Graph) -> (DistanceMatrix, BoundarySet) {
        let d = all_pairs_distances(g);
        let b = boundary_set(g, &d);
        (d, b)
    }

    #[test]
    fn kernel_flags() {
        let k = Kernel::power(2.0, 5);
        assert!(k.is_nondecreasing() && k.is_strictly_convex());
        let k = Kernel::power(1.0, 5);
        assert!(k.is_admissible() && !k.is_strictly_convex());
        let k = Kernel::power(0.5, 5);
        assert!(!k.is_admissible());
    }

    #[test]
    fn energy_examples() {
        let g = path(3);
        let (d, _) = setup(&g);
        let k = Kernel::power(2.0, 2);
        assert_eq!(energy(&d, &k, &VertexMeasure::point(3, 1)).unwrap(), 0.0);
        let mu = VertexMeasure::new(vec![0.5, 0.0, 0.5]).unwrap();
        assert_eq!(energy(&d, &k, &mu).unwrap(), 2.0);
        let (d2, _) = setup(&path(2));
        assert_eq!(energy(&d2, &Kernel::power(2.0, 1), &VertexMeasure::uniform(2)).unwrap(), 0.5);
        let shifted = Kernel::from_values(vec![3.0, 4.0, 7.0]);
        assert_eq!(energy(&d, &shifted, &VertexMeasure::point(3, 0)).unwrap(), 3.0);
        assert!(matches!(
            VertexMeasure::new(vec![0.5, 0.6]),
            Err(Error::NotAMeasure(_))
        ));
    }

    #[test]
    fn move_examples() {
        let g = path(3);
        let (d, b) = setup(&g);
        let k = Kernel::power(2.0, 2);
        let nu = improvement_move(&g, &b, &k, &VertexMeasure::point(3, 1), 1).unwrap();
        assert_eq!(nu.mass, vec![0.5, 0.0, 0.5]);
        assert_eq!(energy(&d, &k, &nu).unwrap(), 2.0);

        let mu = VertexMeasure::new(vec![0.5, 0.0, 0.5]).unwrap();
        assert_eq!(improvement_move(&g, &b, &k, &mu, 1).unwrap(), mu);
        assert_eq!(improvement_move(&g, &b, &k, &mu, 0).unwrap_err(), Error::VertexInBoundary(0));
        assert_eq!(
            improvement_move(&g, &b, &Kernel::power(0.5, 2), &mu, 1).unwrap_err(),
            Error::KernelNotAdmissible
        );

        let g = path(5);
        let (d, b) = setup(&g);
        let k = Kernel::power(1.5, 4);
        let nu = improvement_move(&g, &b, &k, &VertexMeasure::point(5, 2), 2).unwrap();
        assert_eq!(nu.mass, vec![0.0, 0.5, 0.0, 0.5, 0.0]);
        let e = energy(&d, &k, &nu).unwrap();
        assert!((e - 0.5 * 2f64.powf(1.5)).abs() < 1e-12);
    }

    #[test]
    fn purge_examples() {
        let g = path(3);
        let (_, b) = setup(&g);
        let k = Kernel::power(2.0, 2);
        let mu = VertexMeasure::new(vec![0.5, 0.0, 0.5]).unwrap();
        assert_eq!(purge_interior(&g, &b, &k, &mu, 0.0).unwrap(), mu);
        let p = purge_interior(&g, &b, &k, &VertexMeasure::point(3, 1), 0.0).unwrap();
        assert_eq!(p.mass, vec![0.5, 0.0, 0.5]);

        let g = grid(3, 3);
        let (_, b) = setup(&g);
        let k = Kernel::power(2.0, 4);
        let p = purge_interior(&g, &b, &k, &VertexMeasure::point(9, 4), 0.0).unwrap();
        assert_eq!(p.interior_mass(&b), 0.0);
        for v in [1, 3, 5, 7] {
            assert_eq!(p.mass[v], 0.25);
        }
    }

    #[test]
    fn maximize_small() {
        let opts = MaximizeOptions::default();
        for (g, alpha, expected) in [(path(3), 2.0, 2.0), (path(5), 2.0, 8.0), (path(2), 1.0, 0.5)] {
            let (d, b) = setup(&g);
            let k = Kernel::power(alpha, d.diameter());
            let m = maximize_energy(&g, &d, &b, &k, opts).unwrap();
            assert!((m.energy - expected).abs() < 1e-9, "{} vs {expected}", m.energy);
            assert!(m.interior_mass <= 1e-12);
        }
    }

    #[test]
    fn brute_force_examples() {
        let (d, _) = setup(&path(3));
        let r = brute_force_max(&d, &Kernel::power(2.0, 2), 20).unwrap();
        assert!((r.energy - 2.0).abs() < 1e-12);
        assert!((r.mu.mass[0] - 0.5).abs() < 1e-9);

        let (d, _) = setup(&path(1));
        let r = brute_force_max(&d, &Kernel::from_values(vec![0.7]), 20).unwrap();
        assert_eq!((r.mu.mass.clone(), r.energy), (vec![1.0], 0.7));

        let (d, _) = setup(&cycle(4));
        let r = brute_force_max(&d, &Kernel::power(2.0, 2), 20).unwrap();
        assert!((r.energy - 2.0).abs() < 1e-12);
    }
}
