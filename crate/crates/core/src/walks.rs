//! Simple random walks absorbed on a vertex set: exact hitting potentials,
//! distributions, Monte-Carlo exit times, and the absorbed walk on an interval.

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{solve_grounded, Grounding};

/// Hard cap on the length of a single simulated walk.
pub const WALK_STEP_CAP: u64 = 1_000_000_000;

fn absorbing_mask(n: usize, absorbing: &[usize]) -> Result<Vec<bool>> {
    if absorbing.is_empty() {
        return Err(Error::EmptyAbsorbingSet);
    }
    let mut mask = vec![false; n];
    for &v in absorbing {
        mask[v] = true;
    }
    Ok(mask)
}

/// Expected number of steps for a walk from each vertex to reach the absorbing set.
#[derive(Debug, Clone)]
pub struct HittingPotential {
    pub phi: Vec<f64>,
    pub absorbing: Vec<bool>,
}

impl HittingPotential {
    pub fn max(&self) -> f64 {
        self.phi.iter().copied().fold(0.0, f64::max)
    }

    /// Largest violation of `phi(v) = 1 + mean of phi over neighbors`, relative to `phi(v)`.
    pub fn relative_residual(&self, g: &Graph) -> f64 {
        (0..g.n())
            .filter(|&v| !self.absorbing[v])
            .map(|v| {
                let mean =
                    g.neighbors(v).iter().map(|&w| self.phi[w]).sum::<f64>() / g.degree(v) as f64;
                (self.phi[v] - 1.0 - mean).abs() / self.phi[v].max(1.0)
            })
            .fold(0.0, f64::max)
    }
}

/// Solve `(D - A) phi = deg` off the absorbing set with `phi = 0` on it.
pub fn hitting_potential(g: &Graph, absorbing: &[usize]) -> Result<HittingPotential> {
    let mask = absorbing_mask(g.n(), absorbing)?;
    let grounding = Grounding::new(g.n(), &mask);
    let rhs: Vec<f64> = grounding.kept.iter().map(|&v| g.degree(v) as f64).collect();
    let x = solve_grounded(g, &grounding, &rhs)?;
    Ok(HittingPotential {
        phi: grounding.extend(&x),
        absorbing: mask,
    })
}

/// Seed and substream id of a counter-based ChaCha generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RngSeed {
    pub seed: u64,
    pub stream: u64,
}

impl RngSeed {
    pub fn new(seed: u64, stream: u64) -> Self {
        RngSeed { seed, stream }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

/// Run one walk from `v0` until it first enters the absorbing set.
pub fn simulate_exit_time(g: &Graph, absorbing: &[usize], v0: usize, seed: RngSeed) -> Result<u64> {
    let mask = absorbing_mask(g.n(), absorbing)?;
    simulate_with_cap(g, &mask, v0, &mut seed.rng(), WALK_STEP_CAP)
}

pub(crate) fn simulate_with_cap<R: Rng>(
    g: &Graph,
    absorbing: &[bool],
    v0: usize,
    rng: &mut R,
    cap: u64,
) -> Result<u64> {
    let mut v = v0;
    let mut steps = 0u64;
    while !absorbing[v] {
        if steps == cap {
            return Err(Error::WalkCapExceeded(cap));
        }
        let nbrs = g.neighbors(v);
        v = nbrs[rng.gen_range(0..nbrs.len())];
        steps += 1;
    }
    Ok(steps)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExitTimeEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub trials: u64,
}

/// Monte-Carlo mean exit time; trial `i` uses substream `i` of `seed`.
pub fn estimate_exit_time(
    g: &Graph,
    absorbing: &[usize],
    v0: usize,
    trials: u64,
    seed: u64,
) -> Result<ExitTimeEstimate> {
    assert!(trials >= 1, "at least one trial");
    let mask = absorbing_mask(g.n(), absorbing)?;
    let samples: Vec<u64> = (0..trials)
        .into_par_iter()
        .map(|i| simulate_with_cap(g, &mask, v0, &mut RngSeed::new(seed, i).rng(), WALK_STEP_CAP))
        .collect::<Result<_>>()?;
    let t = trials as f64;
    let mean = samples.iter().map(|&s| s as f64).sum::<f64>() / t;
    let stderr = if trials > 1 {
        let var = samples.iter().map(|&s| (s as f64 - mean).powi(2)).sum::<f64>() / (t - 1.0);
        (var / t).sqrt()
    } else {
        0.0
    };
    Ok(ExitTimeEstimate {
        mean,
        stderr,
        trials,
    })
}

/// Distribution of the absorbed walk after `step` steps.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkDistribution {
    pub mass: Vec<f64>,
    pub step: usize,
}

impl WalkDistribution {
    pub fn mass_on(&self, mask: &[bool]) -> f64 {
        self.mass.iter().zip(mask).filter(|(_, &m)| m).map(|(p, _)| p).sum()
    }

    pub fn total(&self) -> f64 {
        self.mass.iter().sum()
    }
}

/// Iterator over the absorbed walk distributions `mu_0, mu_1, ...`.
pub struct AbsorbedWalk<'g> {
    g: &'g Graph,
    absorbing: Vec<bool>,
    current: WalkDistribution,
    scratch: Vec<f64>,
}

impl<'g> AbsorbedWalk<'g> {
    pub fn new(g: &'g Graph, absorbing: &[usize], v0: usize) -> Result<Self> {
        let absorbing = absorbing_mask(g.n(), absorbing)?;
        let mut mass = vec![0.0; g.n()];
        mass[v0] = 1.0;
        Ok(AbsorbedWalk {
            g,
            absorbing,
            current: WalkDistribution { mass, step: 0 },
            scratch: vec![0.0; g.n()],
        })
    }

    pub fn current(&self) -> &WalkDistribution {
        &self.current
    }

    pub fn absorbing(&self) -> &[bool] {
        &self.absorbing
    }

    /// Advance one step: interior mass spreads uniformly over neighbors, absorbed mass stays.
    pub fn step(&mut self) -> &WalkDistribution {
        self.scratch.iter_mut().for_each(|x| *x = 0.0);
        for (v, &p) in self.current.mass.iter().enumerate() {
            if p == 0.0 {
                continue;
            }
            if self.absorbing[v] {
                self.scratch[v] += p;
            } else {
                let share = p / self.g.degree(v) as f64;
                for &w in self.g.neighbors(v) {
                    self.scratch[w] += share;
                }
            }
        }
        std::mem::swap(&mut self.current.mass, &mut self.scratch);
        self.current.step += 1;
        &self.current
    }
}

pub fn walk_distribution(g: &Graph, absorbing: &[usize], v0: usize, k: usize) -> Result<WalkDistribution> {
    let mut walk = AbsorbedWalk::new(g, absorbing, v0)?;
    for _ in 0..k {
        walk.step();
    }
    Ok(walk.current)
}

/// `P(T >= k)` for `k = 0..=k_max`, where `T` is the first time the simple walk on
/// `{-m, ..., m}` started at `x0` hits `±m`.
pub fn interval_tail_series(m: u32, x0: i64, k_max: usize) -> Vec<f64> {
    let m = i64::from(m);
    assert!(x0.abs() <= m, "start must lie in the interval");
    let width = (2 * m + 1) as usize;
    let idx = |x: i64| (x + m) as usize;
    let mut mass = vec![0.0; width];
    let mut next = vec![0.0; width];
    let mut out = Vec::with_capacity(k_max + 1);
    out.push(1.0);
    if x0.abs() == m {
        out.resize(k_max + 1, 0.0);
        return out;
    }
    mass[idx(x0)] = 1.0;
    // P(T >= k) = interior mass after k - 1 steps of the killed walk
    for _ in 1..=k_max {
        out.push(mass.iter().sum());
        next.iter_mut().for_each(|x| *x = 0.0);
        for x in (-m + 1)..m {
            let p = mass[idx(x)];
            if p == 0.0 {
                continue;
            }
            if x - 1 > -m {
                next[idx(x - 1)] += 0.5 * p;
            }
            if x + 1 < m {
                next[idx(x + 1)] += 0.5 * p;
            }
        }
        std::mem::swap(&mut mass, &mut next);
    }
    out
}

pub fn interval_tail_exact(m: u32, x0: i64, k: usize) -> f64 {
    interval_tail_series(m, x0, k)[k]
}

/// Expected exit time of the interval walk, solved in exact rational arithmetic.
pub fn interval_mean_exact(m: u32, x0: i64) -> Ratio<i128> {
    let m = i64::from(m);
    assert!(x0.abs() <= m);
    if m == 0 || x0.abs() == m {
        return Ratio::from_integer(0);
    }
    // interior unknowns x = -m+1 ..= m-1: T(x) - T(x-1)/2 - T(x+1)/2 = 1 (Thomas algorithm)
    let k = (2 * m - 1) as usize;
    let half = Ratio::new(1i128, 2);
    let one = Ratio::from_integer(1i128);
    let mut c = vec![Ratio::from_integer(0i128); k];
    let mut d = vec![Ratio::from_integer(0i128); k];
    for i in 0..k {
        let (prev_c, prev_d) = if i == 0 {
            (Ratio::from_integer(0), Ratio::from_integer(0))
        } else {
            (c[i - 1], d[i - 1])
        };
        let denom = one - (-half) * prev_c;
        c[i] = -half / denom;
        d[i] = (one - (-half) * prev_d) / denom;
    }
    let mut t = vec![Ratio::from_integer(0i128); k];
    t[k - 1] = d[k - 1];
    for i in (0..k - 1).rev() {
        t[i] = d[i] - c[i] * t[i + 1];
    }
    t[(x0 + m - 1) as usize]
}
