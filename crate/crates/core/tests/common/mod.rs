//! Independent oracles and the shared test corpus.
//!
//! Nothing here calls the crate's own solvers: distances come from
//! Floyd-Warshall, linear systems from exact rational elimination, spectra
//! from cyclic Jacobi rotations and walks from dense matrix powers.

#![allow(dead_code)]

use graph_boundary::generators::{
    binary_tree, complete, connected_graphs_up_to, cycle, grid, path, random_connected, random_tree, star,
};
use graph_boundary::Graph;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Q = Ratio<i128>;

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let inf = u32::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for v in 0..n {
        d[v][v] = 0;
        for &w in g.neighbors(v) {
            d[v][w] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Boundary straight from the definition, on Floyd-Warshall distances.
pub fn boundary_by_definition(g: &Graph) -> Vec<usize> {
    let d = floyd_warshall(g);
    (0..g.n())
        .filter(|&v| {
            (0..g.n()).any(|w| {
                w != v && {
                    let s: u64 = g.neighbors(v).iter().map(|&x| u64::from(d[x][w])).sum();
                    g.degree(v) as u64 * u64::from(d[v][w]) > s
                }
            })
        })
        .collect()
}

/// Solve `a x = b` exactly by Gauss-Jordan elimination over the rationals.
pub fn solve_rational(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Vec<Q> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != Q::from_integer(0)).expect("nonsingular");
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col];
        for c in 0..n {
            a[col][c] /= p;
        }
        b[col] /= p;
        for r in 0..n {
            if r != col && a[r][col] != Q::from_integer(0) {
                let f = a[r][col];
                for c in 0..n {
                    let t = a[col][c];
                    a[r][c] -= f * t;
                }
                let t = b[col];
                b[r] -= f * t;
            }
        }
    }
    b
}

/// Exact solution of `Lu = rhs(v)` off `x`, `u = 0` on `x`, as rationals.
pub fn grounded_solve_exact(g: &Graph, x: &[bool], rhs: impl Fn(usize) -> i128) -> Vec<Q> {
    let kept: Vec<usize> = (0..g.n()).filter(|&v| !x[v]).collect();
    let pos = |v: usize| kept.iter().position(|&k| k == v);
    let k = kept.len();
    let mut a = vec![vec![Q::from_integer(0); k]; k];
    let mut b = vec![Q::from_integer(0); k];
    for (i, &v) in kept.iter().enumerate() {
        a[i][i] = Q::from_integer(g.degree(v) as i128);
        for &w in g.neighbors(v) {
            if let Some(j) = pos(w) {
                a[i][j] -= Q::from_integer(1);
            }
        }
        b[i] = Q::from_integer(rhs(v));
    }
    let sol = solve_rational(a, b);
    let mut out = vec![Q::from_integer(0); g.n()];
    for (i, &v) in kept.iter().enumerate() {
        out[v] = sol[i];
    }
    out
}

pub fn to_f64(q: &Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| x.total_cmp(y));
    ev
}

/// Laplacian rows/columns of the vertices not in `x`, built entry by entry.
pub fn grounded_laplacian_rows(g: &Graph, x: &[bool]) -> Vec<Vec<f64>> {
    let kept: Vec<usize> = (0..g.n()).filter(|&v| !x[v]).collect();
    kept.iter()
        .map(|&v| {
            kept.iter()
                .map(|&w| {
                    if v == w {
                        g.degree(v) as f64
                    } else if g.has_edge(v, w) {
                        -1.0
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

/// `e_{v0} P^k` for the walk with absorbing self-loops, via dense matrix powers.
pub fn walk_by_matrix_power(g: &Graph, absorbing: &[bool], v0: usize, k: usize) -> Vec<f64> {
    let n = g.n();
    let mut p = vec![vec![0.0; n]; n];
    for v in 0..n {
        if absorbing[v] {
            p[v][v] = 1.0;
        } else {
            for &w in g.neighbors(v) {
                p[v][w] = 1.0 / g.degree(v) as f64;
            }
        }
    }
    let mul = |a: &Vec<Vec<f64>>, b: &Vec<Vec<f64>>| {
        let mut c = vec![vec![0.0; n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l] != 0.0 {
                    for j in 0..n {
                        c[i][j] += a[i][l] * b[l][j];
                    }
                }
            }
        }
        c
    };
    let mut result: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| f64::from(u8::from(i == j))).collect()).collect();
    let mut base = p;
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(&result, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    result[v0].clone()
}

/// Least constant in `max f <= max_X f + C ‖Lf‖∞ off X`, by one LP per target vertex.
pub fn abp_constant_lp(g: &Graph, x: &[bool]) -> f64 {
    use minilp::{ComparisonOp, OptimizationDirection, Problem};
    let n = g.n();
    let mut best = 0.0f64;
    for t in (0..n).filter(|&t| !x[t]) {
        let mut lp = Problem::new(OptimizationDirection::Maximize);
        let vars: Vec<_> = (0..n)
            .map(|v| {
                let obj = if v == t { 1.0 } else { 0.0 };
                let ub = if x[v] { 0.0 } else { f64::INFINITY };
                lp.add_var(obj, (f64::NEG_INFINITY, ub))
            })
            .collect();
        for v in (0..n).filter(|&v| !x[v]) {
            let mut row = vec![(vars[v], g.degree(v) as f64)];
            row.extend(g.neighbors(v).iter().map(|&w| (vars[w], -1.0)));
            lp.add_constraint(row.as_slice(), ComparisonOp::Le, 1.0);
            lp.add_constraint(row.as_slice(), ComparisonOp::Ge, -1.0);
        }
        let sol = lp.solve().expect("bounded LP");
        best = best.max(sol.objective());
    }
    best
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A named graph of the shared corpus.
pub struct Named {
    pub name: String,
    pub graph: Graph,
}

fn named(name: impl Into<String>, graph: Graph) -> Named {
    Named {
        name: name.into(),
        graph,
    }
}

/// Every connected graph on 2..=7 vertices plus structured families and random graphs.
pub fn corpus() -> Vec<Named> {
    let mut out = Vec::new();
    for (i, g) in connected_graphs_up_to(7).into_iter().enumerate() {
        if g.n() >= 2 {
            out.push(named(format!("small#{i}"), g));
        }
    }
    out.extend(special_families());
    let mut r = rng(20_240_601);
    for i in 0..100 {
        let n = r.gen_range(2..=60);
        out.push(named(format!("random_tree#{i}"), random_tree(n, &mut r)));
    }
    for i in 0..100 {
        let n = r.gen_range(2..=40);
        let p = r.gen_range(0.02..0.3);
        out.push(named(format!("random_connected#{i}"), random_connected(n, p, &mut r)));
    }
    out
}

pub fn special_families() -> Vec<Named> {
    let mut out = Vec::new();
    for n in 2..=30 {
        out.push(named(format!("path({n})"), path(n)));
    }
    for n in 3..=30 {
        out.push(named(format!("cycle({n})"), cycle(n)));
    }
    for r in 2..=10 {
        for c in r..=10 {
            out.push(named(format!("grid({r},{c})"), grid(r, c)));
        }
    }
    for l in 2..=12 {
        out.push(named(format!("star({l})"), star(l)));
    }
    for n in 2..=12 {
        out.push(named(format!("complete({n})"), complete(n)));
    }
    for d in 1..=6 {
        out.push(named(format!("binary_tree({d})"), binary_tree(d)));
    }
    out
}
