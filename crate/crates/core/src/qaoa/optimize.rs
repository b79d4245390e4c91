//! Angle optimization: multi-start BFGS on exact adjoint gradients, and a
//! dense grid scan that serves as the global oracle at depth 1.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qaoa::sim::{AngleVector, QaoaProblem};

pub const METHOD: &str = "bfgs-adjoint";

#[derive(Clone, Debug, PartialEq)]
pub struct OptimizerConfig {
    pub starts: usize,
    /// Convergence tolerance on the objective between iterations.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Points per axis for the depth-1 grid oracle.
    pub grid_resolution: usize,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            starts: 200,
            tolerance: 1e-8,
            max_iterations: 500,
            grid_resolution: 64,
        }
    }
}

/// Where the reported optimum came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    RandomStart(usize),
    /// The previous depth's optimum padded with an identity layer.
    Padded,
    Grid,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OptimizerStats {
    pub method: &'static str,
    pub starts: usize,
    pub best_origin: Origin,
    pub evaluations: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Optimum {
    pub angles: AngleVector,
    pub exp_c: f64,
    pub stats: OptimizerStats,
}

struct LocalResult {
    x: Vec<f64>,
    value: f64,
    evaluations: u64,
}

/// Minimizes `f` by BFGS with a backtracking Armijo line search. `f` returns
/// the objective and its gradient.
fn bfgs<F>(mut f: F, x0: Vec<f64>, tolerance: f64, max_iterations: usize) -> LocalResult
where
    F: FnMut(&[f64]) -> (f64, Vec<f64>),
{
    let dim = x0.len();
    let mut x = x0;
    let (mut fx, mut g) = f(&x);
    let mut evaluations = 1u64;
    let mut h = identity(dim);
    let grad_tol = tolerance.sqrt();

    for _ in 0..max_iterations {
        let mut d: Vec<f64> = (0..dim).map(|i| -dot(&h[i], &g)).collect();
        let mut slope = dot(&d, &g);
        if slope >= 0.0 {
            h = identity(dim);
            d = g.iter().map(|v| -v).collect();
            slope = -dot(&g, &g);
        }
        if slope == 0.0 {
            break;
        }

        let mut step = 1.0;
        let mut accepted = None;
        for _ in 0..40 {
            let trial: Vec<f64> = x.iter().zip(&d).map(|(xi, di)| xi + step * di).collect();
            let (ft, gt) = f(&trial);
            evaluations += 1;
            if ft <= fx + 1e-4 * step * slope {
                accepted = Some((trial, ft, gt));
                break;
            }
            step *= 0.5;
        }
        let Some((x_new, f_new, g_new)) = accepted else {
            break;
        };

        let s: Vec<f64> = x_new.iter().zip(&x).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = g_new.iter().zip(&g).map(|(a, b)| a - b).collect();
        let sy = dot(&s, &y);
        if sy > 1e-12 {
            bfgs_update(&mut h, &s, &y, sy);
        }

        let decrease = fx - f_new;
        x = x_new;
        fx = f_new;
        g = g_new;
        let gmax = g.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if (decrease.abs() < tolerance && gmax < grad_tol) || gmax < 1e-12 {
            break;
        }
    }
    LocalResult {
        x,
        value: fx,
        evaluations,
    }
}

fn identity(dim: usize) -> Vec<Vec<f64>> {
    (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Inverse-Hessian update `H ← (I - ρ s yᵀ) H (I - ρ y sᵀ) + ρ s sᵀ`.
fn bfgs_update(h: &mut [Vec<f64>], s: &[f64], y: &[f64], sy: f64) {
    let dim = s.len();
    let rho = 1.0 / sy;
    let hy: Vec<f64> = (0..dim).map(|i| dot(&h[i], y)).collect();
    let yhy = dot(y, &hy);
    for i in 0..dim {
        for j in 0..dim {
            h[i][j] += rho * ((1.0 + rho * yhy) * s[i] * s[j] - hy[i] * s[j] - s[i] * hy[j]);
        }
    }
}

/// Local ascent of `⟨C⟩` from `start`.
pub fn polish(
    problem: &QaoaProblem,
    start: &AngleVector,
    config: &OptimizerConfig,
) -> (AngleVector, f64, u64) {
    let result = bfgs(
        |x| {
            let (v, g) = problem.expectation_and_gradient(&AngleVector::from_flat(x));
            (-v, g.into_iter().map(|d| -d).collect())
        },
        start.to_flat(),
        config.tolerance,
        config.max_iterations,
    );
    (
        AngleVector::from_flat(&result.x).canonical(),
        -result.value,
        result.evaluations,
    )
}

/// SplitMix64 finalizer, used to derive one independent stream per start.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn start_seed(seed: u64, graph_key: u64, start: usize) -> u64 {
    mix(mix(mix(seed) ^ graph_key) ^ start as u64)
}

pub fn random_angles(p: usize, stream_seed: u64) -> AngleVector {
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed);
    let mut gammas = Vec::with_capacity(p);
    let mut betas = Vec::with_capacity(p);
    for _ in 0..p {
        gammas.push(rng.gen_range(0.0..TAU));
        betas.push(rng.gen_range(0.0..PI));
    }
    AngleVector::new(gammas, betas)
}

/// Best `⟨C⟩` over `config.starts` random starts (plus an optional padded
/// previous optimum, plus the grid oracle at depth 1). `graph_key` should be
/// an isomorphism invariant so relabeled graphs share their start angles.
pub fn optimize_angles(
    problem: &QaoaProblem,
    p: usize,
    config: &OptimizerConfig,
    seed: u64,
    graph_key: u64,
    previous: Option<&AngleVector>,
) -> Result<Optimum> {
    if !(1..=3).contains(&p) {
        return Err(Error::UnsupportedDepth(p));
    }
    if config.starts == 0 {
        return Err(Error::Parameter("starts must be at least 1".into()));
    }

    let mut evaluations = 0u64;
    let mut best: Option<(AngleVector, f64, Origin)> = None;
    let consider = |angles: AngleVector,
                    value: f64,
                    origin: Origin,
                    best: &mut Option<(AngleVector, f64, Origin)>| {
        if best.as_ref().is_none_or(|(_, v, _)| value > *v) {
            *best = Some((angles, value, origin));
        }
    };

    for s in 0..config.starts {
        let start = random_angles(p, start_seed(seed, graph_key, s));
        let (angles, value, evals) = polish(problem, &start, config);
        evaluations += evals;
        consider(angles, value, Origin::RandomStart(s), &mut best);
    }
    if let Some(prev) = previous {
        let (angles, value, evals) = polish(problem, &prev.padded(p), config);
        evaluations += evals;
        consider(angles, value, Origin::Padded, &mut best);
    }
    if p == 1 {
        let grid = grid_scan_p1(problem, config)?;
        evaluations += grid.evaluations;
        consider(grid.angles, grid.exp_c, Origin::Grid, &mut best);
    }

    let (angles, exp_c, best_origin) = best.expect("at least one start");
    Ok(Optimum {
        angles,
        exp_c,
        stats: OptimizerStats {
            method: METHOD,
            starts: config.starts,
            best_origin,
            evaluations,
        },
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridOptimum {
    pub angles: AngleVector,
    pub exp_c: f64,
    pub evaluations: u64,
}

/// Scans `⟨C⟩` on a uniform grid over `[0, 2π) × [0, π)` and polishes the
/// best cell.
pub fn grid_scan_p1(problem: &QaoaProblem, config: &OptimizerConfig) -> Result<GridOptimum> {
    let res = config.grid_resolution;
    if res < 64 {
        return Err(Error::Parameter(format!(
            "grid resolution must be at least 64 points per axis, got {res}"
        )));
    }
    let mut best = (f64::NEG_INFINITY, 0.0, 0.0);
    for i in 0..res {
        let gamma = TAU * i as f64 / res as f64;
        for j in 0..res {
            let beta = PI * j as f64 / res as f64;
            let angles = AngleVector::new(vec![gamma], vec![beta]);
            let value = problem.expectation(&problem.evolve(&angles));
            if value > best.0 {
                best = (value, gamma, beta);
            }
        }
    }
    let coarse = AngleVector::new(vec![best.1], vec![best.2]);
    let (angles, value, evals) = polish(problem, &coarse, config);
    let evaluations = (res * res) as u64 + evals;
    Ok(if value >= best.0 {
        GridOptimum {
            angles,
            exp_c: value,
            evaluations,
        }
    } else {
        GridOptimum {
            angles: coarse,
            exp_c: best.0,
            evaluations,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn bfgs_minimizes_a_quadratic() {
        let r = bfgs(
            |x| {
                let f = (x[0] - 1.0).powi(2) + 10.0 * (x[1] + 2.0).powi(2);
                (f, vec![2.0 * (x[0] - 1.0), 20.0 * (x[1] + 2.0)])
            },
            vec![5.0, 5.0],
            1e-12,
            200,
        );
        assert!((r.x[0] - 1.0).abs() < 1e-5 && (r.x[1] + 2.0).abs() < 1e-5);
    }

    #[test]
    fn single_edge_grid() {
        let k2 = QaoaProblem::new(&Graph::complete(2).unwrap());
        let grid = grid_scan_p1(&k2, &OptimizerConfig::default()).unwrap();
        assert!((grid.exp_c - 1.0).abs() < 1e-9);
        // sin(γ) sin(4β) = 1 at the optimum
        let (g, b) = (grid.angles.gammas[0], grid.angles.betas[0]);
        assert!((g.sin() * (4.0 * b).sin() - 1.0).abs() < 1e-4);
    }

    #[test]
    fn grid_rejects_coarse_resolution() {
        let k2 = QaoaProblem::new(&Graph::complete(2).unwrap());
        let config = OptimizerConfig {
            grid_resolution: 16,
            ..Default::default()
        };
        assert!(matches!(
            grid_scan_p1(&k2, &config),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn depth_validation() {
        let k3 = QaoaProblem::new(&Graph::complete(3).unwrap());
        let config = OptimizerConfig::default();
        assert!(matches!(
            optimize_angles(&k3, 0, &config, 1, 0, None),
            Err(Error::UnsupportedDepth(0))
        ));
        assert!(matches!(
            optimize_angles(&k3, 4, &config, 1, 0, None),
            Err(Error::UnsupportedDepth(4))
        ));
    }

    #[test]
    fn triangle_solved_at_depth_two() {
        let k3 = QaoaProblem::new(&Graph::complete(3).unwrap());
        let config = OptimizerConfig {
            starts: 20,
            ..Default::default()
        };
        let opt = optimize_angles(&k3, 2, &config, 7, 0, None).unwrap();
        assert!((opt.exp_c - 2.0).abs() < 1e-4, "{}", opt.exp_c);
    }

    #[test]
    fn seeds_are_deterministic() {
        assert_eq!(
            random_angles(3, start_seed(1, 2, 3)),
            random_angles(3, start_seed(1, 2, 3))
        );
        assert_ne!(
            random_angles(3, start_seed(1, 2, 3)),
            random_angles(3, start_seed(1, 2, 4))
        );
    }
}
