//! Block proximal-alternating-linearized-minimization (PALM) engine.
//!
//! Minimizes `f(x_1, ..., x_B) + sum_b g_b(x_b)` where `f` is smooth and each
//! `g_b` is a simple constraint or regularizer handled through its proximal
//! map. Every outer iteration cycles the blocks in declared order, takes a
//! gradient step on the smooth part with a backtracked step size, then
//! applies the block's prox. Step sizes are found by halving from
//! `step_init` until the sufficient-decrease inequality for proximal
//! gradient holds, which sidesteps estimating Lipschitz constants of the
//! nonconvex couplings that arise in factorized objectives.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::penalties::soft_threshold;
use crate::{Mat, Real};
use num_traits::Float;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    /// The smooth objective evaluated to NaN or infinity at the initial
    /// point or during iteration; signals bad data or a divergent step.
    #[error("smooth objective is not finite")]
    NonFiniteObjective,
    /// The orthogonal polar factor is not unique because the input is
    /// (numerically) rank deficient.
    #[error("matrix is rank deficient, projection not unique")]
    RankDeficient,
}

/// Stopping and step-size configuration for a PALM solve.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct SolveConfig {
    pub max_iters: usize,
    /// Relative objective-change stopping threshold.
    pub tol: f64,
    pub step_init: f64,
    /// Step shrink factor in (0, 1) for the backtracking line search.
    pub backtrack_factor: f64,
    /// Seed for any randomized initialization done by callers.
    pub seed: u64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            max_iters: 2000,
            tol: 1e-7,
            step_init: 1.0,
            backtrack_factor: 0.5,
            seed: 0,
        }
    }
}

impl SolveConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.max_iters < 1 {
            return Err("max_iters must be >= 1".into());
        }
        if !(self.tol > 0.0) {
            return Err("tol must be positive".into());
        }
        if !(self.step_init > 0.0) {
            return Err("step_init must be positive".into());
        }
        if !(self.backtrack_factor > 0.0 && self.backtrack_factor < 1.0) {
            return Err("backtrack_factor must lie in (0, 1)".into());
        }
        Ok(())
    }
}

/// Outcome bookkeeping for a solve.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveReport {
    /// Outer iterations performed.
    pub iterations: usize,
    /// Total objective (smooth + nonsmooth) at the initial point and after
    /// every outer iteration. Non-increasing per accepted step.
    pub objective_trace: Vec<f64>,
    pub converged: bool,
    /// Wall time in seconds.
    pub wall_time: f64,
}

impl SolveReport {
    pub fn final_objective(&self) -> f64 {
        *self.objective_trace.last().expect("trace never empty")
    }
}

/// Proximal map of one block: `(point, step) -> feasible point`.
pub type BlockProx<'a, T> = Box<dyn Fn(&Mat<T>, T) -> Result<Mat<T>, SolverError> + 'a>;

/// A smooth objective over an ordered list of matrix blocks, with one
/// proximal map per block and the (separable) nonsmooth value used for the
/// reported objective trace.
pub struct BlockProblem<'a, T: Real> {
    /// Smooth part evaluated at all blocks.
    pub smooth_value: Box<dyn Fn(&[Mat<T>]) -> T + 'a>,
    /// Gradient of the smooth part with respect to block `b`.
    pub smooth_block_gradient: Box<dyn Fn(usize, &[Mat<T>]) -> Mat<T> + 'a>,
    /// One prox per block, applied after the linearized gradient step.
    pub block_prox: Vec<BlockProx<'a, T>>,
    /// Value of the nonsmooth part (0 for pure constraints).
    pub nonsmooth_value: Box<dyn Fn(&[Mat<T>]) -> T + 'a>,
}

impl<'a, T: Real> BlockProblem<'a, T> {
    /// Prox that leaves the point unchanged (unconstrained block).
    pub fn identity_prox() -> BlockProx<'a, T> {
        Box::new(|x, _| Ok(x.clone()))
    }
}

/// Runs PALM on `problem` from `init` until the relative objective change
/// drops below `config.tol` or `config.max_iters` is reached.
///
/// Returns the final blocks and a [`SolveReport`]. The iterate sequence is
/// deterministic for a fixed problem, initial point, and configuration.
pub fn palm_solve<T: Real>(
    problem: &BlockProblem<'_, T>,
    init: Vec<Mat<T>>,
    config: &SolveConfig,
) -> Result<(Vec<Mat<T>>, SolveReport), SolverError> {
    assert_eq!(
        init.len(),
        problem.block_prox.len(),
        "one prox per block required"
    );
    config.validate().expect("invalid solve config");

    let start = Instant::now();
    let mut blocks = init;

    let finite = |v: T| -> Result<T, SolverError> {
        if Float::is_finite(v) {
            Ok(v)
        } else {
            Err(SolverError::NonFiniteObjective)
        }
    };

    let mut f_smooth = finite((problem.smooth_value)(&blocks))?;
    let mut f_total = f_smooth + (problem.nonsmooth_value)(&blocks);
    let mut trace = vec![f_total.to_f64().unwrap()];

    let step_init = T::c(config.step_init);
    let shrink = T::c(config.backtrack_factor);
    let step_floor = T::c(1e-20);
    let two = T::c(2.0);

    let mut iterations = 0;
    let mut converged = false;

    for _ in 0..config.max_iters {
        iterations += 1;

        for b in 0..blocks.len() {
            let grad = (problem.smooth_block_gradient)(b, &blocks);
            let mut step = step_init;

            loop {
                let trial = &blocks[b] - grad.scale(step);
                let candidate = match (problem.block_prox[b])(&trial, step) {
                    Ok(c) => c,
                    // e.g. a rank-deficient trial point with an orthogonality
                    // prox: the step overshot, shrink it
                    Err(_) => {
                        step *= shrink;
                        if step < step_floor {
                            break;
                        }
                        continue;
                    }
                };
                let delta = &candidate - &blocks[b];

                let old = std::mem::replace(&mut blocks[b], candidate);
                let f_cand = finite((problem.smooth_value)(&blocks))?;

                // Sufficient decrease for the proximal gradient step; together
                // with prox optimality this makes the composite objective
                // non-increasing.
                let model = f_smooth + grad.dot(&delta) + delta.norm_squared() / (two * step);
                if f_cand <= model {
                    f_smooth = f_cand;
                    break;
                }

                blocks[b] = old;
                step *= shrink;
                if step < step_floor {
                    // No productive step exists at this scale; keep the block.
                    break;
                }
            }
        }

        let prev = f_total;
        f_total = f_smooth + (problem.nonsmooth_value)(&blocks);
        trace.push(f_total.to_f64().unwrap());

        let prev64 = prev.to_f64().unwrap();
        let change = (f_total.to_f64().unwrap() - prev64).abs();
        if change / prev64.abs().max(1.0) < config.tol {
            converged = true;
            break;
        }
    }

    let report = SolveReport {
        iterations,
        objective_trace: trace,
        converged,
        wall_time: start.elapsed().as_secs_f64(),
    };
    Ok((blocks, report))
}

/// Nearest matrix with orthonormal columns in Frobenius norm: the orthogonal
/// polar factor of `x`.
///
/// Requires `x` to be `m x k` with `m >= k` and numerically full column
/// rank; returns [`SolverError::RankDeficient`] when the smallest singular
/// value falls below `1e-12`.
pub fn project_orthonormal_columns<T: Real>(x: &Mat<T>) -> Result<Mat<T>, SolverError> {
    let (m, k) = x.shape();
    assert!(m >= k, "need at least as many rows as columns");
    let svd = x.clone().svd(true, true);
    let smin = svd
        .singular_values
        .iter()
        .cloned()
        .fold(Float::infinity(), |a: T, b| if b < a { b } else { a });
    if smin < T::c(1e-12) {
        return Err(SolverError::RankDeficient);
    }
    let u = svd.u.expect("requested");
    let v_t = svd.v_t.expect("requested");
    Ok(u * v_t)
}

/// Entrywise soft threshold at level `tau` on the off-diagonal entries of a
/// square matrix; the diagonal is set exactly to zero.
pub fn prox_l1_offdiag<T: Real>(c: &Mat<T>, tau: T) -> Mat<T> {
    assert_eq!(c.nrows(), c.ncols(), "matrix must be square");
    let mut out = c.map(|x| soft_threshold(x, tau));
    for i in 0..out.nrows() {
        out[(i, i)] = T::zero();
    }
    out
}
