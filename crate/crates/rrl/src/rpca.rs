//! Factorized robust PCA.
//!
//! Fits a rank-`k` background `L = UᵀV` to a data matrix `Y` by minimizing a
//! robust penalty of the residual `UᵀV − Y` over the factors, then recovers
//! the sparse foreground `S` in closed form by soft thresholding the
//! residual at the penalty's dead-zone level. Working with the factors keeps
//! the variable count at `k(n+m)` and the objective smooth, so no SVDs are
//! needed inside the iteration.

use num_traits::Float;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use thiserror::Error;

use crate::linalg::all_finite;
use crate::penalties::{elementwise_gradient, elementwise_value_sum, soft_threshold};
use crate::solver::{palm_solve, BlockProblem, SolveConfig, SolveReport, SolverError};
use crate::{Mat, PenaltyFamily, PenaltySpec, Real};

#[derive(Debug, Error)]
pub enum RpcaError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Factor initialization strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RpcaInit {
    /// Rank-k truncated SVD of `Y`; starts the solve near the
    /// quadratic-regime solution.
    #[default]
    Svd,
    /// Seeded Gaussian factors, scaled by `k^{-1/2}`.
    Random,
}

/// Problem statement: data, declared rank, and the robust penalty.
#[derive(Debug, Clone)]
pub struct RpcaInput<T: Real> {
    /// `n x m` data, one column per vectorized frame.
    pub y: Mat<T>,
    /// Factor rank `k`, expected to be far below `min(n, m)`.
    pub rank: usize,
    /// Huber or Tiber.
    pub penalty: PenaltySpec<T>,
    pub init: RpcaInit,
}

impl<T: Real> RpcaInput<T> {
    pub fn new(y: Mat<T>, rank: usize, penalty: PenaltySpec<T>) -> Self {
        Self {
            y,
            rank,
            penalty,
            init: RpcaInit::Svd,
        }
    }

    fn validate(&self) -> Result<(), RpcaError> {
        let (n, m) = self.y.shape();
        if self.rank == 0 || self.rank > n.min(m) {
            return Err(RpcaError::InvalidInput(format!(
                "rank {} outside 1..={}",
                self.rank,
                n.min(m)
            )));
        }
        if !all_finite(&self.y) {
            return Err(RpcaError::InvalidInput("Y contains non-finite entries".into()));
        }
        if !self.penalty.is_valid() {
            return Err(RpcaError::InvalidInput("penalty parameters invalid".into()));
        }
        if self.penalty.family == PenaltyFamily::Quadratic {
            return Err(RpcaError::InvalidInput(
                "quadratic penalty recovers no sparse component; use huber or tiber".into(),
            ));
        }
        Ok(())
    }
}

/// Result of a robust PCA solve. `l = uᵀ v` by construction and `s` is the
/// soft threshold of `l − y` at the penalty's dead-zone level, so
/// `rank(l) <= k` structurally.
#[derive(Debug, Clone)]
pub struct RpcaResult<T: Real> {
    /// `k x n` left factor.
    pub u: Mat<T>,
    /// `k x m` right factor.
    pub v: Mat<T>,
    /// Low-rank background `uᵀ v`.
    pub l: Mat<T>,
    /// Sparse foreground.
    pub s: Mat<T>,
    pub report: SolveReport,
}

impl<T: Real> RpcaResult<T> {
    pub fn rank(&self) -> usize {
        self.u.nrows()
    }
}

fn init_factors<T: Real>(input: &RpcaInput<T>, config: &SolveConfig) -> (Mat<T>, Mat<T>) {
    let (n, m) = input.y.shape();
    let k = input.rank;
    match input.init {
        RpcaInit::Svd => {
            let svd = input.y.clone().svd(true, true);
            let u_full = svd.u.expect("requested");
            let v_t_full = svd.v_t.expect("requested");
            let mut u = Mat::<T>::zeros(k, n);
            let mut v = Mat::<T>::zeros(k, m);
            for r in 0..k {
                let scale = Float::sqrt(svd.singular_values[r]);
                for j in 0..n {
                    u[(r, j)] = scale * u_full[(j, r)];
                }
                for j in 0..m {
                    v[(r, j)] = scale * v_t_full[(r, j)];
                }
            }
            (u, v)
        }
        RpcaInit::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let normal = Normal::new(0.0, 1.0 / (k as f64).sqrt()).unwrap();
            let u = Mat::<T>::from_fn(k, n, |_, _| T::c(normal.sample(&mut rng)));
            let v = Mat::<T>::from_fn(k, m, |_, _| T::c(normal.sample(&mut rng)));
            (u, v)
        }
    }
}

/// Solves the factorized robust PCA problem with PALM over the blocks
/// `(U, V)` and recovers `L` and `S`.
pub fn rpca_solve<T: Real>(
    input: &RpcaInput<T>,
    config: &SolveConfig,
) -> Result<RpcaResult<T>, RpcaError> {
    input.validate()?;
    let penalty = input.penalty;
    let y = &input.y;

    let residual = |blocks: &[Mat<T>]| blocks[0].tr_mul(&blocks[1]) - y;
    let problem = BlockProblem {
        smooth_value: Box::new(move |blocks: &[Mat<T>]| {
            elementwise_value_sum(&penalty, &residual(blocks))
        }),
        smooth_block_gradient: Box::new(move |b, blocks: &[Mat<T>]| {
            let g = elementwise_gradient(&penalty, &residual(blocks));
            match b {
                0 => &blocks[1] * g.transpose(),
                _ => &blocks[0] * g,
            }
        }),
        block_prox: vec![BlockProblem::identity_prox(), BlockProblem::identity_prox()],
        nonsmooth_value: Box::new(|_| T::zero()),
    };

    let (u0, v0) = init_factors(input, config);
    let (blocks, report) = palm_solve(&problem, vec![u0, v0], config)?;
    let mut it = blocks.into_iter();
    let (u, v) = (it.next().unwrap(), it.next().unwrap());

    let l = u.tr_mul(&v);
    let s = recover_sparse(&l, y, &penalty);
    Ok(RpcaResult { u, v, l, s, report })
}

/// Closed-form sparse component: entrywise soft threshold of `L − Y` at the
/// penalty's dead-zone level (`kappa` for Huber, `kappa * sigma` for Tiber).
pub fn recover_sparse<T: Real>(l: &Mat<T>, y: &Mat<T>, penalty: &PenaltySpec<T>) -> Mat<T> {
    assert_eq!(l.shape(), y.shape(), "shape mismatch");
    let level = penalty.threshold_level();
    if Float::is_infinite(level) {
        return Mat::<T>::zeros(l.nrows(), l.ncols());
    }
    (l - y).map(|r| soft_threshold(r, level))
}

/// Binary foreground mask: 1 where `S` is nonzero. Soft thresholding
/// produces exact zeros, so no epsilon is involved.
pub fn foreground_mask<T: Real>(s: &Mat<T>) -> Mat<u8> {
    s.map(|v| u8::from(v != T::zero()))
}

/// F1 score of a predicted binary mask against a reference mask.
pub fn mask_f1(pred: &Mat<u8>, truth: &Mat<u8>) -> f64 {
    assert_eq!(pred.shape(), truth.shape());
    let (mut tp, mut fp, mut fn_) = (0u64, 0u64, 0u64);
    for (p, t) in pred.iter().zip(truth.iter()) {
        match (*p != 0, *t != 0) {
            (true, true) => tp += 1,
            (true, false) => fp += 1,
            (false, true) => fn_ += 1,
            (false, false) => {}
        }
    }
    if 2 * tp + fp + fn_ == 0 {
        return 1.0;
    }
    2.0 * tp as f64 / (2 * tp + fp + fn_) as f64
}
