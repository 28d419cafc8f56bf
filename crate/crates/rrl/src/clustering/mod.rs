//! Spectral and subspace clustering with robust eigen-factorization.
//!
//! The spectral pipeline follows the classical three steps — similarity
//! matrix, top-k eigen embedding, row normalization plus k-means — with the
//! eigen step optionally replaced by a penalized symmetric factorization
//! that treats entries inconsistent with a k-block structure as outliers.
//! Subspace clustering obtains a sparse self-representation `C` of the data
//! with a robust data-fit term, builds `W = |C| + |Cᵀ|`, and feeds it to the
//! spectral pipeline.

mod assign;
mod kmeans;

pub use assign::{clustering_error, ClusterAssignment};
pub use kmeans::kmeans;

use num_traits::Float;
use thiserror::Error;

use crate::linalg::{all_finite, symmetry_defect};
use crate::penalties::{elementwise_gradient, elementwise_value_sum};
use crate::solver::{
    palm_solve, project_orthonormal_columns, prox_l1_offdiag, BlockProblem, SolveConfig,
    SolveReport, SolverError,
};
use crate::{Mat, PenaltySpec, Real};

const SYMMETRY_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum ClusteringError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("k-means produced an empty cluster that re-seeding could not fill")]
    KMeansDegenerate,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Symmetric nonnegative affinity matrix. After degree normalization its
/// eigenvalues lie in `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct SimilarityMatrix<T: Real> {
    w: Mat<T>,
}

impl<T: Real> SimilarityMatrix<T> {
    /// Validates symmetry (within `1e-12`) and nonnegativity.
    pub fn new(w: Mat<T>) -> Result<Self, ClusteringError> {
        if w.nrows() != w.ncols() {
            return Err(ClusteringError::InvalidInput("matrix must be square".into()));
        }
        if symmetry_defect(&w) > T::c(1e-12) {
            return Err(ClusteringError::NotSymmetric);
        }
        if w.iter().any(|&v| v < T::zero()) {
            return Err(ClusteringError::InvalidInput(
                "similarity entries must be nonnegative".into(),
            ));
        }
        Ok(Self { w })
    }

    pub fn matrix(&self) -> &Mat<T> {
        &self.w
    }

    pub fn into_matrix(self) -> Mat<T> {
        self.w
    }

    pub fn size(&self) -> usize {
        self.w.nrows()
    }
}

/// Orthonormal spectral embedding: `m x k` with `XᵀX = I_k`.
#[derive(Debug, Clone)]
pub struct SpectralEmbedding<T: Real> {
    pub x: Mat<T>,
    pub row_normalized: bool,
}

impl<T: Real> SpectralEmbedding<T> {
    /// Projects every nonzero row onto the unit sphere; zero rows stay zero.
    pub fn normalize_rows(mut self) -> Self {
        for i in 0..self.x.nrows() {
            let norm = self.x.row(i).norm();
            if norm > T::zero() {
                for j in 0..self.x.ncols() {
                    self.x[(i, j)] /= norm;
                }
            }
        }
        self.row_normalized = true;
        self
    }
}

fn check_symmetric_input<T: Real>(l: &Mat<T>, k: usize) -> Result<(), ClusteringError> {
    if l.nrows() != l.ncols() {
        return Err(ClusteringError::InvalidInput("matrix must be square".into()));
    }
    if k == 0 || k > l.nrows() {
        return Err(ClusteringError::InvalidInput(format!(
            "k = {k} outside 1..={}",
            l.nrows()
        )));
    }
    if !all_finite(l) {
        return Err(ClusteringError::InvalidInput("non-finite entries".into()));
    }
    if symmetry_defect(l) > T::c(SYMMETRY_TOL) {
        return Err(ClusteringError::NotSymmetric);
    }
    Ok(())
}

// Deterministic eigenvector sign: largest-magnitude entry positive.
fn fix_column_signs<T: Real>(x: &mut Mat<T>) {
    for j in 0..x.ncols() {
        let mut lead = T::zero();
        for i in 0..x.nrows() {
            if Float::abs(x[(i, j)]) > Float::abs(lead) {
                lead = x[(i, j)];
            }
        }
        if lead < T::zero() {
            for i in 0..x.nrows() {
                x[(i, j)] = -x[(i, j)];
            }
        }
    }
}

/// Top-k eigenvectors of a symmetric matrix, columns ordered by descending
/// eigenvalue; the reference (non-robust) factorization path.
pub fn eig_factorize<T: Real>(
    l: &Mat<T>,
    k: usize,
) -> Result<SpectralEmbedding<T>, ClusteringError> {
    check_symmetric_input(l, k)?;
    let m = l.nrows();
    let sym = (l + l.transpose()).scale(T::c(0.5));
    let eig = sym.symmetric_eigen();

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .partial_cmp(&eig.eigenvalues[a])
            .expect("finite eigenvalues")
            .then(a.cmp(&b))
    });

    let mut x = Mat::<T>::zeros(m, k);
    for (col, &idx) in order.iter().take(k).enumerate() {
        x.set_column(col, &eig.eigenvectors.column(idx));
    }
    fix_column_signs(&mut x);
    Ok(SpectralEmbedding {
        x,
        row_normalized: false,
    })
}

/// Penalized symmetric eigen-factorization: minimizes the elementwise
/// penalty of `XXᵀ − L` over orthonormal `X`, initialized at the exact
/// top-k eigenvectors. With the quadratic penalty this reproduces
/// [`eig_factorize`]; with a robust penalty it resists entries of `L` that
/// clash with a rank-k block structure.
pub fn robust_eig_factorize<T: Real>(
    l: &Mat<T>,
    k: usize,
    penalty: &PenaltySpec<T>,
    config: &SolveConfig,
) -> Result<(SpectralEmbedding<T>, SolveReport), ClusteringError> {
    check_symmetric_input(l, k)?;
    if !penalty.is_valid() {
        return Err(ClusteringError::InvalidInput("penalty parameters invalid".into()));
    }
    let sym = (l + l.transpose()).scale(T::c(0.5));
    let init = eig_factorize(l, k)?.x;

    let penalty = *penalty;
    let residual = |x: &Mat<T>| x * x.transpose() - &sym;
    let two = T::c(2.0);
    let problem = BlockProblem {
        smooth_value: Box::new(move |blocks: &[Mat<T>]| {
            elementwise_value_sum(&penalty, &residual(&blocks[0]))
        }),
        smooth_block_gradient: Box::new(move |_, blocks: &[Mat<T>]| {
            let g = elementwise_gradient(&penalty, &residual(&blocks[0]));
            (g * &blocks[0]).scale(two)
        }),
        block_prox: vec![Box::new(|x: &Mat<T>, _| project_orthonormal_columns(x))],
        nonsmooth_value: Box::new(|_| T::zero()),
    };

    let (blocks, report) = palm_solve(&problem, vec![init], config)?;
    let mut x = blocks.into_iter().next().unwrap();
    fix_column_signs(&mut x);
    Ok((
        SpectralEmbedding {
            x,
            row_normalized: false,
        },
        report,
    ))
}

/// Everything a spectral clustering run produces.
#[derive(Debug, Clone)]
pub struct SpectralOutcome<T: Real> {
    pub assignment: ClusterAssignment,
    /// Row-normalized embedding that was fed to k-means.
    pub embedding: SpectralEmbedding<T>,
    /// Solve trace of the robust factorization, absent on the classic path.
    pub report: Option<SolveReport>,
}

/// Full spectral clustering: eigen embedding (classic or robust), row
/// normalization, seeded k-means on the rows.
pub fn spectral_cluster<T: Real>(
    w: &SimilarityMatrix<T>,
    k: usize,
    robust: bool,
    penalty: &PenaltySpec<T>,
    config: &SolveConfig,
    seed: u64,
) -> Result<SpectralOutcome<T>, ClusteringError> {
    let (embedding, report) = if robust {
        let (e, r) = robust_eig_factorize(w.matrix(), k, penalty, config)?;
        (e, Some(r))
    } else {
        (eig_factorize(w.matrix(), k)?, None)
    };
    let embedding = embedding.normalize_rows();
    let assignment = kmeans(&embedding.x, k, seed)?;
    Ok(SpectralOutcome {
        assignment,
        embedding,
        report,
    })
}

/// Sparse self-representation `C` of the columns of `Y`: minimizes the
/// robust data fit of `Y − YC` plus `lambda * ||C||_1` subject to a zero
/// diagonal, via PALM with the L1-plus-diagonal prox. Initialized at zero.
pub fn subspace_represent<T: Real>(
    y: &Mat<T>,
    lambda: T,
    penalty: &PenaltySpec<T>,
    config: &SolveConfig,
) -> Result<(Mat<T>, SolveReport), ClusteringError> {
    if !(lambda > T::zero()) {
        return Err(ClusteringError::InvalidInput("lambda must be positive".into()));
    }
    if !all_finite(y) {
        return Err(ClusteringError::InvalidInput("non-finite entries".into()));
    }
    if !penalty.is_valid() {
        return Err(ClusteringError::InvalidInput("penalty parameters invalid".into()));
    }
    let m = y.ncols();
    let penalty = *penalty;
    let residual = |c: &Mat<T>| y - y * c;
    let problem = BlockProblem {
        smooth_value: Box::new(move |blocks: &[Mat<T>]| {
            elementwise_value_sum(&penalty, &residual(&blocks[0]))
        }),
        smooth_block_gradient: Box::new(move |_, blocks: &[Mat<T>]| {
            let g = elementwise_gradient(&penalty, &residual(&blocks[0]));
            -(y.transpose() * g)
        }),
        block_prox: vec![Box::new(move |c: &Mat<T>, step: T| {
            Ok(prox_l1_offdiag(c, lambda * step))
        })],
        nonsmooth_value: Box::new(move |blocks: &[Mat<T>]| {
            let mut acc = T::zero();
            for v in blocks[0].iter() {
                acc += Float::abs(*v);
            }
            lambda * acc
        }),
    };

    let (blocks, report) = palm_solve(&problem, vec![Mat::<T>::zeros(m, m)], config)?;
    Ok((blocks.into_iter().next().unwrap(), report))
}

// Degree normalization W <- D^{-1/2} W D^{-1/2}; zero-degree nodes are left
// unnormalized.
fn normalize_symmetric<T: Real>(mut w: Mat<T>) -> Mat<T> {
    let m = w.nrows();
    let inv_sqrt: Vec<T> = (0..m)
        .map(|i| {
            let degree = w.row(i).iter().fold(T::zero(), |a, &b| a + b);
            if degree > T::zero() {
                T::one() / Float::sqrt(degree)
            } else {
                T::one()
            }
        })
        .collect();
    for j in 0..m {
        for i in 0..m {
            w[(i, j)] *= inv_sqrt[i] * inv_sqrt[j];
        }
    }
    w
}

/// Similarity matrix from a self-representation `C`:
/// columns scaled to unit maximum absolute value, `W = |C| + |Cᵀ|`, then
/// symmetric degree normalization. Zero columns and zero-degree nodes pass
/// through unscaled.
pub fn build_similarity<T: Real>(c: &Mat<T>) -> SimilarityMatrix<T> {
    assert_eq!(c.nrows(), c.ncols(), "C must be square");
    let m = c.nrows();
    debug_assert!(
        (0..m).all(|i| Float::abs(c[(i, i)]) <= T::c(1e-12)),
        "C must have a zero diagonal"
    );

    let mut scaled = c.clone();
    for j in 0..m {
        let max_abs = scaled.column(j).amax();
        if max_abs > T::zero() {
            for i in 0..m {
                scaled[(i, j)] /= max_abs;
            }
        }
    }
    let abs = scaled.map(|v| Float::abs(v));
    let w = &abs + abs.transpose();
    let w = normalize_symmetric(w);
    SimilarityMatrix { w }
}

/// Symmetric k-nearest-neighbour graph similarity of the columns of
/// `points`: `W_ij = 1` when `i` is among the `neighbours` nearest points
/// of `j` or vice versa (ties broken by index), zero diagonal, followed by
/// symmetric degree normalization.
pub fn knn_similarity<T: Real>(points: &Mat<T>, neighbours: usize) -> SimilarityMatrix<T> {
    let m = points.ncols();
    assert!(neighbours >= 1 && neighbours < m, "need 1 <= neighbours < m");
    let mut w = Mat::<T>::zeros(m, m);
    let mut dist: Vec<(f64, usize)> = Vec::with_capacity(m);
    for j in 0..m {
        dist.clear();
        for i in 0..m {
            if i != j {
                let d = (points.column(i) - points.column(j))
                    .norm_squared()
                    .to_f64()
                    .unwrap();
                dist.push((d, i));
            }
        }
        dist.sort_by(|a, b| a.partial_cmp(b).expect("finite distances"));
        for &(_, i) in dist.iter().take(neighbours) {
            w[(i, j)] = T::one();
            w[(j, i)] = T::one();
        }
    }
    let w = normalize_symmetric(w);
    SimilarityMatrix { w }
}

/// Gaussian-kernel similarity of the columns of `points`:
/// `W_ij = exp(-||y_i - y_j||^2 / (2 bandwidth^2))` with zero diagonal,
/// followed by symmetric degree normalization.
pub fn gaussian_similarity<T: Real>(points: &Mat<T>, bandwidth: T) -> SimilarityMatrix<T> {
    assert!(bandwidth > T::zero(), "bandwidth must be positive");
    let m = points.ncols();
    let two = T::c(2.0);
    let denom = two * bandwidth * bandwidth;
    let mut w = Mat::<T>::zeros(m, m);
    for i in 0..m {
        for j in (i + 1)..m {
            let d = (points.column(i) - points.column(j)).norm_squared();
            let val = Float::exp(-(d / denom));
            w[(i, j)] = val;
            w[(j, i)] = val;
        }
    }
    let w = normalize_symmetric(w);
    SimilarityMatrix { w }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::principal_angle;
    use crate::solver::tests::assert_descent;
    use crate::Mat64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, Normal};

    fn random_orthogonal(m: usize, seed: u64) -> Mat64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let normal = Normal::new(0.0, 1.0).unwrap();
        Mat64::from_fn(m, m, |_, _| normal.sample(&mut rng)).qr().q()
    }

    fn symmetric_with_eigenvalues(values: &[f64], seed: u64) -> Mat64 {
        let m = values.len();
        let q = random_orthogonal(m, seed);
        let lambda = Mat64::from_diagonal(&nalgebra::DVector::from_row_slice(values));
        &q * lambda * q.transpose()
    }

    #[test]
    fn diagonal_eigenvectors() {
        let l = Mat64::from_diagonal(&nalgebra::DVector::from_row_slice(&[1.0, 0.5]));
        let e = eig_factorize(&l, 1).unwrap();
        assert!((e.x[(0, 0)].abs() - 1.0).abs() < 1e-12);
        assert!(e.x[(1, 0)].abs() < 1e-12);
    }

    #[test]
    fn identity_matrix_spans_invariant_subspace() {
        let l = Mat64::identity(4, 4);
        let e = eig_factorize(&l, 2).unwrap();
        let xtx = e.x.transpose() * &e.x;
        assert!((xtx - Mat64::identity(2, 2)).norm() < 1e-10);
        // X Xᵀ L = X Xᵀ for any invariant subspace of the identity
        let p = &e.x * e.x.transpose();
        assert!((&p * &l - &p).norm() < 1e-10);
    }

    #[test]
    fn matches_top_eigenspace_of_random_psd() {
        let l = symmetric_with_eigenvalues(&[0.9, 0.7, 0.5, 0.2, 0.1, 0.05], 3);
        let e = eig_factorize(&l, 3).unwrap();
        // brute-force oracle: full eigendecomposition, independent ordering
        let eig = l.clone().symmetric_eigen();
        let mut pairs: Vec<(f64, usize)> = eig
            .eigenvalues
            .iter()
            .cloned()
            .zip(0..)
            .map(|(v, i)| (v, i))
            .collect();
        pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
        let mut oracle = Mat64::zeros(6, 3);
        for (col, &(_, idx)) in pairs.iter().take(3).enumerate() {
            oracle.set_column(col, &eig.eigenvectors.column(idx));
        }
        assert!(principal_angle(&e.x, &oracle) < 1e-8);
    }

    #[test]
    fn asymmetric_input_rejected() {
        let mut l = Mat64::identity(3, 3);
        l[(0, 1)] = 1e-3;
        assert!(matches!(
            eig_factorize(&l, 1),
            Err(ClusteringError::NotSymmetric)
        ));
    }

    #[test]
    fn robust_with_quadratic_matches_classic() {
        let l = symmetric_with_eigenvalues(&[0.95, 0.8, 0.6, 0.3, 0.1], 7);
        let classic = eig_factorize(&l, 2).unwrap();
        let (robust, report) = robust_eig_factorize(
            &l,
            2,
            &PenaltySpec::quadratic(),
            &SolveConfig::default(),
        )
        .unwrap();
        assert!(principal_angle(&classic.x, &robust.x) < 1e-6);
        assert_descent(&report);
        let xtx = robust.x.transpose() * &robust.x;
        assert!((xtx - Mat64::identity(2, 2)).norm() < 1e-10);
    }

    #[test]
    fn robust_resists_spike_corruption() {
        // ideal two-block similarity, scaled so eigenvalues are <= 1
        let m = 12;
        let mut ideal = Mat64::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                if (i < 6) == (j < 6) {
                    ideal[(i, j)] = 1.0 / 6.0;
                }
            }
        }
        let clean = eig_factorize(&ideal, 2).unwrap();

        let mut corrupted = ideal.clone();
        for &(i, j) in &[(0, 7), (1, 9), (2, 11), (3, 8), (5, 10)] {
            corrupted[(i, j)] = 0.9;
            corrupted[(j, i)] = 0.9;
        }
        let classic = eig_factorize(&corrupted, 2).unwrap();
        let (robust, _) = robust_eig_factorize(
            &corrupted,
            2,
            &PenaltySpec::huber(0.1),
            &SolveConfig::default(),
        )
        .unwrap();
        let angle_classic = principal_angle(&classic.x, &clean.x);
        let angle_robust = principal_angle(&robust.x, &clean.x);
        assert!(
            angle_robust < angle_classic,
            "robust {angle_robust} vs classic {angle_classic}"
        );
    }

    #[test]
    fn robust_feasible_when_k_equals_m() {
        let l = symmetric_with_eigenvalues(&[0.9, 0.5, 0.2], 4);
        let (e, _) = robust_eig_factorize(
            &l,
            3,
            &PenaltySpec::huber(0.5),
            &SolveConfig::default(),
        )
        .unwrap();
        let xtx = e.x.transpose() * &e.x;
        assert!((xtx - Mat64::identity(3, 3)).norm() < 1e-10);
    }

    #[test]
    fn block_diagonal_similarity_clusters_exactly() {
        let mut w = Mat64::zeros(7, 7);
        for i in 0..7 {
            for j in 0..7 {
                if (i < 3) == (j < 3) {
                    w[(i, j)] = 1.0;
                }
            }
        }
        let w = SimilarityMatrix::new(normalize_symmetric(w)).unwrap();
        let out = spectral_cluster(
            &w,
            2,
            false,
            &PenaltySpec::huber(1.0),
            &SolveConfig::default(),
            0,
        )
        .unwrap();
        let labels = &out.assignment.labels;
        assert_eq!(labels[0..3], [labels[0]; 3]);
        assert_eq!(labels[3..7], [labels[3]; 4]);
        assert_ne!(labels[0], labels[3]);
    }

    #[test]
    fn all_ones_single_cluster() {
        let w = SimilarityMatrix::new(normalize_symmetric(Mat64::from_element(5, 5, 1.0))).unwrap();
        let out = spectral_cluster(
            &w,
            1,
            false,
            &PenaltySpec::huber(1.0),
            &SolveConfig::default(),
            3,
        )
        .unwrap();
        assert!(out.assignment.labels.iter().all(|&l| l == 0));
    }

    #[test]
    fn build_similarity_hand_example() {
        let mut c = Mat64::zeros(2, 2);
        c[(0, 1)] = 5.0;
        let w = build_similarity(&c);
        let expected = Mat64::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        assert!((w.matrix() - expected).norm() < 1e-15);
        // eigenvalues of [[0,1],[1,0]] are {1, -1}
        let eig = w.matrix().clone().symmetric_eigen();
        let mut vals: Vec<f64> = eig.eigenvalues.iter().cloned().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((vals[0] + 1.0).abs() < 1e-12 && (vals[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn build_similarity_zero_and_blocks() {
        let w = build_similarity(&Mat64::zeros(3, 3));
        assert_eq!(w.matrix(), &Mat64::zeros(3, 3));

        // block-diagonal C stays block-diagonal
        let mut c = Mat64::zeros(4, 4);
        c[(0, 1)] = 2.0;
        c[(1, 0)] = -1.0;
        c[(2, 3)] = 0.5;
        c[(3, 2)] = 0.25;
        let w = build_similarity(&c);
        for &(i, j) in &[(0, 2), (0, 3), (1, 2), (1, 3)] {
            assert_eq!(w.matrix()[(i, j)], 0.0);
            assert_eq!(w.matrix()[(j, i)], 0.0);
        }
    }

    #[test]
    fn normalized_similarity_spectrum_is_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let normal = Normal::new(0.0, 1.0).unwrap();
        let mut c = Mat64::from_fn(8, 8, |_, _| normal.sample(&mut rng));
        for i in 0..8 {
            c[(i, i)] = 0.0;
        }
        let w = build_similarity(&c);
        assert!(symmetry_defect(w.matrix()) <= 1e-12);
        assert!(w.matrix().iter().all(|&v| v >= 0.0));
        let eig = w.matrix().clone().symmetric_eigen();
        for v in eig.eigenvalues.iter() {
            assert!(v.abs() <= 1.0 + 1e-10, "eigenvalue {v} escapes [-1, 1]");
        }
    }

    #[test]
    fn subspace_large_lambda_kills_c() {
        let y = Mat64::from_fn(4, 6, |i, j| ((i + 2 * j) % 5) as f64);
        let lambda = 1e6 * (y.transpose() * &y).amax();
        let (c, _) = subspace_represent(
            &y,
            lambda,
            &PenaltySpec::huber(0.5),
            &SolveConfig::default(),
        )
        .unwrap();
        assert_eq!(c, Mat64::zeros(6, 6));
    }

    #[test]
    fn subspace_duplicate_columns_find_each_other() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let normal = Normal::new(0.0, 1.0).unwrap();
        let mut y = Mat64::zeros(6, 4);
        let dup: Vec<f64> = (0..6).map(|_| normal.sample(&mut rng)).collect();
        for i in 0..6 {
            y[(i, 0)] = dup[i];
            y[(i, 1)] = dup[i];
        }
        // remaining columns orthogonal to the duplicated direction
        y[(0, 2)] = dup[1];
        y[(1, 2)] = -dup[0];
        y[(2, 3)] = dup[3];
        y[(3, 3)] = -dup[2];
        let (c, report) = subspace_represent(
            &y,
            0.05,
            &PenaltySpec::huber(0.5),
            &SolveConfig {
                tol: 1e-10,
                ..Default::default()
            },
        )
        .unwrap();
        assert_descent(&report);
        for i in 0..4 {
            assert_eq!(c[(i, i)], 0.0);
        }
        // the twin dominates each duplicated column's support
        for col in 0..2 {
            let twin = 1 - col;
            for i in 0..4 {
                if i != twin && i != col {
                    assert!(
                        c[(twin, col)].abs() > c[(i, col)].abs(),
                        "column {col}: twin {} not dominant",
                        c[(twin, col)]
                    );
                }
            }
        }
    }

    #[test]
    fn subspace_quadratic_descends_from_zero() {
        let y = Mat64::identity(5, 5).scale(2.0);
        let spec = PenaltySpec::quadratic();
        let at_zero = elementwise_value_sum(&spec, &y);
        let (_, report) = subspace_represent(&y, 0.1, &spec, &SolveConfig::default()).unwrap();
        assert!(report.final_objective() <= at_zero + 1e-12);
    }

    #[test]
    fn gaussian_similarity_is_valid() {
        let d = crate::datagen::gen_five_clusters::<f64>(1);
        let w = gaussian_similarity(&d.y, 0.3);
        assert_eq!(w.size(), 500);
        assert!(symmetry_defect(w.matrix()) <= 1e-12);
        assert!(w.matrix().iter().all(|&v| v >= 0.0));
    }
}
