//! Robust representation learning toolkit.
//!
//! Provides robust penalty functions (Huber and the nonconvex Tiber), a block
//! proximal-alternating-linearized-minimization (PALM) solver, factorized
//! robust PCA for background/foreground separation, robust spectral
//! clustering via penalized symmetric eigen-factorization, and sparse
//! subspace clustering, together with seeded synthetic data generators.
//!
//! All numerical core code is generic over the scalar type through the
//! [`Real`] trait; `f64` is the default used by the CLI and the concrete
//! aliases below.

use num_traits::{Float, FromPrimitive, ToPrimitive};

pub mod clustering;
pub mod datagen;
pub mod io;
pub mod linalg;
pub mod penalties;
pub mod rpca;
pub mod solver;

/// Scalar type over which the numerical core is generic.
///
/// Combines nalgebra's field requirements with the `num-traits` float
/// interface. Implemented for `f32` and `f64`.
pub trait Real: nalgebra::RealField + Float + FromPrimitive + ToPrimitive + Copy {
    /// Converts an `f64` constant (tolerances, defaults) into this type.
    fn c(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Dense column-major real matrix, the universal data carrier.
pub type Mat<T> = nalgebra::DMatrix<T>;
/// Dense column vector.
pub type Vector<T> = nalgebra::DVector<T>;

/// Default-precision matrix.
pub type Mat64 = Mat<f64>;
/// Single-precision matrix.
pub type Mat32 = Mat<f32>;

pub use clustering::{
    build_similarity, clustering_error, eig_factorize, gaussian_similarity, kmeans,
    knn_similarity, robust_eig_factorize, spectral_cluster, subspace_represent,
    ClusterAssignment, ClusteringError, SimilarityMatrix, SpectralEmbedding, SpectralOutcome,
};
pub use datagen::{
    gen_dynamic_background, gen_five_clusters, gen_union_of_subspaces, DatagenError,
    SyntheticDataset,
};
pub use penalties::{
    elementwise_gradient, elementwise_value_sum, penalty_gradient, penalty_value, soft_threshold,
    PenaltyFamily, PenaltySpec,
};
pub use rpca::{
    foreground_mask, mask_f1, recover_sparse, rpca_solve, RpcaError, RpcaInit, RpcaInput,
    RpcaResult,
};
pub use solver::{
    palm_solve, project_orthonormal_columns, prox_l1_offdiag, BlockProblem, SolveConfig,
    SolveReport, SolverError,
};
