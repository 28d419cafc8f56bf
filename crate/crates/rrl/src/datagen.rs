//! Seeded synthetic data generators with planted ground truth.
//!
//! Every generator draws from a ChaCha stream seeded by the caller, so
//! regenerating with the same seed and parameters is bit-identical. Shape
//! constants (cluster centers, the background profile, the foliage region)
//! are fixed in code; only the samples vary with the seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use thiserror::Error;

use crate::clustering::ClusterAssignment;
use crate::{Mat, Real};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DatagenError {
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),
}

/// A generated dataset together with whatever ground truth the generator
/// can plant.
#[derive(Debug, Clone)]
pub struct SyntheticDataset<T: Real> {
    /// Data matrix; columns are samples (points or vectorized frames).
    pub y: Mat<T>,
    pub truth_labels: Option<ClusterAssignment>,
    /// Noise-free low-rank component, when meaningful.
    pub truth_l: Option<Mat<T>>,
    /// Planted sparse-foreground support, when meaningful.
    pub truth_s_support: Option<Mat<u8>>,
    pub seed: u64,
}

/// Five overlapping groups in the plane: four isotropic Gaussians and one
/// axis-aligned uniform rectangle, 100 points per group.
///
/// The groups are deliberately placed close together (spacing about 2.5x the
/// within-group spread) so that nearest-neighbour structure alone does not
/// separate them.
pub fn gen_five_clusters<T: Real>(seed: u64) -> SyntheticDataset<T> {
    const POINTS_PER: usize = 100;
    const STD: f64 = 0.50;
    const CENTERS: [(f64, f64); 4] = [(0.0, 0.0), (1.25, 0.10), (0.10, 1.25), (1.35, 1.35)];
    // rectangle spanning the right flank of the Gaussian quad
    const RECT_X: (f64, f64) = (2.10, 3.30);
    const RECT_Y: (f64, f64) = (0.10, 1.30);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, STD).unwrap();
    let m = 5 * POINTS_PER;
    let mut y = Mat::<T>::zeros(2, m);
    let mut labels = Vec::with_capacity(m);

    for (g, &(cx, cy)) in CENTERS.iter().enumerate() {
        for p in 0..POINTS_PER {
            let col = g * POINTS_PER + p;
            y[(0, col)] = T::c(cx + normal.sample(&mut rng));
            y[(1, col)] = T::c(cy + normal.sample(&mut rng));
            labels.push(g);
        }
    }
    for p in 0..POINTS_PER {
        let col = 4 * POINTS_PER + p;
        y[(0, col)] = T::c(RECT_X.0 + (RECT_X.1 - RECT_X.0) * rng.random::<f64>());
        y[(1, col)] = T::c(RECT_Y.0 + (RECT_Y.1 - RECT_Y.0) * rng.random::<f64>());
        labels.push(4);
    }

    SyntheticDataset {
        y,
        truth_labels: Some(ClusterAssignment::new(labels, 5).unwrap()),
        truth_l: None,
        truth_s_support: None,
        seed,
    }
}

/// Points drawn from a union of random low-dimensional linear subspaces,
/// with dense Gaussian noise and sparse entrywise outliers.
///
/// Each subspace gets a seeded random orthonormal basis; points are the
/// basis times standard Gaussian coefficients. Outliers replace individual
/// entries by `±outlier_magnitude` with probability `outlier_fraction`.
#[allow(clippy::too_many_arguments)]
pub fn gen_union_of_subspaces<T: Real>(
    num_subspaces: usize,
    subspace_dim: usize,
    ambient_dim: usize,
    points_per: usize,
    noise_sigma: f64,
    outlier_fraction: f64,
    outlier_magnitude: f64,
    seed: u64,
) -> Result<SyntheticDataset<T>, DatagenError> {
    if subspace_dim == 0 || subspace_dim >= ambient_dim {
        return Err(DatagenError::InvalidDimensions(format!(
            "subspace_dim {subspace_dim} must lie in 1..{ambient_dim}"
        )));
    }
    if num_subspaces == 0 || points_per == 0 {
        return Err(DatagenError::InvalidDimensions(
            "need at least one subspace and one point".into(),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let std_normal = Normal::new(0.0, 1.0).unwrap();
    let m = num_subspaces * points_per;
    let mut y64 = Mat::<f64>::zeros(ambient_dim, m);
    let mut labels = Vec::with_capacity(m);

    for s in 0..num_subspaces {
        let gauss = Mat::<f64>::from_fn(ambient_dim, subspace_dim, |_, _| {
            std_normal.sample(&mut rng)
        });
        let basis = gauss.qr().q();
        let coeffs =
            Mat::<f64>::from_fn(subspace_dim, points_per, |_, _| std_normal.sample(&mut rng));
        let block = basis * coeffs;
        for p in 0..points_per {
            let col = s * points_per + p;
            y64.set_column(col, &block.column(p));
            labels.push(s);
        }
    }

    for v in y64.iter_mut() {
        *v += noise_sigma * std_normal.sample(&mut rng);
    }
    for v in y64.iter_mut() {
        if rng.random::<f64>() < outlier_fraction {
            let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
            *v = sign * outlier_magnitude;
        }
    }

    Ok(SyntheticDataset {
        y: y64.map(T::c),
        truth_labels: Some(ClusterAssignment::new(labels, num_subspaces).unwrap()),
        truth_l: None,
        truth_s_support: None,
        seed,
    })
}

// Dynamic-background scene constants. The background image is an outer
// product of two smooth profiles (exactly rank 1); the foliage block
// oscillates at two shared temporal frequencies so its span stays low rank;
// the object is a flat bright square sweeping left to right through the
// foliage rows.
const BG_ROW_LO: f64 = 0.40;
const BG_ROW_HI: f64 = 0.80;
const BG_COL_LO: f64 = 0.80;
const BG_COL_HI: f64 = 1.00;
const FOLIAGE_FREQS: [f64; 2] = [0.11, 0.23];
const OBJECT_INTENSITY: f64 = 0.90;

/// Synthetic dynamic-background video: static rank-1 background, an
/// oscillating "foliage" band, and a bright square object translating
/// across the frames. Columns of `y` are column-major vectorized frames.
///
/// `truth_s_support` marks the object pixels per frame; `truth_l` is the
/// static background alone. `object_size = 0` generates no object.
pub fn gen_dynamic_background<T: Real>(
    frames: usize,
    height: usize,
    width: usize,
    object_size: usize,
    dynamic_amplitude: f64,
    seed: u64,
) -> Result<SyntheticDataset<T>, DatagenError> {
    if frames == 0 || height == 0 || width == 0 {
        return Err(DatagenError::InvalidDimensions(
            "frames, height, and width must be positive".into(),
        ));
    }
    if object_size >= height.min(width) && object_size != 0 {
        return Err(DatagenError::InvalidDimensions(format!(
            "object_size {object_size} must be smaller than both frame dimensions"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = height * width;

    // rank-1 background image
    let denom_r = (height - 1).max(1) as f64;
    let denom_c = (width - 1).max(1) as f64;
    let row_profile: Vec<f64> = (0..height)
        .map(|i| BG_ROW_LO + (BG_ROW_HI - BG_ROW_LO) * (std::f64::consts::PI * i as f64 / denom_r).sin().powi(2))
        .collect();
    let col_profile: Vec<f64> = (0..width)
        .map(|j| BG_COL_LO + (BG_COL_HI - BG_COL_LO) * j as f64 / denom_c)
        .collect();
    let background = |r: usize, c: usize| row_profile[r] * col_profile[c];

    // foliage band: middle rows, left half of the frame
    let fol_rows = height / 4..height * 3 / 4;
    let fol_cols = 0..width / 2;
    let mut fol_amp = vec![0.0; n];
    let mut fol_phase = vec![0.0; n];
    let mut fol_freq = vec![0.0; n];
    for c in fol_cols.clone() {
        for r in fol_rows.clone() {
            let p = c * height + r;
            fol_amp[p] = dynamic_amplitude * (0.5 + 0.5 * rng.random::<f64>());
            fol_phase[p] = 2.0 * std::f64::consts::PI * rng.random::<f64>();
            fol_freq[p] = FOLIAGE_FREQS[usize::from(rng.random::<bool>())];
        }
    }

    // object path: fixed rows through the foliage band, sweeping columns
    let obj_row0 = (height - object_size) / 2;
    let obj_col0 = |t: usize| -> usize {
        if frames == 1 || object_size == 0 {
            0
        } else {
            ((width - object_size) * t) / (frames - 1)
        }
    };

    let mut y64 = Mat::<f64>::zeros(n, frames);
    let mut support = Mat::<u8>::zeros(n, frames);
    for t in 0..frames {
        let c0 = obj_col0(t);
        for c in 0..width {
            for r in 0..height {
                let p = c * height + r;
                let mut v = background(r, c);
                if fol_amp[p] != 0.0 {
                    v += fol_amp[p]
                        * (2.0 * std::f64::consts::PI * fol_freq[p] * t as f64 + fol_phase[p])
                            .sin();
                }
                if object_size > 0
                    && r >= obj_row0
                    && r < obj_row0 + object_size
                    && c >= c0
                    && c < c0 + object_size
                {
                    v = OBJECT_INTENSITY;
                    support[(p, t)] = 1;
                }
                y64[(p, t)] = v.clamp(0.0, 1.0);
            }
        }
    }

    let truth_l = Mat::<f64>::from_fn(n, frames, |p, _| {
        let (c, r) = (p / height, p % height);
        background(r, c)
    });

    Ok(SyntheticDataset {
        y: y64.map(T::c),
        truth_labels: None,
        truth_l: Some(truth_l.map(T::c)),
        truth_s_support: Some(support),
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Mat64;

    #[test]
    fn five_clusters_shape_and_determinism() {
        let d = gen_five_clusters::<f64>(7);
        assert_eq!(d.y.shape(), (2, 500));
        let labels = d.truth_labels.as_ref().unwrap();
        let mut hist = [0usize; 5];
        for &l in &labels.labels {
            hist[l] += 1;
        }
        assert_eq!(hist, [100; 5]);

        let d2 = gen_five_clusters::<f64>(7);
        assert_eq!(d.y, d2.y);
        let d3 = gen_five_clusters::<f64>(8);
        assert_ne!(d.y, d3.y);
    }

    #[test]
    fn subspaces_exact_membership_without_noise() {
        let d = gen_union_of_subspaces::<f64>(2, 3, 10, 15, 0.0, 0.0, 5.0, 3).unwrap();
        assert_eq!(d.y.shape(), (10, 30));
        // recompute the first basis from the same stream prefix
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let std_normal = Normal::new(0.0, 1.0).unwrap();
        let gauss = Mat64::from_fn(10, 3, |_, _| std_normal.sample(&mut rng));
        let basis = gauss.qr().q();
        let proj = &basis * basis.transpose();
        for p in 0..15 {
            let col = d.y.column(p);
            let residual = &col - &proj * col;
            assert!(residual.norm() < 1e-12);
        }
    }

    #[test]
    fn subspaces_single_group_labels() {
        let d = gen_union_of_subspaces::<f64>(1, 2, 6, 9, 0.01, 0.0, 5.0, 1).unwrap();
        let labels = d.truth_labels.unwrap();
        assert!(labels.labels.iter().all(|&l| l == 0));
        assert_eq!(labels.k, 1);
    }

    #[test]
    fn subspaces_invalid_dims() {
        assert!(gen_union_of_subspaces::<f64>(2, 5, 5, 10, 0.0, 0.0, 1.0, 0).is_err());
        assert!(gen_union_of_subspaces::<f64>(0, 2, 5, 10, 0.0, 0.0, 1.0, 0).is_err());
    }

    #[test]
    fn static_scene_is_rank_one() {
        let d = gen_dynamic_background::<f64>(10, 8, 8, 0, 0.0, 5).unwrap();
        let svd = d.y.clone().svd(false, false);
        let sv = &svd.singular_values;
        assert!(sv[0] > 1.0);
        // everything beyond the two allowed directions is numerically zero
        for i in 2..sv.len() {
            assert!(sv[i] < 1e-10, "sv[{i}] = {}", sv[i]);
        }
        assert_eq!(d.truth_s_support.unwrap(), Mat::<u8>::zeros(64, 10));
    }

    #[test]
    fn dynamic_background_determinism_and_support() {
        let a = gen_dynamic_background::<f64>(12, 16, 16, 4, 0.08, 2).unwrap();
        let b = gen_dynamic_background::<f64>(12, 16, 16, 4, 0.08, 2).unwrap();
        assert_eq!(a.y, b.y);
        let support = a.truth_s_support.unwrap();
        for t in 0..12 {
            let count: usize = support.column(t).iter().map(|&x| x as usize).sum();
            assert_eq!(count, 16, "object square has 16 pixels per frame");
        }
        // all values are valid intensities
        assert!(a.y.iter().all(|&v| (0.0..=1.0).contains(&v)));
    }
}
