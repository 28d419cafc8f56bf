//! Lloyd's algorithm with k-means++ seeding, deterministic under a seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{ClusterAssignment, ClusteringError};
use crate::{Mat, Real};

const RESTARTS: usize = 10;
const MAX_LLOYD_ITERS: usize = 200;
const MAX_EMPTY_REPAIRS: usize = 5;

/// Clusters the rows of `points` into `k` groups.
///
/// Runs 10 independent k-means++ seeded restarts of Lloyd's algorithm and
/// keeps the assignment with the lowest within-cluster sum of squares (ties
/// broken by restart order). Identical `(points, k, seed)` give identical
/// output. An empty cluster is re-seeded at the point farthest from its
/// current centroid; if empties persist for 5 consecutive rounds the run
/// fails with [`ClusteringError::KMeansDegenerate`].
pub fn kmeans<T: Real>(
    points: &Mat<T>,
    k: usize,
    seed: u64,
) -> Result<ClusterAssignment, ClusteringError> {
    let m = points.nrows();
    if k == 0 || k > m {
        return Err(ClusteringError::InvalidInput(format!(
            "k = {k} outside 1..={m}"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(f64, Vec<usize>)> = None;
    for _ in 0..RESTARTS {
        let (labels, wcss) = lloyd(points, k, &mut rng)?;
        if best.as_ref().is_none_or(|(bw, _)| wcss < *bw) {
            best = Some((wcss, labels));
        }
    }
    let (_, labels) = best.expect("at least one restart");
    ClusterAssignment::new(labels, k)
}

fn row_dist_sq<T: Real>(points: &Mat<T>, i: usize, centroid: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (j, c) in centroid.iter().enumerate() {
        let d = points[(i, j)].to_f64().unwrap() - c;
        acc += d * d;
    }
    acc
}

fn plusplus_init<T: Real>(points: &Mat<T>, k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let m = points.nrows();
    let d = points.ncols();
    let row = |i: usize| -> Vec<f64> {
        (0..d).map(|j| points[(i, j)].to_f64().unwrap()).collect()
    };

    let mut centroids = vec![row(rng.random_range(0..m))];
    let mut dist = vec![0.0f64; m];
    while centroids.len() < k {
        let mut total = 0.0;
        for i in 0..m {
            let nearest = centroids
                .iter()
                .map(|c| row_dist_sq(points, i, c))
                .fold(f64::INFINITY, f64::min);
            dist[i] = nearest;
            total += nearest;
        }
        let next = if total > 0.0 {
            let mut target = rng.random::<f64>() * total;
            let mut chosen = m - 1;
            for (i, &w) in dist.iter().enumerate() {
                target -= w;
                if target <= 0.0 {
                    chosen = i;
                    break;
                }
            }
            chosen
        } else {
            // all remaining mass is zero (duplicate points); pick uniformly
            rng.random_range(0..m)
        };
        centroids.push(row(next));
    }
    centroids
}

fn lloyd<T: Real>(
    points: &Mat<T>,
    k: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(Vec<usize>, f64), ClusteringError> {
    let m = points.nrows();
    let d = points.ncols();
    let mut centroids = plusplus_init(points, k, rng);
    let mut labels = vec![usize::MAX; m];
    let mut consecutive_repairs = 0usize;

    for _ in 0..MAX_LLOYD_ITERS {
        // assignment step, nearest centroid with lowest-index tie break
        let mut changed = false;
        for i in 0..m {
            let mut best_c = 0usize;
            let mut best_d = f64::INFINITY;
            for (c, centroid) in centroids.iter().enumerate() {
                let dist = row_dist_sq(points, i, centroid);
                if dist < best_d {
                    best_d = dist;
                    best_c = c;
                }
            }
            if labels[i] != best_c {
                labels[i] = best_c;
                changed = true;
            }
        }

        let mut counts = vec![0usize; k];
        for &l in &labels {
            counts[l] += 1;
        }
        if counts.iter().any(|&c| c == 0) {
            consecutive_repairs += 1;
            if consecutive_repairs > MAX_EMPTY_REPAIRS {
                return Err(ClusteringError::KMeansDegenerate);
            }
            // re-seed each empty centroid at the point farthest from its
            // currently assigned centroid
            let mut taken = vec![false; m];
            for c in 0..k {
                if counts[c] > 0 {
                    continue;
                }
                let mut far_i = 0usize;
                let mut far_d = -1.0;
                for i in 0..m {
                    if taken[i] {
                        continue;
                    }
                    let dist = row_dist_sq(points, i, &centroids[labels[i]]);
                    if dist > far_d {
                        far_d = dist;
                        far_i = i;
                    }
                }
                taken[far_i] = true;
                centroids[c] = (0..d).map(|j| points[(far_i, j)].to_f64().unwrap()).collect();
            }
            continue;
        }
        consecutive_repairs = 0;

        if !changed {
            break;
        }

        // update step
        for centroid in centroids.iter_mut() {
            centroid.iter_mut().for_each(|v| *v = 0.0);
        }
        for i in 0..m {
            for j in 0..d {
                centroids[labels[i]][j] += points[(i, j)].to_f64().unwrap();
            }
        }
        for (c, centroid) in centroids.iter_mut().enumerate() {
            let inv = 1.0 / counts[c] as f64;
            centroid.iter_mut().for_each(|v| *v *= inv);
        }
    }

    let wcss = (0..m)
        .map(|i| row_dist_sq(points, i, &centroids[labels[i]]))
        .sum();
    Ok((labels, wcss))
}
