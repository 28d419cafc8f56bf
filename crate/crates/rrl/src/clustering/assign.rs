//! Cluster label containers and the permutation-invariant error metric.

use serde::{Deserialize, Serialize};

use super::ClusteringError;

/// Labels in `{0..k-1}` for `m` samples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterAssignment {
    pub labels: Vec<usize>,
    pub k: usize,
}

impl ClusterAssignment {
    pub fn new(labels: Vec<usize>, k: usize) -> Result<Self, ClusteringError> {
        if k == 0 {
            return Err(ClusteringError::InvalidInput("k must be positive".into()));
        }
        if let Some(&bad) = labels.iter().find(|&&l| l >= k) {
            return Err(ClusteringError::InvalidInput(format!(
                "label {bad} out of range for k = {k}"
            )));
        }
        Ok(Self { labels, k })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Minimum-cost assignment on a square cost matrix (Hungarian method with
/// potentials, O(n^3)). Returns `row -> column`.
fn hungarian(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    let mut u = vec![0.0f64; n + 1];
    let mut v = vec![0.0f64; n + 1];
    let mut matched_row = vec![0usize; n + 1]; // column j -> row (1-based, 0 = free)
    let mut way = vec![0usize; n + 1];

    for i in 1..=n {
        matched_row[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = matched_row[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[matched_row[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if matched_row[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            matched_row[j0] = matched_row[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut row_to_col = vec![0usize; n];
    for j in 1..=n {
        if matched_row[j] > 0 {
            row_to_col[matched_row[j] - 1] = j - 1;
        }
    }
    row_to_col
}

/// Misclassification fraction minimized over label permutations, computed
/// by optimal assignment on the confusion matrix. Zero iff the assignments
/// agree up to a relabeling.
pub fn clustering_error(pred: &ClusterAssignment, truth: &ClusterAssignment) -> f64 {
    assert_eq!(pred.len(), truth.len(), "assignments differ in length");
    let m = pred.len();
    if m == 0 {
        return 0.0;
    }
    let k = pred.k.max(truth.k);
    let mut confusion = vec![vec![0.0f64; k]; k];
    for (&p, &t) in pred.labels.iter().zip(truth.labels.iter()) {
        confusion[p][t] += 1.0;
    }
    // maximize agreement = minimize (m - agreement) per matched pair
    let cost: Vec<Vec<f64>> = confusion
        .iter()
        .map(|row| row.iter().map(|&c| m as f64 - c).collect())
        .collect();
    let matching = hungarian(&cost);
    let agreement: f64 = matching
        .iter()
        .enumerate()
        .map(|(p, &t)| confusion[p][t])
        .sum();
    1.0 - agreement / m as f64
}
