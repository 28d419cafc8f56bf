//! Matrix CSV serialization and ground-truth sidecar files.
//!
//! CSV format: no header, comma separated, one row per line, one file per
//! matrix. Values are written with Rust's shortest round-trip float
//! formatting, so `write` followed by `read` reproduces an `f64` matrix
//! bit-exactly.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clustering::ClusterAssignment;
use crate::Mat64;

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: expected {expected} fields, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: {source}")]
    BadNumber {
        line: usize,
        source: std::num::ParseFloatError,
    },
    #[error("empty matrix file")]
    Empty,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Writes a matrix as row-major CSV lines.
pub fn write_matrix_csv(path: &Path, m: &Mat64) -> Result<(), IoError> {
    let mut out = std::io::BufWriter::new(fs::File::create(path)?);
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if j > 0 {
                out.write_all(b",")?;
            }
            write!(out, "{}", m[(i, j)])?;
        }
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a matrix written by [`write_matrix_csv`].
pub fn read_matrix_csv(path: &Path) -> Result<Mat64, IoError> {
    let text = fs::read_to_string(path)?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let row: Vec<f64> = line
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<f64>()
                    .map_err(|source| IoError::BadNumber {
                        line: idx + 1,
                        source,
                    })
            })
            .collect::<Result<_, _>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(IoError::RaggedRow {
                    line: idx + 1,
                    expected: first.len(),
                    found: row.len(),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(IoError::Empty);
    }
    let (nr, nc) = (rows.len(), rows[0].len());
    Ok(Mat64::from_fn(nr, nc, |i, j| rows[i][j]))
}

/// Writes cluster labels as `index,label` CSV lines.
pub fn write_labels_csv(path: &Path, assignment: &ClusterAssignment) -> Result<(), IoError> {
    let mut out = std::io::BufWriter::new(fs::File::create(path)?);
    for (i, label) in assignment.labels.iter().enumerate() {
        writeln!(out, "{i},{label}")?;
    }
    out.flush()?;
    Ok(())
}

/// Ground-truth sidecar written next to generated datasets.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct GroundTruth {
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<usize>>,
    /// Frame geometry for image-shaped datasets.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub height: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub width: Option<usize>,
    /// Per-frame foreground support as column-major pixel indices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<Vec<usize>>>,
}

pub fn write_ground_truth(path: &Path, truth: &GroundTruth) -> Result<(), IoError> {
    let json = serde_json::to_string_pretty(truth)?;
    fs::write(path, json)?;
    Ok(())
}

pub fn read_ground_truth(path: &Path) -> Result<GroundTruth, IoError> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}
