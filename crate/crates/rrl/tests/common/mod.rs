//! Shared test-side helpers: an implementation-independent brute-force grid
//! minimizer and small assertion utilities.

#![allow(dead_code)]

use rrl::SolveReport;

/// Brute-force minimization of `f` over a one-dimensional grid.
///
/// The grid is anchored at 0 with coarse resolution `1e-4` and spans
/// `[-W, W]` with `W = |r| + 3 * level + 3`, which covers the shrinkage
/// problem's entire candidate region including the kink at the origin. A
/// single 10x finer pass around the best coarse point refines the result.
/// Returns `(min value, argmin)`.
pub fn grid_minimize(f: impl Fn(f64) -> f64, r: f64, level: f64) -> (f64, f64) {
    let coarse = 1e-4;
    let half_width = r.abs() + 3.0 * level + 3.0;
    let n = (half_width / coarse).ceil() as i64;

    let mut best_v = f64::INFINITY;
    let mut best_s = 0.0;
    for i in -n..=n {
        let s = i as f64 * coarse;
        let v = f(s);
        if v < best_v {
            best_v = v;
            best_s = s;
        }
    }

    let fine = coarse / 10.0;
    let center = best_s;
    for i in -10..=10 {
        let s = center + i as f64 * fine;
        let v = f(s);
        if v < best_v {
            best_v = v;
            best_s = s;
        }
    }
    (best_v, best_s)
}

/// Objective trace must be non-increasing within 1e-10 per accepted step.
pub fn assert_descent(report: &SolveReport) {
    for w in report.objective_trace.windows(2) {
        assert!(
            w[1] <= w[0] + 1e-10,
            "objective increased: {} -> {}",
            w[0],
            w[1]
        );
    }
}
