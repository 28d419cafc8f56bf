//! Small dense linear-algebra helpers shared across modules.

use crate::{Mat, Real};
use num_traits::Float;

/// Largest principal angle (radians) between the column spans of `a` and
/// `b`, both assumed to have orthonormal columns of the same count.
pub fn principal_angle<T: Real>(a: &Mat<T>, b: &Mat<T>) -> T {
    assert_eq!(a.ncols(), b.ncols(), "subspace dimensions differ");
    assert_eq!(a.nrows(), b.nrows(), "ambient dimensions differ");
    let m = a.transpose() * b;
    let svd = m.svd(false, false);
    let smin = svd
        .singular_values
        .iter()
        .cloned()
        .fold(Float::infinity(), |acc: T, s| if s < acc { s } else { acc });
    let clamped = nalgebra::clamp(smin, T::zero(), T::one());
    Float::acos(clamped)
}

/// `max_ij |a_ij - a_ji|`, the symmetry defect.
pub fn symmetry_defect<T: Real>(a: &Mat<T>) -> T {
    assert_eq!(a.nrows(), a.ncols());
    let mut worst = T::zero();
    for i in 0..a.nrows() {
        for j in (i + 1)..a.ncols() {
            let d = Float::abs(a[(i, j)] - a[(j, i)]);
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

/// Checks that every entry is finite.
pub fn all_finite<T: Real>(a: &Mat<T>) -> bool {
    a.iter().all(|x| Float::is_finite(*x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Mat64;

    #[test]
    fn angle_between_identical_spans_is_zero() {
        let x = Mat64::identity(4, 2);
        assert!(principal_angle(&x, &x) < 1e-12);
    }

    #[test]
    fn angle_between_orthogonal_spans() {
        let a = Mat64::from_fn(4, 1, |i, _| f64::from(i == 0));
        let b = Mat64::from_fn(4, 1, |i, _| f64::from(i == 2));
        let angle = principal_angle(&a, &b);
        assert!((angle - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn symmetry_defect_detects_asymmetry() {
        let mut a = Mat64::zeros(3, 3);
        a[(0, 1)] = 1.0;
        a[(1, 0)] = 1.0 + 1e-3;
        assert!((symmetry_defect(&a) - 1e-3).abs() < 1e-15);
    }
}
