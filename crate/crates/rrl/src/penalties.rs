//! Robust scalar penalties, their gradients, and the shrinkage map arising
//! from their variational characterizations.
//!
//! Three families are supported:
//!
//! * `Quadratic` — plain least squares, `r^2 / 2`.
//! * `Huber` — quadratic inside `|r| <= kappa`, linear tails outside.
//! * `Tiber` — log-quadratic inside `|r| <= kappa * sigma`, linear tails
//!   outside; penalizes mid-sized residuals far more aggressively than the
//!   Huber, which makes it suitable for absorbing dynamic background motion
//!   into a low-rank fit.
//!
//! Both robust families are value functions of a shrinkage problem whose
//! minimizer is the soft threshold, which is what lets a sparse component be
//! recovered in closed form after a smooth solve.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Mat, Real};
use num_traits::Float;

/// Penalty family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PenaltyFamily {
    Quadratic,
    Huber,
    Tiber,
}

/// A penalty family with its parameters.
///
/// `kappa` is the threshold parameter; `sigma` is the Tiber scale parameter
/// and is ignored (treated as 1) by the other families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PenaltySpec<T: Real> {
    pub family: PenaltyFamily,
    pub kappa: T,
    pub sigma: T,
}

impl<T: Real> PenaltySpec<T> {
    /// Huber penalty with threshold `kappa`. Panics if `kappa <= 0`.
    pub fn huber(kappa: T) -> Self {
        assert!(kappa > T::zero(), "kappa must be positive");
        Self {
            family: PenaltyFamily::Huber,
            kappa,
            sigma: T::one(),
        }
    }

    /// Tiber penalty with threshold `kappa` and scale `sigma`.
    /// Panics if either parameter is not positive.
    pub fn tiber(kappa: T, sigma: T) -> Self {
        assert!(kappa > T::zero(), "kappa must be positive");
        assert!(sigma > T::zero(), "sigma must be positive");
        Self {
            family: PenaltyFamily::Tiber,
            kappa,
            sigma,
        }
    }

    /// Quadratic penalty `r^2 / 2`.
    pub fn quadratic() -> Self {
        Self {
            family: PenaltyFamily::Quadratic,
            kappa: T::one(),
            sigma: T::one(),
        }
    }

    /// Parameter validity: `kappa > 0`, `sigma > 0`, both finite.
    pub fn is_valid(&self) -> bool {
        self.kappa > T::zero()
            && self.sigma > T::zero()
            && Float::is_finite(self.kappa)
            && Float::is_finite(self.sigma)
    }

    /// The dead-zone half width of the associated shrinkage map:
    /// `kappa` for Huber, `kappa * sigma` for Tiber, infinite for Quadratic
    /// (a quadratic fit never sheds a sparse component).
    pub fn threshold_level(&self) -> T {
        match self.family {
            PenaltyFamily::Quadratic => Float::infinity(),
            PenaltyFamily::Huber => self.kappa,
            PenaltyFamily::Tiber => self.kappa * self.sigma,
        }
    }
}

/// Penalty value at a scalar residual `r`. Even in `r`, zero at the origin.
pub fn penalty_value<T: Real>(spec: &PenaltySpec<T>, r: T) -> T {
    let a = Float::abs(r);
    let two = T::c(2.0);
    match spec.family {
        PenaltyFamily::Quadratic => r * r / two,
        PenaltyFamily::Huber => {
            let k = spec.kappa;
            if a <= k {
                r * r / two
            } else {
                k * a - k * k / two
            }
        }
        PenaltyFamily::Tiber => {
            let (k, s) = (spec.kappa, spec.sigma);
            if a <= k * s {
                Float::ln(T::one() + (r / s) * (r / s))
            } else {
                let slope = two * k / (s * (k * k + T::one()));
                slope * (a - k * s) + Float::ln(T::one() + k * k)
            }
        }
    }
}

/// Derivative of [`penalty_value`] in `r`. Odd in `r`, continuous across the
/// branch boundary for both robust families.
pub fn penalty_gradient<T: Real>(spec: &PenaltySpec<T>, r: T) -> T {
    let a = Float::abs(r);
    let two = T::c(2.0);
    match spec.family {
        PenaltyFamily::Quadratic => r,
        PenaltyFamily::Huber => {
            let k = spec.kappa;
            if a <= k {
                r
            } else {
                k * Float::signum(r)
            }
        }
        PenaltyFamily::Tiber => {
            let (k, s) = (spec.kappa, spec.sigma);
            if a <= k * s {
                two * r / (s * s + r * r)
            } else {
                Float::signum(r) * two * k / (s * (k * k + T::one()))
            }
        }
    }
}

/// Soft threshold (shrinkage) map with dead zone `[-kappa, kappa]`.
///
/// Odd and nonexpansive; produces exact zeros inside the dead zone.
pub fn soft_threshold<T: Real>(r: T, kappa: T) -> T {
    debug_assert!(kappa >= T::zero());
    if r > kappa {
        r - kappa
    } else if r < -kappa {
        r + kappa
    } else {
        T::zero()
    }
}

/// Sum of the scalar penalty over all entries of `R`.
pub fn elementwise_value_sum<T: Real>(spec: &PenaltySpec<T>, r: &Mat<T>) -> T {
    let mut acc = T::zero();
    for &x in r.iter() {
        acc += penalty_value(spec, x);
    }
    acc
}

/// Entrywise penalty gradient of `R`.
pub fn elementwise_gradient<T: Real>(spec: &PenaltySpec<T>, r: &Mat<T>) -> Mat<T> {
    r.map(|x| penalty_gradient(spec, x))
}

#[derive(Serialize, Deserialize)]
struct SpecWire {
    family: String,
    kappa: f64,
    #[serde(default = "one")]
    sigma: f64,
}

fn one() -> f64 {
    1.0
}

impl<T: Real> Serialize for PenaltySpec<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let family = match self.family {
            PenaltyFamily::Quadratic => "quadratic",
            PenaltyFamily::Huber => "huber",
            PenaltyFamily::Tiber => "tiber",
        };
        // sigma is meaningful only for the Tiber; everything else reports 1.
        let sigma = match self.family {
            PenaltyFamily::Tiber => self.sigma.to_f64().unwrap(),
            _ => 1.0,
        };
        SpecWire {
            family: family.to_string(),
            kappa: self.kappa.to_f64().unwrap(),
            sigma,
        }
        .serialize(serializer)
    }
}

impl<'de, T: Real> Deserialize<'de> for PenaltySpec<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = SpecWire::deserialize(deserializer)?;
        let family = match wire.family.as_str() {
            "quadratic" => PenaltyFamily::Quadratic,
            "huber" => PenaltyFamily::Huber,
            "tiber" => PenaltyFamily::Tiber,
            other => return Err(D::Error::custom(format!("unknown penalty family {other:?}"))),
        };
        if wire.kappa <= 0.0 || wire.sigma <= 0.0 {
            return Err(D::Error::custom("kappa and sigma must be positive"));
        }
        let sigma = match family {
            PenaltyFamily::Tiber => wire.sigma,
            _ => 1.0,
        };
        Ok(PenaltySpec {
            family,
            kappa: T::c(wire.kappa),
            sigma: T::c(sigma),
        })
    }
}
