//! Noncommutativity data of the four-dimensional phase space.
//!
//! The commutators are `[x, y] = i mu`, `[px, py] = i nu` and
//! `[x, px] = [y, py] = i hbar`; all others vanish.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NCParameters {
    mu: f64,
    nu: f64,
    hbar: f64,
    theta: f64,
}

impl NCParameters {
    /// Validates `mu, nu, hbar > 0` and `0 < theta < 1` with
    /// `theta = sqrt(mu nu) / hbar`.
    pub fn new(mu: f64, nu: f64, hbar: f64) -> Result<Self> {
        for (name, value) in [("mu", mu), ("nu", nu), ("hbar", hbar)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::NonPositiveParameter { name, value });
            }
        }
        let theta = (mu * nu).sqrt() / hbar;
        if !(theta > 0.0 && theta < 1.0) {
            return Err(Error::InvalidDeformation { theta });
        }
        Ok(Self { mu, nu, hbar, theta })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `(mu/nu)^(1/4)`, the dimensionful factor multiplying coordinate quadratures.
    pub fn coordinate_ratio(&self) -> f64 {
        (self.mu / self.nu).powf(0.25)
    }

    /// `(nu/mu)^(1/4)`, the factor multiplying momentum quadratures.
    pub fn momentum_ratio(&self) -> f64 {
        (self.nu / self.mu).powf(0.25)
    }

    /// `sqrt(hbar/2) (mu/nu)^(1/4)`.
    pub fn coordinate_scale(&self) -> f64 {
        (self.hbar / 2.0).sqrt() * self.coordinate_ratio()
    }

    /// `sqrt(hbar/2) (nu/mu)^(1/4)`.
    pub fn momentum_scale(&self) -> f64 {
        (self.hbar / 2.0).sqrt() * self.momentum_ratio()
    }

    /// Value of `[u, v]` prescribed by the noncommutative phase-space algebra,
    /// as a multiple of the identity.
    pub fn canonical_commutator(&self, u: Observable, v: Observable) -> Complex64 {
        use Observable::*;
        let value = match (u, v) {
            (X, Y) => self.mu,
            (Y, X) => -self.mu,
            (Px, Py) => self.nu,
            (Py, Px) => -self.nu,
            (X, Px) | (Y, Py) => self.hbar,
            (Px, X) | (Py, Y) => -self.hbar,
            _ => 0.0,
        };
        Complex64::new(0.0, value)
    }
}

/// The four phase-space observables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Observable {
    X,
    Y,
    Px,
    Py,
}

impl Observable {
    pub const ALL: [Observable; 4] = [Observable::X, Observable::Y, Observable::Px, Observable::Py];

    /// The six unordered pairs `(u, v)` with `u` before `v` in [`Observable::ALL`].
    pub fn pairs() -> impl Iterator<Item = (Observable, Observable)> {
        (0..4).flat_map(|i| ((i + 1)..4).map(move |j| (Self::ALL[i], Self::ALL[j])))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Observable::X => "x",
            Observable::Y => "y",
            Observable::Px => "px",
            Observable::Py => "py",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_is_derived() {
        let p = NCParameters::new(0.4, 0.1, 1.0).unwrap();
        assert!((p.theta() - 0.2).abs() < 1e-15);
        assert!((p.coordinate_ratio() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rejects_theta_at_or_above_one() {
        assert!(matches!(
            NCParameters::new(1.0, 1.0, 1.0),
            Err(Error::InvalidDeformation { .. })
        ));
        assert!(matches!(
            NCParameters::new(1.2, 1.2, 1.0),
            Err(Error::InvalidDeformation { .. })
        ));
    }

    #[test]
    fn rejects_non_positive_inputs() {
        assert!(matches!(
            NCParameters::new(-0.1, 0.1, 1.0),
            Err(Error::NonPositiveParameter { name: "mu", .. })
        ));
        assert!(matches!(
            NCParameters::new(0.1, 0.1, 0.0),
            Err(Error::NonPositiveParameter { name: "hbar", .. })
        ));
        assert!(NCParameters::new(f64::NAN, 0.1, 1.0).is_err());
    }

    #[test]
    fn six_pairs() {
        assert_eq!(Observable::pairs().count(), 6);
    }
}
