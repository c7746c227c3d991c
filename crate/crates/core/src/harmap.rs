//! Harmonic polynomial maps f = h + conj(g) on the closed unit disk, their
//! pointwise data (value, Jacobian, angular derivative), the analytic
//! ε-slices h + εg, and the sampling grids used by every supremum and
//! infimum estimate in the crate.

use std::f64::consts::TAU;

use crate::error::Error;
use crate::series::{AnalyticSeries, COEFF_TOL};
use crate::{Complex, Result};

const ONE: Complex = Complex::new(1.0, 0.0);

/// f = h + conj(g) with h(z) = z + Σ aₙzⁿ and g(z) = Σ bₙzⁿ.
///
/// Construction enforces the normalization a₁ = 1. It deliberately does not
/// enforce |b₁| < 1 (sense preservation at the origin): maps violating it,
/// like z + conj(z), must remain representable so the membership machinery
/// can reject them with a verdict rather than a construction error. Query
/// the surrogate with [`Self::sense_preserving_at_origin`].
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicPolyMap {
    h: AnalyticSeries,
    g: AnalyticSeries,
}

impl HarmonicPolyMap {
    pub fn new(h: AnalyticSeries, g: AnalyticSeries) -> Result<Self> {
        let a1 = h.coeff(1);
        if (a1 - ONE).norm() > COEFF_TOL {
            return Err(Error::LeadingCoefficient { a1 });
        }
        Ok(Self { h, g })
    }

    /// A purely analytic map (g ≡ 0).
    pub fn analytic(h: AnalyticSeries) -> Result<Self> {
        let g = AnalyticSeries::zero(1).expect("degree 1 is valid");
        Self::new(h, g)
    }

    /// The identity map e(z) = z.
    pub fn identity() -> Self {
        let h = AnalyticSeries::new(vec![ONE]).expect("one coefficient");
        Self::analytic(h).expect("a1 = 1")
    }

    pub fn h(&self) -> &AnalyticSeries {
        &self.h
    }

    pub fn g(&self) -> &AnalyticSeries {
        &self.g
    }

    /// Coefficient aₙ of the analytic part (1-based; a₁ = 1).
    pub fn a(&self, n: usize) -> Complex {
        self.h.coeff(n)
    }

    /// Coefficient bₙ of the co-analytic part (1-based).
    pub fn b(&self, n: usize) -> Complex {
        self.g.coeff(n)
    }

    /// Highest stored coefficient index across both parts.
    pub fn degree(&self) -> usize {
        self.h.degree().max(self.g.degree())
    }

    /// |b₁| < 1, the testable surrogate for sense preservation.
    pub fn sense_preserving_at_origin(&self) -> bool {
        self.g.coeff(1).norm() < 1.0
    }

    /// f(z) = h(z) + conj(g(z)).
    pub fn eval(&self, z: Complex) -> Complex {
        self.h.eval(z) + self.g.eval(z).conj()
    }

    /// J_f(z) = |h'(z)|² − |g'(z)|². Invariant under g → εg for |ε| = 1.
    pub fn jacobian(&self, z: Complex) -> f64 {
        let hp = self.h.derivative().eval(z);
        let gp = self.g.derivative().eval(z);
        hp.norm_sqr() - gp.norm_sqr()
    }

    /// The analytic slice F_ε = h + εg for |ε| = 1 (tolerance 1e-12).
    ///
    /// f lies in the harmonic class exactly when every slice lies in the
    /// analytic class |F' − 1| < λ, which is what the sweep tests exercise.
    pub fn epsilon_slice(&self, eps: Complex) -> Result<AnalyticSeries> {
        if (eps.norm() - 1.0).abs() > COEFF_TOL {
            return Err(Error::EpsilonNotUnit { modulus: eps.norm() });
        }
        AnalyticSeries::linear_combine(&[(ONE, &self.h), (eps, &self.g)])
    }

    /// ∂f(re^{iθ})/∂θ = i·(z·h'(z) − conj(z·g'(z))), z ≠ 0.
    pub fn theta_derivative(&self, z: Complex) -> Result<Complex> {
        if z.norm_sqr() == 0.0 {
            return Err(Error::OriginExcluded);
        }
        let hp = self.h.derivative().eval(z);
        let gp = self.g.derivative().eval(z);
        Ok(Complex::i() * (z * hp - (z * gp).conj()))
    }
}

/// Polar sampling grid: a ladder of circles, each sampled at equispaced
/// angles θ_k = 2πk/angles.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskGrid {
    radii: Vec<f64>,
    angles: usize,
}

impl DiskGrid {
    pub const DEFAULT_ANGLES: usize = 720;
    pub const DEFAULT_R_MAX: f64 = 0.999;
    pub const MIN_ANGLES: usize = 8;

    /// Radii must be strictly increasing within (0, 1]; at least 8 angles.
    pub fn new(radii: Vec<f64>, angles: usize) -> Result<Self> {
        if angles < Self::MIN_ANGLES {
            return Err(Error::TooFewAngles {
                got: angles,
                min: Self::MIN_ANGLES,
            });
        }
        if radii.is_empty() {
            return Err(Error::InvalidGrid {
                reason: "no radii given",
            });
        }
        let mut prev = 0.0;
        for &r in &radii {
            if !r.is_finite() || r <= prev || r > 1.0 {
                return Err(Error::InvalidGrid {
                    reason: "radii must be strictly increasing within (0, 1]",
                });
            }
            prev = r;
        }
        Ok(Self { radii, angles })
    }

    /// The standard ladder 0.1, 0.2, ..., 0.9 capped below `r_max`, a 0.99
    /// rung when it fits, and `r_max` itself on top.
    pub fn standard(angles: usize, r_max: f64) -> Result<Self> {
        if !(r_max > 0.0 && r_max <= 1.0) || !r_max.is_finite() {
            return Err(Error::InvalidGrid {
                reason: "r_max must lie in (0, 1]",
            });
        }
        let mut radii: Vec<f64> = (1..=9)
            .map(|k| k as f64 / 10.0)
            .filter(|&r| r < r_max - 1e-12)
            .collect();
        if 0.99 < r_max - 1e-12 {
            radii.push(0.99);
        }
        radii.push(r_max);
        Self::new(radii, angles)
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles(&self) -> usize {
        self.angles
    }

    pub fn r_max(&self) -> f64 {
        *self.radii.last().expect("grid is nonempty")
    }

    /// Total sample count.
    pub fn len(&self) -> usize {
        self.radii.len() * self.angles
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sample point for a flat index (row-major: radius, then angle).
    pub fn point(&self, idx: usize) -> Complex {
        let r = self.radii[idx / self.angles];
        let theta = TAU * (idx % self.angles) as f64 / self.angles as f64;
        Complex::from_polar(r, theta)
    }

    /// All sample points in flat-index order.
    pub fn points(&self) -> Vec<Complex> {
        (0..self.len()).map(|i| self.point(i)).collect()
    }
}

impl Default for DiskGrid {
    /// Radii {0.1, ..., 0.9, 0.99, 0.999}, 720 angles. Order and radius
    /// estimates are governed by behavior as r → 1; 0.999 keeps evaluation
    /// stable for degree ≤ 64 polynomials.
    fn default() -> Self {
        Self::standard(Self::DEFAULT_ANGLES, Self::DEFAULT_R_MAX).expect("valid default grid")
    }
}
