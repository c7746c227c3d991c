//! Truncated analytic power series vanishing at the origin.
//!
//! An [`AnalyticSeries`] stores the coefficients c₁..c_N of
//! s(z) = Σ cₙzⁿ densely, addressed 1-based, so s(0) = 0 holds by
//! construction. Differentiation produces a constant term and therefore
//! leaves this family; the result lives in [`DerivedSeries`], which carries
//! the constant in its own slot and has its own Horner evaluator.
//!
//! Coefficient products here are exact arithmetic; the only rounding is in
//! evaluation. Equality helpers use the absolute tolerance [`COEFF_TOL`].

use crate::error::Error;
use crate::{Complex, Result};

/// Default truncation degree for constructors and generators. The sharp
/// extremal maps have degree 2; 64 leaves headroom for random members and
/// truncated product kernels.
pub const DEFAULT_DEGREE: usize = 64;

/// Absolute tolerance for coefficient equality.
pub const COEFF_TOL: f64 = 1e-12;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Coefficients c₁..c_N of Σ cₙzⁿ; entry n (1-based) multiplies zⁿ.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSeries {
    coeffs: Vec<Complex>,
}

impl AnalyticSeries {
    /// Builds a series from its coefficient list. The list must be nonempty
    /// and every entry finite.
    pub fn new(coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        for (k, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFinite { index: k + 1 });
            }
        }
        Ok(Self { coeffs })
    }

    /// The zero series padded to `degree` coefficients.
    pub fn zero(degree: usize) -> Result<Self> {
        Self::new(vec![ZERO; degree])
    }

    /// Truncation of z/(1−z): every coefficient 1. Identity kernel of
    /// [`Self::hadamard`] up to degree `n`, and a convex map.
    pub fn half_plane(n: usize) -> Result<Self> {
        Self::new(vec![ONE; n])
    }

    /// Truncation of z/(1−z)²: coefficient n is n.
    pub fn koebe(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|k| Complex::new(k as f64, 0.0)).collect())
    }

    /// Truncation of −log(1−z): coefficient n is 1/n. A convex map.
    pub fn log_convex(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|k| Complex::new(1.0 / k as f64, 0.0)).collect())
    }

    /// z + c·zᵐ padded to degree `n`. Requires 1 ≤ m ≤ n; for m = 1 the
    /// two terms merge into the single coefficient 1 + c.
    pub fn monomial(m: usize, c: Complex, n: usize) -> Result<Self> {
        if m < 1 || m > n {
            return Err(Error::MonomialDegree { m, degree: n });
        }
        let mut coeffs = vec![ZERO; n];
        coeffs[0] = ONE;
        coeffs[m - 1] += c;
        Self::new(coeffs)
    }

    /// Number of stored coefficients N.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of zⁿ (1-based); zero beyond the stored degree.
    pub fn coeff(&self, n: usize) -> Complex {
        if n >= 1 && n <= self.coeffs.len() {
            self.coeffs[n - 1]
        } else {
            ZERO
        }
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm() == 0.0)
    }

    /// Horner evaluation of Σ cₙzⁿ.
    pub fn eval(&self, z: Complex) -> Complex {
        let mut acc = ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc * z
    }

    /// Termwise derivative Σ n·cₙ zⁿ⁻¹. The constant term c₁ moves into
    /// the separate constant slot of [`DerivedSeries`].
    pub fn derivative(&self) -> DerivedSeries {
        DerivedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * (k + 1) as f64)
                .collect(),
        }
    }

    /// Coefficient-wise product sₙtₙ, truncated to the shorter degree.
    pub fn hadamard(&self, t: &Self) -> Self {
        let n = self.coeffs.len().min(t.coeffs.len());
        Self {
            coeffs: (0..n).map(|k| self.coeffs[k] * t.coeffs[k]).collect(),
        }
    }

    /// Coefficient-wise sₙtₙ/n, truncated to the shorter degree.
    pub fn integral_hadamard(&self, t: &Self) -> Self {
        let n = self.coeffs.len().min(t.coeffs.len());
        Self {
            coeffs: (0..n)
                .map(|k| self.coeffs[k] * t.coeffs[k] / (k + 1) as f64)
                .collect(),
        }
    }

    /// Coefficient-wise weighted sum Σ wᵢsᵢ, zero-padded to the longest
    /// input. Requires at least one term.
    pub fn linear_combine(terms: &[(Complex, &AnalyticSeries)]) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptySeries);
        }
        let n = terms.iter().map(|(_, s)| s.coeffs.len()).max().unwrap();
        let mut coeffs = vec![ZERO; n];
        for (w, s) in terms {
            for (k, c) in s.coeffs.iter().enumerate() {
                coeffs[k] += w * c;
            }
        }
        Self::new(coeffs)
    }

    /// Coefficient equality within `tol` (absolute), comparing across
    /// degrees with zero padding.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (1..=n).all(|k| (self.coeff(k) - other.coeff(k)).norm() <= tol)
    }
}

/// A polynomial d₀ + d₁z + ... with constant term allowed: the form taken
/// by derivatives of [`AnalyticSeries`].
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedSeries {
    coeffs: Vec<Complex>,
}

impl DerivedSeries {
    pub fn new(coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        for (k, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::NonFinite { index: k });
            }
        }
        Ok(Self { coeffs })
    }

    /// Coefficient of zᵏ (0-based); zero beyond the stored length.
    pub fn coeff_of_power(&self, k: usize) -> Complex {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    pub fn constant_term(&self) -> Complex {
        self.coeffs[0]
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// True when no zᵏ term with k ≥ 1 is present. The modulus of an
    /// analytic function is constant exactly when the function is, so this
    /// also decides whether |self| is constant on the disk.
    pub fn is_constant(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.norm() == 0.0)
    }

    /// Horner evaluation of Σ dₖzᵏ.
    pub fn eval(&self, z: Complex) -> Complex {
        let mut acc = ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Termwise derivative Σ k·dₖ zᵏ⁻¹ (used for second derivatives).
    pub fn derivative(&self) -> DerivedSeries {
        if self.coeffs.len() == 1 {
            return DerivedSeries { coeffs: vec![ZERO] };
        }
        DerivedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        }
    }
}
