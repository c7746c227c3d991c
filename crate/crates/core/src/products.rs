//! Product and combination operators on harmonic maps: coefficient-wise
//! convolution, integral convolution, the one-sided product with an
//! analytic factor, the shear product, and convex combinations. All of
//! them send members of the defect-bounded families to members of related
//! families with degraded parameters, which the verification suites check.

use crate::error::Error;
use crate::harmap::HarmonicPolyMap;
use crate::series::{AnalyticSeries, COEFF_TOL};
use crate::{Complex, Result};

/// Coefficient-wise product: parts are Hadamard products, so the result
/// has coefficients aₙAₙ and bₙBₙ and the shorter degree of the two.
pub fn convolve(f: &HarmonicPolyMap, big_f: &HarmonicPolyMap) -> HarmonicPolyMap {
    let h = f.h().hadamard(big_f.h());
    let g = f.g().hadamard(big_f.g());
    HarmonicPolyMap::new(h, g).expect("unit leading coefficients multiply to 1")
}

/// Coefficient-wise product with an extra 1/n: coefficients aₙAₙ/n and
/// bₙBₙ/n. Integrating the convolution derivative term-wise gives exactly
/// this, hence the name.
pub fn integral_convolve(f: &HarmonicPolyMap, big_f: &HarmonicPolyMap) -> HarmonicPolyMap {
    let h = f.h().integral_hadamard(big_f.h());
    let g = f.g().integral_hadamard(big_f.g());
    HarmonicPolyMap::new(h, g).expect("unit leading coefficients stay 1 at n = 1")
}

/// Hadamard-multiplies both parts of f by one analytic factor φ with
/// φ₁ = 1. The truncated half-plane kernel (all ones) acts as identity.
pub fn tilde_product(phi: &AnalyticSeries, f: &HarmonicPolyMap) -> Result<HarmonicPolyMap> {
    let phi1 = phi.coeff(1);
    if (phi1 - Complex::new(1.0, 0.0)).norm() > COEFF_TOL {
        return Err(Error::PhiNotNormalized { phi1 });
    }
    let h = phi.hadamard(f.h());
    let g = phi.hadamard(f.g());
    Ok(HarmonicPolyMap::new(h, g).expect("phi1 = 1 preserves the leading coefficient"))
}

/// The shear family (αφ̄ + φ) ∗ f, which works out coefficient-wise to
/// h-part φ∗h and g-part conj(α)·(φ∗g). Requires |α| ≤ 1 and φ₁ = 1.
/// α = 1 reduces to [`tilde_product`]; α = 0 keeps only the analytic part.
pub fn shear_product(
    phi: &AnalyticSeries,
    alpha: Complex,
    f: &HarmonicPolyMap,
) -> Result<HarmonicPolyMap> {
    if alpha.norm() > 1.0 + COEFF_TOL {
        return Err(Error::AlphaTooLarge {
            modulus: alpha.norm(),
        });
    }
    let phi1 = phi.coeff(1);
    if (phi1 - Complex::new(1.0, 0.0)).norm() > COEFF_TOL {
        return Err(Error::PhiNotNormalized { phi1 });
    }
    let h = phi.hadamard(f.h());
    let g = AnalyticSeries::linear_combine(&[(alpha.conj(), &phi.hadamard(f.g()))])
        .expect("single-term combination of a nonempty series");
    Ok(HarmonicPolyMap::new(h, g).expect("phi1 = 1 preserves the leading coefficient"))
}

/// Coefficient-wise weighted sum with nonnegative weights summing to 1.
/// The families here are closed under this operation.
pub fn convex_combination(weights: &[f64], maps: &[HarmonicPolyMap]) -> Result<HarmonicPolyMap> {
    if weights.is_empty() {
        return Err(Error::InvalidWeights {
            reason: "no weights given",
        });
    }
    if weights.len() != maps.len() {
        return Err(Error::InvalidWeights {
            reason: "weights and maps differ in count",
        });
    }
    if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::InvalidWeights {
            reason: "weights must be finite and nonnegative",
        });
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > COEFF_TOL {
        return Err(Error::InvalidWeights {
            reason: "weights must sum to 1",
        });
    }
    let as_complex: Vec<Complex> = weights.iter().map(|w| Complex::new(*w, 0.0)).collect();
    let h_terms: Vec<(Complex, &AnalyticSeries)> = as_complex
        .iter()
        .zip(maps)
        .map(|(w, f)| (*w, f.h()))
        .collect();
    let g_terms: Vec<(Complex, &AnalyticSeries)> = as_complex
        .iter()
        .zip(maps)
        .map(|(w, f)| (*w, f.g()))
        .collect();
    let h = AnalyticSeries::linear_combine(&h_terms)?;
    let g = AnalyticSeries::linear_combine(&g_terms)?;
    HarmonicPolyMap::new(h, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{
        extremal, is_member_numeric, random_member_coeff, ClassSpec, ExtremalSide, Verdict,
    };

    const ONE: Complex = Complex::new(1.0, 0.0);

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn co_extremal(lambda: f64) -> HarmonicPolyMap {
        extremal(2, lambda, ExtremalSide::Coanalytic, 2).unwrap()
    }

    #[test]
    fn convolve_examples() {
        let co = co_extremal(1.0);
        let sq = convolve(&co, &co);
        assert_eq!(sq.b(2), c(0.25, 0.0));
        assert_eq!(sq.a(2), c(0.0, 0.0));

        let spec = ClassSpec::new(1.0, true).unwrap();
        let f = random_member_coeff(spec, 8, 2);
        let ones = HarmonicPolyMap::analytic(AnalyticSeries::half_plane(8).unwrap()).unwrap();
        let conv = convolve(&f, &ones);
        assert!(conv.h().approx_eq(f.h(), 1e-15));
        assert!(conv.g().is_zero());

        let lam = 0.7;
        let sq = convolve(&co_extremal(lam), &co_extremal(lam));
        assert!((sq.b(2) - c(lam * lam / 4.0, 0.0)).norm() <= 1e-15);
    }

    #[test]
    fn integral_convolve_examples() {
        let co = co_extremal(1.0);
        let sq = integral_convolve(&co, &co);
        assert_eq!(sq.b(2), c(0.125, 0.0));

        let spec = ClassSpec::new(1.0, true).unwrap();
        let f = random_member_coeff(spec, 8, 9);
        let ones = HarmonicPolyMap::analytic(AnalyticSeries::half_plane(8).unwrap()).unwrap();
        let result = integral_convolve(&f, &ones);
        for n in 1..=8 {
            let expect = f.a(n) / n as f64;
            assert!((result.a(n) - expect).norm() <= 1e-15);
        }

        let lam = 0.6;
        let sq = integral_convolve(&co_extremal(lam), &co_extremal(lam));
        assert!((sq.b(2) - c(lam * lam / 8.0, 0.0)).norm() <= 1e-15);
    }

    #[test]
    fn tilde_product_examples() {
        let co = co_extremal(1.0);
        let kernel = AnalyticSeries::half_plane(4).unwrap();
        let same = tilde_product(&kernel, &co).unwrap();
        assert!(same.h().approx_eq(co.h(), 1e-15));
        assert!(same.g().approx_eq(co.g(), 1e-15));

        let z_only = AnalyticSeries::new(vec![ONE]).unwrap();
        let shrunk = tilde_product(&z_only, &co).unwrap();
        assert_eq!(shrunk.degree(), 1);
        assert_eq!(shrunk.a(1), ONE);
        assert!(shrunk.g().is_zero());

        let crooked = AnalyticSeries::new(vec![c(2.0, 0.0)]).unwrap();
        assert!(matches!(
            tilde_product(&crooked, &co),
            Err(Error::PhiNotNormalized { .. })
        ));
    }

    #[test]
    fn shear_product_examples() {
        let co = co_extremal(1.0);
        let kernel = AnalyticSeries::half_plane(4).unwrap();

        let full = shear_product(&kernel, ONE, &co).unwrap();
        assert!(full.h().approx_eq(co.h(), 1e-15));
        assert!(full.g().approx_eq(co.g(), 1e-15));

        let analytic_only = shear_product(&kernel, c(0.0, 0.0), &co).unwrap();
        assert!(analytic_only.h().approx_eq(co.h(), 1e-15));
        assert!(analytic_only.g().is_zero());

        assert!(matches!(
            shear_product(&kernel, c(1.2, 0.0), &co),
            Err(Error::AlphaTooLarge { .. })
        ));

        // Unit alpha at any phase keeps membership for the sharp map.
        let alpha = Complex::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let sheared = shear_product(&kernel, alpha, &co_extremal(0.5)).unwrap();
        let spec = ClassSpec::new(0.5, true).unwrap();
        assert_eq!(is_member_numeric(&sheared, spec).verdict, Verdict::Member);
    }

    #[test]
    fn convex_combination_examples() {
        let an = extremal(2, 1.0, ExtremalSide::Analytic, 2).unwrap();
        let co = co_extremal(1.0);
        let mix = convex_combination(&[0.5, 0.5], &[an.clone(), co.clone()]).unwrap();
        assert_eq!(mix.a(2), c(0.25, 0.0));
        assert_eq!(mix.b(2), c(0.25, 0.0));

        let spec = ClassSpec::new(1.0, true).unwrap();
        assert_eq!(is_member_numeric(&mix, spec).verdict, Verdict::Member);

        let same = convex_combination(&[1.0], std::slice::from_ref(&co)).unwrap();
        assert_eq!(same, co);

        assert!(matches!(
            convex_combination(&[], &[]),
            Err(Error::InvalidWeights { .. })
        ));
        assert!(matches!(
            convex_combination(&[1.0], &[an.clone(), co.clone()]),
            Err(Error::InvalidWeights { .. })
        ));
        assert!(matches!(
            convex_combination(&[1.5, -0.5], &[an.clone(), co.clone()]),
            Err(Error::InvalidWeights { .. })
        ));
        assert!(matches!(
            convex_combination(&[0.5, 0.4], &[an, co]),
            Err(Error::InvalidWeights { .. })
        ));
    }
}
