//! Shared fixtures for the integration suites: deterministic parameter
//! derivation, generator dispatch, and finite-difference oracles that are
//! independent of the library's closed forms.
#![allow(dead_code)]

use std::f64::consts::TAU;

use harmkit::classes::{self, ClassSpec};
use harmkit::{AnalyticSeries, Complex, HarmonicPolyMap};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Degree used for bulk random members. Large enough to exercise the
/// series machinery, small enough to keep thousand-member sweeps quick.
pub const BULK_DEGREE: usize = 16;

pub const ONE: Complex = Complex::new(1.0, 0.0);

pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// Deterministic λ in (0.01, 1], spread over seeds by a Weyl step.
pub fn lambda_for(seed: u64) -> f64 {
    let frac = (seed.wrapping_mul(2654435761) % 1000) as f64 / 1000.0;
    1.0 - 0.99 * frac
}

pub fn pinned(lambda: f64) -> ClassSpec {
    ClassSpec::new(lambda, true).unwrap()
}

/// Alternates the two member generators by seed parity so batches cover
/// both the coefficient-sufficient region and near-boundary members.
pub fn member_for(spec: ClassSpec, degree: usize, seed: u64) -> HarmonicPolyMap {
    if seed.is_multiple_of(2) {
        classes::random_member_coeff(spec, degree, seed)
    } else {
        classes::random_member_boundary(spec, degree, seed)
    }
}

/// Random map with Σ n²(|aₙ| + |bₙ|) = τλ for τ in (0, 1], the hypothesis
/// of the square-weighted convexity gateway.
pub fn square_sum_member(lambda: f64, degree: usize, seed: u64) -> HarmonicPolyMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tau = 1.0 - rng.gen::<f64>();
    let raw: Vec<(Complex, Complex)> = (2..=degree)
        .map(|_| {
            let a = Complex::from_polar(rng.gen(), TAU * rng.gen::<f64>());
            let b = Complex::from_polar(rng.gen(), TAU * rng.gen::<f64>());
            (a, b)
        })
        .collect();
    let total: f64 = raw
        .iter()
        .enumerate()
        .map(|(i, (a, b))| (((i + 2) * (i + 2)) as f64) * (a.norm() + b.norm()))
        .sum();
    let scale = if total > 1e-12 { tau * lambda / total } else { 0.0 };
    let mut a = vec![ONE];
    let mut b = vec![c(0.0, 0.0)];
    for (ra, rb) in &raw {
        a.push(*ra * scale);
        b.push(*rb * scale);
    }
    HarmonicPolyMap::new(
        AnalyticSeries::new(a).unwrap(),
        AnalyticSeries::new(b).unwrap(),
    )
    .unwrap()
}

/// Deterministic sample point with radius in [0.2, 0.95].
pub fn sample_point(rng: &mut ChaCha8Rng) -> Complex {
    let r = 0.2 + 0.75 * rng.gen::<f64>();
    Complex::from_polar(r, TAU * rng.gen::<f64>())
}

/// Central difference of f along the angular direction.
pub fn fd_theta_derivative(f: &HarmonicPolyMap, z: Complex) -> Complex {
    let h = 1e-5;
    let (r, theta) = (z.norm(), z.arg());
    let plus = f.eval(Complex::from_polar(r, theta + h));
    let minus = f.eval(Complex::from_polar(r, theta - h));
    (plus - minus) / (2.0 * h)
}

/// Central difference of ∂θ arg f, branch-safe via the quotient argument.
pub fn fd_starlike_functional(f: &HarmonicPolyMap, z: Complex) -> f64 {
    let h = 1e-5;
    let (r, theta) = (z.norm(), z.arg());
    let plus = f.eval(Complex::from_polar(r, theta + h));
    let minus = f.eval(Complex::from_polar(r, theta - h));
    (plus * minus.conj()).arg() / (2.0 * h)
}

/// Central difference of ∂θ arg ∂θf, branch-safe the same way.
pub fn fd_convex_functional(f: &HarmonicPolyMap, z: Complex) -> f64 {
    let h = 1e-5;
    let (r, theta) = (z.norm(), z.arg());
    let plus = f.theta_derivative(Complex::from_polar(r, theta + h)).unwrap();
    let minus = f
        .theta_derivative(Complex::from_polar(r, theta - h))
        .unwrap();
    (plus * minus.conj()).arg() / (2.0 * h)
}

/// Boundary supremum of |F'(z) − 1| for an analytic slice, sampled.
pub fn slice_boundary_sup(slice: &AnalyticSeries, angles: usize) -> f64 {
    let d = slice.derivative();
    (0..angles)
        .map(|k| {
            let z = Complex::from_polar(1.0, TAU * k as f64 / angles as f64);
            (d.eval(z) - ONE).norm()
        })
        .fold(0.0, f64::max)
}
