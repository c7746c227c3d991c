//! Membership machinery for the harmonic families cut out by the defect
//! bound D(z) = |h'(z) - 1| + |g'(z)| < λ: numeric supremum tests with
//! verdicts, coefficient criteria in both directions, extremal maps,
//! seeded random member generators, and coefficient-weighted neighborhood
//! distances.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::exec;
use crate::harmap::HarmonicPolyMap;
use crate::series::{AnalyticSeries, COEFF_TOL};
use crate::{Complex, Result};

/// Angle count for the coarse boundary scan behind every refined supremum.
pub const COARSE_ANGLES: usize = 2048;

/// Half-width of the verdict band around λ. A supremum inside the band is
/// treated as sitting exactly on the boundary of the class.
pub const VERDICT_BAND: f64 = 1e-9;

/// Unit ε values used by the slice sweep.
pub const EPS_SWEEP_COUNT: usize = 64;

/// Angular tolerance of the golden-section refinement step.
const REFINE_TOL: f64 = 1e-10;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Which family to test against: the defect bound λ, and whether b₁ = 0 is
/// required on top of it.
///
/// λ < 1 is only meaningful together with `pinned`; construction rejects
/// the combination λ < 1, pinned = false.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassSpec {
    lambda: f64,
    pinned: bool,
}

impl ClassSpec {
    pub fn new(lambda: f64, pinned: bool) -> Result<Self> {
        if !(lambda > 0.0 && lambda <= 1.0) {
            return Err(Error::InvalidLambda { lambda });
        }
        if lambda < 1.0 && !pinned {
            return Err(Error::PinnedRequired { lambda });
        }
        Ok(Self { lambda, pinned })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn pinned(&self) -> bool {
        self.pinned
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Member,
    NonMember,
    /// Reserved for callers that want to surface an unresolved band hit.
    /// [`is_member_numeric`] always resolves band hits to one of the other
    /// two verdicts via the maximum principle.
    BoundaryCase,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    NumericSup,
    CoeffSufficient,
    CoeffNecessaryViolation,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MembershipReport {
    pub verdict: Verdict,
    /// Refined boundary supremum of the defect.
    pub defect_sup: f64,
    /// λ − defect_sup.
    pub margin: f64,
    /// Sample point realizing the supremum.
    pub witness: Complex,
    pub method: Method,
}

/// Max of the defect D(z) = |h'(z) - 1| + |g'(z)| over `angle_count`
/// equispaced points of the unit circle, with the maximizing point.
///
/// D is a sum of moduli of analytic functions, hence subharmonic, so its
/// supremum over the closed disk sits on the boundary; circle sampling
/// bounds the disk supremum from below and converges to it as the angle
/// count grows.
pub fn sup_defect(f: &HarmonicPolyMap, angle_count: usize) -> (f64, Complex) {
    assert!(angle_count > 0, "angle_count must be positive");
    let hp = f.h().derivative();
    let gp = f.g().derivative();
    let vals = exec::map_range(angle_count, |k| {
        let z = Complex::from_polar(1.0, TAU * k as f64 / angle_count as f64);
        (hp.eval(z) - ONE).norm() + gp.eval(z).norm()
    });
    let k = exec::argmax(&vals);
    let witness = Complex::from_polar(1.0, TAU * k as f64 / angle_count as f64);
    (vals[k], witness)
}

/// Golden-section maximization on [lo, hi], returning (argmax, max).
/// Assumes the bracket contains a single local max, which holds for the
/// brackets produced by the coarse scans here.
fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    let mid = 0.5 * (lo + hi);
    let fm = f(mid);
    if f1 >= f2 && f1 >= fm {
        (x1, f1)
    } else if f2 >= fm {
        (x2, f2)
    } else {
        (mid, fm)
    }
}

/// Coarse circle scan plus golden-section refinement around the winning
/// sample. Returns (angle, value).
fn refined_circle_max<F: Fn(f64) -> f64 + Sync + Send>(d: F, coarse: usize) -> (f64, f64) {
    let vals = exec::map_range(coarse, |k| d(TAU * k as f64 / coarse as f64));
    let k = exec::argmax(&vals);
    let step = TAU / coarse as f64;
    let (theta, val) = golden_max(&d, (k as f64 - 1.0) * step, (k as f64 + 1.0) * step, REFINE_TOL);
    if val >= vals[k] {
        (theta, val)
    } else {
        (k as f64 * step, vals[k])
    }
}

fn refined_sup_defect(f: &HarmonicPolyMap) -> (f64, Complex) {
    let hp = f.h().derivative();
    let gp = f.g().derivative();
    let d = |theta: f64| {
        let z = Complex::from_polar(1.0, theta);
        (hp.eval(z) - ONE).norm() + gp.eval(z).norm()
    };
    let (theta, val) = refined_circle_max(d, COARSE_ANGLES);
    (val, Complex::from_polar(1.0, theta))
}

/// Numeric membership verdict against `spec`.
///
/// The strict inequality D < λ is required on the open disk only, so a
/// boundary supremum landing within [`VERDICT_BAND`] of λ is resolved by
/// the maximum principle: a non-constant subharmonic defect attains its
/// max strictly on the boundary, so the map is a member; a constant defect
/// (h' and g' both constant) equals λ everywhere and the map is not.
pub fn is_member_numeric(f: &HarmonicPolyMap, spec: ClassSpec) -> MembershipReport {
    let (defect_sup, witness) = refined_sup_defect(f);
    let lambda = spec.lambda();
    let margin = lambda - defect_sup;

    if spec.pinned() && f.b(1).norm() > COEFF_TOL {
        return MembershipReport {
            verdict: Verdict::NonMember,
            defect_sup,
            margin,
            witness,
            method: Method::CoeffNecessaryViolation,
        };
    }

    let verdict = if defect_sup < lambda - VERDICT_BAND {
        Verdict::Member
    } else if defect_sup > lambda + VERDICT_BAND {
        Verdict::NonMember
    } else {
        let constant = f.h().derivative().is_constant() && f.g().derivative().is_constant();
        if constant {
            Verdict::NonMember
        } else {
            Verdict::Member
        }
    };
    MembershipReport {
        verdict,
        defect_sup,
        margin,
        witness,
        method: Method::NumericSup,
    }
}

/// Σ_{n≥2} n(|aₙ| + |bₙ|), the quantity behind the sufficient coefficient
/// test and the neighborhood distance to the identity.
pub fn weighted_coeff_sum(f: &HarmonicPolyMap) -> f64 {
    (2..=f.degree())
        .map(|n| n as f64 * (f.a(n).norm() + f.b(n).norm()))
        .sum()
}

/// Sufficient coefficient test: Σ_{n≥2} n(|aₙ| + |bₙ|) ≤ λ − |b₁| implies
/// membership. For λ < 1 the criterion is only available with b₁ = 0.
pub fn coeff_sufficient(f: &HarmonicPolyMap, lambda: f64) -> bool {
    assert!(
        lambda > 0.0 && lambda <= 1.0,
        "lambda must lie in (0, 1], got {lambda}"
    );
    let b1 = f.b(1).norm();
    if lambda < 1.0 && b1 > COEFF_TOL {
        return false;
    }
    weighted_coeff_sum(f) <= lambda - b1 + COEFF_TOL
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// Σ_{n≥2} n²(|aₙ|² + |bₙ|²) against λ² (pinned) or 1 − |b₁|².
    WeightedSquareSum,
    /// |aₙ| against λ/n.
    AnalyticCoeff,
    /// |bₙ| against λ/n.
    CoAnalyticCoeff,
    /// |aₙ| + |bₙ| against 1/n; applies for λ = 1 pinned.
    PairSum,
    /// ||aₙ| − |bₙ|| against 1/n; applies for λ = 1 with b₁ = 0.
    PairDifference,
}

/// One failed necessary condition: `lhs` exceeded `rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffViolation {
    pub constraint: Constraint,
    /// Coefficient index for per-index constraints, None for aggregates.
    pub n: Option<usize>,
    pub lhs: f64,
    pub rhs: f64,
}

/// Evaluates every necessary coefficient condition for membership and
/// reports the failures. Any violation certifies non-membership; an empty
/// list proves nothing. Equality is allowed (sharp extremals sit exactly
/// on these bounds), so a condition fails only past a 1e-12 slack.
pub fn coeff_necessary_checks(f: &HarmonicPolyMap, spec: ClassSpec) -> Vec<CoeffViolation> {
    let lambda = spec.lambda();
    let b1 = f.b(1).norm();
    let lambda_is_one = lambda >= 1.0 - COEFF_TOL;
    let mut out = Vec::new();
    let mut check = |constraint, n, lhs: f64, rhs: f64| {
        if lhs > rhs + COEFF_TOL {
            out.push(CoeffViolation {
                constraint,
                n,
                lhs,
                rhs,
            });
        }
    };

    let square_sum: f64 = (2..=f.degree())
        .map(|n| (n * n) as f64 * (f.a(n).norm_sqr() + f.b(n).norm_sqr()))
        .sum();
    let square_rhs = if spec.pinned() {
        lambda * lambda
    } else {
        1.0 - b1 * b1
    };
    check(Constraint::WeightedSquareSum, None, square_sum, square_rhs);

    for n in 2..=f.degree() {
        let nf = n as f64;
        let an = f.a(n).norm();
        let bn = f.b(n).norm();
        check(Constraint::AnalyticCoeff, Some(n), an, lambda / nf);
        check(Constraint::CoAnalyticCoeff, Some(n), bn, lambda / nf);
        if lambda_is_one && spec.pinned() {
            check(Constraint::PairSum, Some(n), an + bn, 1.0 / nf);
        }
        if lambda_is_one && b1 <= COEFF_TOL {
            check(Constraint::PairDifference, Some(n), (an - bn).abs(), 1.0 / nf);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalSide {
    Analytic,
    Coanalytic,
}

/// The sharp map z + (λ/m)zᵐ or z + (λ/m)conj(z)ᵐ, padded to `degree`.
/// These sit exactly on the boundary of the family (defect sup = λ) and
/// still belong to it.
pub fn extremal(
    m: usize,
    lambda: f64,
    side: ExtremalSide,
    degree: usize,
) -> Result<HarmonicPolyMap> {
    if m < 2 || m > degree {
        return Err(Error::ExtremalIndex { m, degree });
    }
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(Error::InvalidLambda { lambda });
    }
    let c = Complex::new(lambda / m as f64, 0.0);
    match side {
        ExtremalSide::Analytic => {
            let h = AnalyticSeries::monomial(m, c, degree)?;
            let g = AnalyticSeries::zero(degree)?;
            HarmonicPolyMap::new(h, g)
        }
        ExtremalSide::Coanalytic => {
            let h = AnalyticSeries::monomial(1, ZERO, degree)?;
            let mut coeffs = vec![ZERO; degree];
            coeffs[m - 1] = c;
            let g = AnalyticSeries::new(coeffs)?;
            HarmonicPolyMap::new(h, g)
        }
    }
}

fn polar_sample<R: Rng>(rng: &mut R) -> Complex {
    let r: f64 = rng.gen();
    let phase: f64 = TAU * rng.gen::<f64>();
    Complex::from_polar(r, phase)
}

/// Random member produced via the sufficient coefficient test: coefficients
/// for n = 2..=degree are drawn and rescaled so Σ n(|aₙ| + |bₙ|) equals
/// τ(λ − |b₁|) with τ uniform in (0, 1], which keeps [`coeff_sufficient`]
/// true by construction. Pinned specs get b₁ = 0; otherwise |b₁| < 0.9 is
/// drawn first. Deterministic in `seed`.
pub fn random_member_coeff(spec: ClassSpec, degree: usize, seed: u64) -> HarmonicPolyMap {
    assert!(degree >= 2, "degree must be at least 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tau = 1.0 - rng.gen::<f64>();
    let b1 = if spec.pinned() {
        ZERO
    } else {
        Complex::from_polar(0.9 * rng.gen::<f64>(), TAU * rng.gen::<f64>())
    };
    let raw: Vec<(Complex, Complex)> = (2..=degree)
        .map(|_| (polar_sample(&mut rng), polar_sample(&mut rng)))
        .collect();
    let total: f64 = raw
        .iter()
        .enumerate()
        .map(|(i, (a, b))| (i + 2) as f64 * (a.norm() + b.norm()))
        .sum();
    let budget = tau * (spec.lambda() - b1.norm());
    let scale = if total > 1e-12 { budget / total } else { 0.0 };

    let mut a = Vec::with_capacity(degree);
    let mut b = Vec::with_capacity(degree);
    a.push(ONE);
    b.push(b1);
    for (ra, rb) in &raw {
        a.push(*ra * scale);
        b.push(*rb * scale);
    }
    let h = AnalyticSeries::new(a).expect("finite coefficients");
    let g = AnalyticSeries::new(b).expect("finite coefficients");
    HarmonicPolyMap::new(h, g).expect("a1 = 1 by construction")
}

fn eval_poly(coeffs: &[Complex], z: Complex) -> Complex {
    let mut acc = ZERO;
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Coefficients of scale·∫p, indexed so entry k multiplies z^{k+1}.
fn antiderivative(poly: &[Complex], scale: f64) -> Vec<Complex> {
    poly.iter()
        .enumerate()
        .map(|(k, c)| *c * (scale / (k as f64 + 1.0)))
        .collect()
}

fn build_boundary_member(
    spec: ClassSpec,
    degree: usize,
    rng: &mut ChaCha8Rng,
    tau: f64,
) -> HarmonicPolyMap {
    // p, q are the coefficient vectors of h' - 1 and g' before scaling.
    // p(0) = 0 keeps a1 = 1; |p_1| >= 1/2 keeps the boundary max well away
    // from zero; q(0) = 0 when the spec pins b1.
    let mut p = vec![ZERO; degree];
    let mut q = vec![ZERO; degree];
    p[1] = Complex::from_polar(0.5 + 0.5 * rng.gen::<f64>(), TAU * rng.gen::<f64>());
    for c in p.iter_mut().skip(2) {
        *c = polar_sample(rng);
    }
    let q_start = if spec.pinned() { 1 } else { 0 };
    for c in q.iter_mut().skip(q_start) {
        *c = polar_sample(rng);
    }

    let (_, m) = refined_circle_max(
        |theta| {
            let z = Complex::from_polar(1.0, theta);
            eval_poly(&p, z).norm() + eval_poly(&q, z).norm()
        },
        COARSE_ANGLES,
    );
    let c = tau * spec.lambda() / m;

    // h = z + c*Integral(p), g = c*Integral(q); the defect then equals
    // c*(|p| + |q|) with boundary max exactly tau*lambda.
    let vp = antiderivative(&p, c);
    let vq = antiderivative(&q, c);
    let mut a = Vec::with_capacity(degree);
    a.push(ONE + vp[0]);
    a.extend_from_slice(&vp[1..]);
    let h = AnalyticSeries::new(a).expect("finite coefficients");
    let g = AnalyticSeries::new(vq).expect("finite coefficients");
    HarmonicPolyMap::new(h, g).expect("a1 = 1 by construction")
}

/// Random member whose defect supremum lands exactly on τλ for a τ drawn
/// uniformly from (0, 1): random derivative polynomials are scaled by
/// τλ over their joint boundary max and integrated term-wise. Reaches
/// members far outside the coefficient-sufficient region. Deterministic
/// in `seed`.
pub fn random_member_boundary(spec: ClassSpec, degree: usize, seed: u64) -> HarmonicPolyMap {
    assert!(degree >= 2, "degree must be at least 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tau = rng.gen_range(f64::EPSILON..1.0);
    build_boundary_member(spec, degree, &mut rng, tau)
}

/// [`random_member_boundary`] with the defect level τ pinned by the caller
/// instead of drawn. Useful for placing members at a prescribed distance
/// from the boundary of the family.
pub fn random_member_boundary_with_tau(
    spec: ClassSpec,
    degree: usize,
    seed: u64,
    tau: f64,
) -> HarmonicPolyMap {
    assert!(degree >= 2, "degree must be at least 2");
    assert!(tau > 0.0 && tau < 1.0, "tau must lie in (0, 1), got {tau}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    build_boundary_member(spec, degree, &mut rng, tau)
}

/// Random analytic member (g ≡ 0) with |h' - 1| < λ, built the same way as
/// [`random_member_boundary`]. Deterministic in `seed`.
pub fn random_member_analytic(lambda: f64, degree: usize, seed: u64) -> HarmonicPolyMap {
    assert!(lambda > 0.0 && lambda <= 1.0, "lambda must lie in (0, 1]");
    assert!(degree >= 2, "degree must be at least 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tau = rng.gen_range(f64::EPSILON..1.0);
    let mut p = vec![ZERO; degree];
    p[1] = Complex::from_polar(0.5 + 0.5 * rng.gen::<f64>(), TAU * rng.gen::<f64>());
    for c in p.iter_mut().skip(2) {
        *c = polar_sample(&mut rng);
    }
    let (_, m) = refined_circle_max(
        |theta| eval_poly(&p, Complex::from_polar(1.0, theta)).norm(),
        COARSE_ANGLES,
    );
    let vp = antiderivative(&p, tau * lambda / m);
    let mut a = Vec::with_capacity(degree);
    a.push(ONE + vp[0]);
    a.extend_from_slice(&vp[1..]);
    let h = AnalyticSeries::new(a).expect("finite coefficients");
    HarmonicPolyMap::analytic(h).expect("a1 = 1 by construction")
}

/// Coefficient-weighted distance between two maps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeighborhoodDistance {
    pub value: f64,
}

/// Σ_{n≥2} n(|aₙ − Aₙ| + |bₙ − Bₙ|) + |b₁ − B₁|, the distance whose unit
/// ball around the identity stays inside the λ = 1 family. The shorter map
/// is zero-padded.
pub fn nbhd_distance(f: &HarmonicPolyMap, big_f: &HarmonicPolyMap) -> NeighborhoodDistance {
    let deg = f.degree().max(big_f.degree());
    let mut value = (f.b(1) - big_f.b(1)).norm();
    for n in 2..=deg {
        value += n as f64 * ((f.a(n) - big_f.a(n)).norm() + (f.b(n) - big_f.b(n)).norm());
    }
    NeighborhoodDistance { value }
}

/// Boundary supremum of |F_ε'(z) - 1| maximized jointly over the circle
/// samples and the slice parameter ε, sweeping `eps_count` equispaced unit
/// values plus, per sample, the aligned ε that turns the triangle
/// inequality into an equality. With the aligned choice included the sweep
/// reproduces the defect supremum exactly rather than up to grid error.
pub fn epsilon_sweep_sup(f: &HarmonicPolyMap, angle_count: usize, eps_count: usize) -> f64 {
    assert!(angle_count > 0 && eps_count > 0, "counts must be positive");
    let hp = f.h().derivative();
    let gp = f.g().derivative();
    let vals = exec::map_range(angle_count, |k| {
        let z = Complex::from_polar(1.0, TAU * k as f64 / angle_count as f64);
        let a = hp.eval(z) - ONE;
        let b = gp.eval(z);
        let mut best = a.norm() + b.norm();
        for j in 0..eps_count {
            let eps = Complex::from_polar(1.0, TAU * j as f64 / eps_count as f64);
            best = best.max((a + eps * b).norm());
        }
        best
    });
    vals[exec::argmax(&vals)]
}
