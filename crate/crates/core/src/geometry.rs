//! Geometric functionals for harmonic polynomial maps: growth envelopes,
//! image area in closed form and by quadrature, the Jacobian bound,
//! boundary traces with length and winding, the angular starlikeness and
//! convexity functionals, grid order estimates, and radius bracketing.

use std::f64::consts::{PI, TAU};

use crate::error::Error;
use crate::exec;
use crate::harmap::{DiskGrid, HarmonicPolyMap};
use crate::{Complex, Result};

/// Values of the functionals below this are treated as degenerate input
/// (the map or its angular derivative vanishes at the sample).
const DEGEN_TOL: f64 = 1e-12;

/// Slack allowed before a sampled inequality counts as violated.
const BAND: f64 = 1e-9;

/// Envelope r ∓ λr²/2 for |f(z)| over |z| = r, valid for members with
/// b₁ = 0. The lower branch tends to 1 − λ/2 as r → 1, the radius of the
/// disk every member covers.
pub fn growth_bounds(lambda: f64, r: f64) -> (f64, f64) {
    assert!(
        lambda > 0.0 && lambda <= 1.0,
        "lambda must lie in (0, 1], got {lambda}"
    );
    assert!((0.0..1.0).contains(&r) || r == 1.0, "r must lie in [0, 1]");
    let bulge = 0.5 * lambda * r * r;
    (r - bulge, r + bulge)
}

/// Result of sampling the growth envelope over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthCheck {
    pub ok: bool,
    /// Minimal slack min(|f| − lower, upper − |f|) over the grid. Zero
    /// means the envelope is attained; negative means it is violated.
    pub worst_slack: f64,
    pub worst_point: Complex,
}

/// Checks lower(|z|) ≤ |f(z)| ≤ upper(|z|) at every grid point, with a
/// 1e-9 band so sharp members that attain the envelope still pass.
pub fn check_growth(f: &HarmonicPolyMap, lambda: f64, grid: &DiskGrid) -> GrowthCheck {
    let slacks = exec::map_range(grid.len(), |i| {
        let z = grid.point(i);
        let (lower, upper) = growth_bounds(lambda, z.norm());
        let modulus = f.eval(z).norm();
        (modulus - lower).min(upper - modulus)
    });
    let mut worst_slack = f64::INFINITY;
    let mut worst = 0;
    for (i, s) in slacks.iter().enumerate() {
        if *s < worst_slack {
            worst_slack = *s;
            worst = i;
        }
    }
    GrowthCheck {
        ok: worst_slack >= -BAND,
        worst_slack,
        worst_point: grid.point(worst),
    }
}

/// Image area from the coefficient series:
/// π[1 − |b₁|² + Σ_{n≥2} n(|aₙ|² − |bₙ|²)].
///
/// The n = 1 term is written out so maps with b₁ ≠ 0 integrate correctly;
/// for pinned maps it reduces to the familiar π[1 + Σ n(|aₙ|² − |bₙ|²)].
pub fn area_exact(f: &HarmonicPolyMap) -> f64 {
    let mut sum = 1.0 - f.b(1).norm_sqr();
    for n in 2..=f.degree() {
        sum += n as f64 * (f.a(n).norm_sqr() - f.b(n).norm_sqr());
    }
    PI * sum
}

mod quad {
    /// Gauss-Legendre nodes and weights on [0, 1], exact for polynomial
    /// integrands of degree up to 2n − 1.
    pub fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..64 {
                let (p, dp) = legendre_and_deriv(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre_and_deriv(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            weights[i] = w;
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = w;
        }
        for i in 0..n {
            nodes[i] = 0.5 * (nodes[i] + 1.0);
            weights[i] *= 0.5;
        }
        (nodes, weights)
    }

    /// P_n(x) and P_n'(x) by the three-term recurrence.
    fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
        let mut prev = 1.0;
        let mut cur = x;
        for k in 2..=n {
            let kf = k as f64;
            let next = ((2.0 * kf - 1.0) * x * cur - (kf - 1.0) * prev) / kf;
            prev = cur;
            cur = next;
        }
        let dp = n as f64 * (prev - x * cur) / (1.0 - x * x);
        (cur, dp)
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn integrates_monomials_exactly() {
            let (nodes, weights) = gauss_legendre_unit(16);
            for k in [0u32, 1, 7, 31] {
                let got: f64 = nodes
                    .iter()
                    .zip(&weights)
                    .map(|(x, w)| w * x.powi(k as i32))
                    .sum();
                let expect = 1.0 / (k as f64 + 1.0);
                assert!((got - expect).abs() <= 1e-14, "x^{k}: {got} vs {expect}");
            }
        }

        #[test]
        fn weights_sum_to_one() {
            for n in [16, 33, 64] {
                let (_, weights) = gauss_legendre_unit(n);
                let total: f64 = weights.iter().sum();
                assert!((total - 1.0).abs() <= 1e-14);
            }
        }
    }
}

/// Image area as the disk integral of the Jacobian, by tensor-product
/// quadrature: Gauss-Legendre in the radius against the polar weight r,
/// the periodic rectangle rule in the angle. Both rules are exact for the
/// polynomial/trigonometric degrees that arise here, so 64 x 256 nodes
/// reproduce [`area_exact`] to rounding for maps of degree up to 64.
pub fn area_quadrature(f: &HarmonicPolyMap, radial_nodes: usize, angular_nodes: usize) -> f64 {
    assert!(
        radial_nodes >= 16 && angular_nodes >= 16,
        "at least 16 nodes per axis"
    );
    let (nodes, weights) = quad::gauss_legendre_unit(radial_nodes);
    let hp = f.h().derivative();
    let gp = f.g().derivative();
    let rows = exec::map_range(radial_nodes, |i| {
        let r = nodes[i];
        let vals: Vec<f64> = (0..angular_nodes)
            .map(|k| {
                let z = Complex::from_polar(r, TAU * k as f64 / angular_nodes as f64);
                hp.eval(z).norm_sqr() - gp.eval(z).norm_sqr()
            })
            .collect();
        weights[i] * r * exec::pairwise_sum(&vals)
    });
    exec::pairwise_sum(&rows) * TAU / angular_nodes as f64
}

/// Min over the grid of (1 + |z|)² − J_f(z). Members satisfy the Jacobian
/// bound J_f(z) ≤ (1 + |z|)², so the margin stays above −1e-9 for them.
pub fn jacobian_bound_margin(f: &HarmonicPolyMap, grid: &DiskGrid) -> f64 {
    let hp = f.h().derivative();
    let gp = f.g().derivative();
    let margins = exec::map_range(grid.len(), |i| {
        let z = grid.point(i);
        let jac = hp.eval(z).norm_sqr() - gp.eval(z).norm_sqr();
        let bound = (1.0 + z.norm()) * (1.0 + z.norm());
        bound - jac
    });
    margins.iter().copied().fold(f64::INFINITY, f64::min)
}

/// Closed image of the unit circle under f, as a polyline.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryTrace {
    /// f(e^{2πik/M}) for k = 0..M, plus the first point repeated at the
    /// end to close the curve (M + 1 entries in total).
    pub points: Vec<Complex>,
    /// Polyline length; converges to the curve length as M grows.
    pub length: f64,
    /// Winding number of the trace about the origin, from summed argument
    /// increments.
    pub winding_about_origin: i64,
}

/// Samples the boundary curve at M equispaced angles (M ≥ 64). Members
/// with defect bound λ have |∂θf| ≤ 1 + λ on the circle, so their length
/// never exceeds 2π(1 + λ).
pub fn boundary_trace(f: &HarmonicPolyMap, m: usize) -> Result<BoundaryTrace> {
    if m < 64 {
        return Err(Error::TooFewAngles { got: m, min: 64 });
    }
    let mut points = exec::map_range(m, |k| {
        f.eval(Complex::from_polar(1.0, TAU * k as f64 / m as f64))
    });
    points.push(points[0]);
    let segments: Vec<f64> = (0..m).map(|k| (points[k + 1] - points[k]).norm()).collect();
    let length = exec::pairwise_sum(&segments);
    let mut turn = 0.0;
    for k in 0..m {
        turn += (points[k + 1] * points[k].conj()).arg();
    }
    Ok(BoundaryTrace {
        points,
        length,
        winding_about_origin: (turn / TAU).round() as i64,
    })
}

/// ∂θ arg f(re^{iθ}) at z, via Re[(zh'(z) − conj(zg'(z))) / f(z)].
/// Positive on a full circle means the image curve winds monotonically,
/// the starlikeness condition; the infimum over the disk is the order.
pub fn starlike_functional(f: &HarmonicPolyMap, z: Complex) -> Result<f64> {
    let val = f.eval(z);
    if val.norm() < DEGEN_TOL {
        return Err(Error::Degenerate { z });
    }
    let hp = f.h().derivative().eval(z);
    let gp = f.g().derivative().eval(z);
    let w = z * hp - (z * gp).conj();
    Ok((w / val).re)
}

/// ∂θ arg ∂θf(re^{iθ}) at z, via
/// Re[(zh' + z²h'' + conj(zg' + z²g'')) / (zh' − conj(zg'))].
/// Positive on a full circle means the image curve is locally convex.
pub fn convex_functional(f: &HarmonicPolyMap, z: Complex) -> Result<f64> {
    let hd = f.h().derivative();
    let gd = f.g().derivative();
    let hp = hd.eval(z);
    let gp = gd.eval(z);
    let den = z * hp - (z * gp).conj();
    if den.norm() < DEGEN_TOL {
        return Err(Error::Degenerate { z });
    }
    let hpp = hd.derivative().eval(z);
    let gpp = gd.derivative().eval(z);
    let num = z * hp + z * z * hpp + (z * gp + z * z * gpp).conj();
    Ok((num / den).re)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionalKind {
    Starlike,
    Convex,
}

/// Grid infimum of a functional, with its location.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderEstimate {
    pub value: f64,
    pub argmin_point: Complex,
    /// Grid points where the functional was undefined and skipped.
    pub skipped: usize,
}

/// Infimum of the chosen functional over the grid. Degenerate samples are
/// skipped and counted; if every sample were degenerate the value would be
/// +∞, which cannot happen for maps with the unit leading coefficient.
/// The raw infimum is returned even when negative.
pub fn order_estimate(f: &HarmonicPolyMap, kind: FunctionalKind, grid: &DiskGrid) -> OrderEstimate {
    let vals = exec::map_range(grid.len(), |i| {
        let z = grid.point(i);
        match kind {
            FunctionalKind::Starlike => starlike_functional(f, z).ok(),
            FunctionalKind::Convex => convex_functional(f, z).ok(),
        }
    });
    let mut value = f64::INFINITY;
    let mut argmin_point = Complex::new(0.0, 0.0);
    let mut skipped = 0;
    for (i, v) in vals.iter().enumerate() {
        match v {
            Some(x) if *x < value => {
                value = *x;
                argmin_point = grid.point(i);
            }
            Some(_) => {}
            None => skipped += 1,
        }
    }
    OrderEstimate {
        value,
        argmin_point,
        skipped,
    }
}

/// Interval known to contain the largest radius below which the chosen
/// functional stays positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusBracket {
    pub lo: f64,
    pub hi: f64,
    pub tol: f64,
}

const RADIUS_ANGLES: usize = 720;
const RADIUS_R_MAX: f64 = DiskGrid::DEFAULT_R_MAX;

/// True when the functional is positive at every nondegenerate sample of
/// the circle of radius r. Errors only if the whole circle is degenerate.
fn circle_positive(f: &HarmonicPolyMap, kind: FunctionalKind, r: f64) -> Result<bool> {
    let vals = exec::map_range(RADIUS_ANGLES, |k| {
        let z = Complex::from_polar(r, TAU * k as f64 / RADIUS_ANGLES as f64);
        match kind {
            FunctionalKind::Starlike => starlike_functional(f, z).ok(),
            FunctionalKind::Convex => convex_functional(f, z).ok(),
        }
    });
    let mut seen = false;
    for v in vals.iter().flatten() {
        seen = true;
        if *v <= 0.0 {
            return Ok(false);
        }
    }
    if seen {
        Ok(true)
    } else {
        Err(Error::AllDegenerate)
    }
}

/// Brackets the starlikeness or convexity radius of f: scans circles of
/// radius 0.01, 0.02, ..., 0.99, 0.999 outward for the first one carrying
/// a nonpositive functional value, then bisects the failing interval until
/// it is narrower than `tol`. All scanned circles with radius ≤ lo pass;
/// the circle at hi fails. When no circle fails the bracket collapses to
/// [0.999, 0.999]: the map may well be starlike or convex in the whole
/// disk, and the scan cannot tell from inside.
pub fn radius_bracket(f: &HarmonicPolyMap, kind: FunctionalKind, tol: f64) -> Result<RadiusBracket> {
    if tol < 1e-4 || !tol.is_finite() {
        return Err(Error::InvalidTolerance { tol });
    }
    let ladder: Vec<f64> = (1..=99)
        .map(|k| k as f64 / 100.0)
        .chain(std::iter::once(RADIUS_R_MAX))
        .collect();

    let mut lo = 0.0;
    let mut failing = None;
    for &r in &ladder {
        if circle_positive(f, kind, r)? {
            lo = r;
        } else {
            failing = Some(r);
            break;
        }
    }
    let Some(mut hi) = failing else {
        return Ok(RadiusBracket {
            lo: RADIUS_R_MAX,
            hi: RADIUS_R_MAX,
            tol,
        });
    };
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if circle_positive(f, kind, mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RadiusBracket { lo, hi, tol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{extremal, random_member_coeff, ClassSpec, ExtremalSide};
    use crate::series::AnalyticSeries;

    const ONE: Complex = Complex::new(1.0, 0.0);

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn co_extremal(lambda: f64) -> HarmonicPolyMap {
        extremal(2, lambda, ExtremalSide::Coanalytic, 2).unwrap()
    }

    fn an_extremal(lambda: f64) -> HarmonicPolyMap {
        extremal(2, lambda, ExtremalSide::Analytic, 2).unwrap()
    }

    /// Central-difference ∂θ arg ∂θf, branch-safe via the argument of a
    /// quotient of angular derivatives.
    fn fd_convex(f: &HarmonicPolyMap, z: Complex) -> f64 {
        let h = 1e-5;
        let r = z.norm();
        let theta = z.arg();
        let wp = f
            .theta_derivative(Complex::from_polar(r, theta + h))
            .unwrap();
        let wm = f
            .theta_derivative(Complex::from_polar(r, theta - h))
            .unwrap();
        (wp * wm.conj()).arg() / (2.0 * h)
    }

    #[test]
    fn growth_bounds_examples() {
        let (lo, hi) = growth_bounds(1.0, 0.5);
        assert!((lo - 0.375).abs() <= 1e-15);
        assert!((hi - 0.625).abs() <= 1e-15);
        let (lo, _) = growth_bounds(1.0, 1.0);
        assert!((lo - 0.5).abs() <= 1e-15);
        let (lo, _) = growth_bounds(0.5, 1.0);
        assert!((lo - 0.75).abs() <= 1e-15);
    }

    #[test]
    fn growth_check_examples() {
        let grid = DiskGrid::default();
        let check = check_growth(&co_extremal(1.0), 1.0, &grid);
        assert!(check.ok);
        // The envelope is attained on the positive real axis.
        assert!(check.worst_slack.abs() <= 1e-9);

        let check = check_growth(&HarmonicPolyMap::identity(), 1.0, &grid);
        assert!(check.ok);
        assert!(check.worst_slack > 0.0);

        let h = AnalyticSeries::new(vec![ONE, c(0.9, 0.0)]).unwrap();
        let fat = HarmonicPolyMap::analytic(h).unwrap();
        let check = check_growth(&fat, 1.0, &grid);
        assert!(!check.ok);
        assert!(check.worst_slack < -1e-3);
    }

    #[test]
    fn area_exact_examples() {
        assert!((area_exact(&an_extremal(1.0)) - 1.5 * PI).abs() <= 1e-12);
        assert!((area_exact(&co_extremal(1.0)) - 0.5 * PI).abs() <= 1e-12);
        assert!((area_exact(&HarmonicPolyMap::identity()) - PI).abs() <= 1e-12);
    }

    #[test]
    fn area_quadrature_examples() {
        let id = HarmonicPolyMap::identity();
        assert!((area_quadrature(&id, 16, 16) - PI).abs() <= 1e-9);
        assert!((area_quadrature(&an_extremal(1.0), 64, 256) - 1.5 * PI).abs() <= 1e-6);
        assert!((area_quadrature(&co_extremal(1.0), 64, 256) - 0.5 * PI).abs() <= 1e-6);
    }

    #[test]
    fn area_quadrature_matches_exact_for_random_member() {
        let spec = ClassSpec::new(1.0, true).unwrap();
        let f = random_member_coeff(spec, 16, 11);
        let exact = area_exact(&f);
        let quad = area_quadrature(&f, 64, 256);
        assert!((exact - quad).abs() <= 1e-6 * exact.abs());
    }

    #[test]
    fn area_handles_nonzero_b1() {
        let h = AnalyticSeries::new(vec![ONE]).unwrap();
        let g = AnalyticSeries::new(vec![c(0.5, 0.0)]).unwrap();
        let f = HarmonicPolyMap::new(h, g).unwrap();
        let exact = area_exact(&f);
        assert!((exact - 0.75 * PI).abs() <= 1e-12);
        assert!((area_quadrature(&f, 32, 64) - exact).abs() <= 1e-9);
    }

    #[test]
    fn jacobian_margin_examples() {
        let grid = DiskGrid::default();
        let margin = jacobian_bound_margin(&an_extremal(1.0), &grid);
        assert!(margin.abs() <= 1e-12);

        let margin = jacobian_bound_margin(&HarmonicPolyMap::identity(), &grid);
        assert!((margin - 0.21).abs() <= 1e-12);

        let margin = jacobian_bound_margin(&co_extremal(1.0), &grid);
        assert!(margin > 0.2);
    }

    #[test]
    fn boundary_trace_examples() {
        let id = boundary_trace(&HarmonicPolyMap::identity(), 1024).unwrap();
        assert!((id.length - TAU).abs() <= 1e-4);
        assert_eq!(id.winding_about_origin, 1);
        assert_eq!(id.points.len(), 1025);
        assert_eq!(id.points[0], id.points[1024]);

        // The cusped image of the coanalytic extremal has length exactly 8.
        let co = boundary_trace(&co_extremal(1.0), 4096).unwrap();
        assert!((co.length - 8.0).abs() <= 1e-4, "length {}", co.length);
        assert_eq!(co.winding_about_origin, 1);

        let an = boundary_trace(&an_extremal(1.0), 4096).unwrap();
        assert!(an.length <= 4.0 * PI + 1e-6);
        assert_eq!(an.winding_about_origin, 1);

        assert!(matches!(
            boundary_trace(&HarmonicPolyMap::identity(), 32),
            Err(Error::TooFewAngles { .. })
        ));
    }

    #[test]
    fn starlike_functional_examples() {
        let co = co_extremal(1.0);
        let got = starlike_functional(&co, c(0.5, 0.0)).unwrap();
        assert!((got - 0.4).abs() <= 1e-12);

        let id = HarmonicPolyMap::identity();
        for z in [c(0.3, 0.2), c(-0.7, 0.1), c(0.0, 0.999)] {
            assert!((starlike_functional(&id, z).unwrap() - 1.0).abs() <= 1e-12);
        }

        let r = 0.999;
        let got = starlike_functional(&co, c(r, 0.0)).unwrap();
        let expect = 2.0 * (1.0 - r) / (2.0 + r);
        assert!((got - expect).abs() <= 1e-12);

        assert!(matches!(
            starlike_functional(&co, c(0.0, 0.0)),
            Err(Error::Degenerate { .. })
        ));
        let h = AnalyticSeries::new(vec![ONE]).unwrap();
        let g = AnalyticSeries::new(vec![ONE]).unwrap();
        let fold = HarmonicPolyMap::new(h, g).unwrap();
        // f = z + conj(z) vanishes on the imaginary axis.
        assert!(matches!(
            starlike_functional(&fold, c(0.0, 0.5)),
            Err(Error::Degenerate { .. })
        ));
    }

    #[test]
    fn convex_functional_examples() {
        let co = co_extremal(1.0);
        assert!(convex_functional(&co, c(-0.5, 0.0)).unwrap().abs() <= 1e-12);
        assert!((convex_functional(&co, c(-0.25, 0.0)).unwrap() - 0.4).abs() <= 1e-12);

        let id = HarmonicPolyMap::identity();
        for z in [c(0.4, 0.1), c(-0.2, -0.6)] {
            assert!((convex_functional(&id, z).unwrap() - 1.0).abs() <= 1e-12);
        }

        // Boundary cusp of the coanalytic extremal.
        assert!(matches!(
            convex_functional(&co, c(1.0, 0.0)),
            Err(Error::Degenerate { .. })
        ));
    }

    #[test]
    fn convex_functional_matches_finite_differences() {
        let spec = ClassSpec::new(1.0, true).unwrap();
        let f = random_member_coeff(spec, 12, 5);
        for (r, theta) in [(0.3, 0.7), (0.6, 2.9), (0.9, 4.4), (0.999, 5.8)] {
            let z = Complex::from_polar(r, theta);
            let got = convex_functional(&f, z).unwrap();
            let oracle = fd_convex(&f, z);
            assert!(
                (got - oracle).abs() <= 1e-6 * got.abs().max(1.0),
                "z = {z}: {got} vs {oracle}"
            );
        }
    }

    #[test]
    fn order_estimate_examples() {
        let grid = DiskGrid::default();
        let co = co_extremal(1.0);
        let est = order_estimate(&co, FunctionalKind::Starlike, &grid);
        let r = grid.r_max();
        let expect = 2.0 * (1.0 - r) / (2.0 + r);
        assert!((est.value - expect).abs() <= 1e-12);
        assert_eq!(est.skipped, 0);
        // Min sits on the outermost circle at angle 0.
        assert!((est.argmin_point - c(r, 0.0)).norm() <= 1e-12);

        let eighth = extremal(2, 0.25, ExtremalSide::Coanalytic, 2).unwrap();
        let est = order_estimate(&eighth, FunctionalKind::Starlike, &grid);
        assert!((est.value - 2.0 / 3.0).abs() <= 1e-3);
        let est = order_estimate(&eighth, FunctionalKind::Convex, &grid);
        assert!((est.value - 0.4).abs() <= 1e-3);
    }

    #[test]
    fn radius_bracket_examples() {
        let co = co_extremal(1.0);
        let bracket = radius_bracket(&co, FunctionalKind::Convex, 1e-3).unwrap();
        assert!(bracket.hi - bracket.lo <= 1e-3);
        assert!(bracket.lo <= 0.5 + 1e-3 && 0.5 - 1e-3 <= bracket.hi);

        let id = HarmonicPolyMap::identity();
        for kind in [FunctionalKind::Starlike, FunctionalKind::Convex] {
            let bracket = radius_bracket(&id, kind, 1e-3).unwrap();
            assert_eq!(bracket.lo, RADIUS_R_MAX);
            assert_eq!(bracket.hi, RADIUS_R_MAX);
        }

        let wide = co_extremal(2.0 / 5.0_f64.sqrt());
        let bracket = radius_bracket(&wide, FunctionalKind::Starlike, 1e-3).unwrap();
        assert_eq!(bracket.lo, RADIUS_R_MAX);
        assert_eq!(bracket.hi, RADIUS_R_MAX);

        assert!(matches!(
            radius_bracket(&co, FunctionalKind::Convex, 1e-5),
            Err(Error::InvalidTolerance { .. })
        ));
    }
}
