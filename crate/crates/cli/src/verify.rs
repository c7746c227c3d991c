//! Batch re-checks of the library's guarantees on freshly generated
//! members. Each suite reports how many samples it drew, how many violated
//! the property, and the smallest slack it observed (negative means a
//! violation). Everything is a deterministic function of the seed and the
//! grid flags.

use std::f64::consts::PI;
use std::time::Instant;

use harmkit::classes::{
    self, coeff_necessary_checks, coeff_sufficient, extremal, is_member_numeric, nbhd_distance,
    weighted_coeff_sum, ClassSpec, ExtremalSide, Verdict,
};
use harmkit::geometry::{
    area_exact, area_quadrature, boundary_trace, check_growth, jacobian_bound_margin,
    order_estimate, FunctionalKind,
};
use harmkit::products::{convex_combination, convolve, integral_convolve, shear_product, tilde_product};
use harmkit::{AnalyticSeries, Complex, DiskGrid, HarmonicPolyMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Coefficients,
    Growth,
    Area,
    Jacobian,
    Boundary,
    Orders,
    Products,
    Neighborhoods,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Coefficients => "coefficients",
            Suite::Growth => "growth",
            Suite::Area => "area",
            Suite::Jacobian => "jacobian",
            Suite::Boundary => "boundary",
            Suite::Orders => "orders",
            Suite::Products => "products",
            Suite::Neighborhoods => "neighborhoods",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteEntry {
    pub suite: &'static str,
    pub id: &'static str,
    pub samples: usize,
    pub violations: usize,
    pub worst_margin: f64,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub seed: u64,
    pub entries: Vec<SuiteEntry>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.violations == 0)
    }
}

/// Running tally for one property: count, failures, smallest slack.
struct Batch {
    samples: usize,
    violations: usize,
    worst: f64,
}

impl Batch {
    fn new() -> Self {
        Batch {
            samples: 0,
            violations: 0,
            worst: f64::INFINITY,
        }
    }

    /// Record one sample; a negative or undefined margin counts as a
    /// violation.
    fn record(&mut self, margin: f64) {
        self.samples += 1;
        if margin < self.worst {
            self.worst = margin;
        }
        if margin < 0.0 || margin.is_nan() {
            self.violations += 1;
        }
    }

    fn finish(self, suite: &'static str, id: &'static str, start: Instant) -> SuiteEntry {
        SuiteEntry {
            suite,
            id,
            samples: self.samples,
            violations: self.violations,
            worst_margin: if self.worst.is_finite() { self.worst } else { 0.0 },
            elapsed_ms: start.elapsed().as_millis(),
        }
    }
}

fn sample_seed(seed: u64, i: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i)
}

fn lambda_at(s: u64) -> f64 {
    1.0 - 0.99 * ((s.wrapping_mul(2_654_435_761) % 1000) as f64 / 1000.0)
}

fn pinned(lambda: f64) -> ClassSpec {
    ClassSpec::new(lambda, true).expect("lambda stays in (0, 1]")
}

/// Degree used for generated members; a compromise between coverage and
/// batch runtime.
const MEMBER_DEGREE: usize = 16;

fn member_at(spec: ClassSpec, s: u64) -> HarmonicPolyMap {
    if s.is_multiple_of(2) {
        classes::random_member_coeff(spec, MEMBER_DEGREE, s)
    } else {
        classes::random_member_boundary(spec, MEMBER_DEGREE, s)
    }
}

/// Grids shared by the suites: the caller's flag-driven grid plus a fixed
/// ladder capped at the starlikeness radius evidence point.
pub struct Grids {
    pub full: DiskGrid,
    pub inner: DiskGrid,
}

impl Grids {
    pub fn build(angles: usize, r_max: f64) -> Result<Self, String> {
        let full = DiskGrid::standard(angles, r_max).map_err(|e| e.to_string())?;
        let inner = DiskGrid::new(
            vec![0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.974],
            angles,
        )
        .map_err(|e| e.to_string())?;
        Ok(Grids { full, inner })
    }
}

fn coefficients(seed: u64, samples: usize) -> Vec<SuiteEntry> {
    let mut out = Vec::new();
    let suite = "coefficients";

    let start = Instant::now();
    let mut batch = Batch::new();
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i);
        let lambda = lambda_at(s);
        let f = member_at(pinned(lambda), s);
        let mut square_sum = 0.0;
        for n in 2..=f.degree() {
            let (a, b) = (f.a(n).norm(), f.b(n).norm());
            square_sum += (n * n) as f64 * (a * a + b * b);
        }
        let mut margin = lambda * lambda - square_sum + 1e-9;
        if !coeff_necessary_checks(&f, pinned(lambda)).is_empty() {
            margin = -1.0;
        }
        batch.record(margin);
    }
    out.push(batch.finish(suite, "member-coefficient-necessity", start));

    let start = Instant::now();
    let mut batch = Batch::new();
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i ^ 0x5bd1);
        let lambda = lambda_at(s);
        let spec = pinned(lambda);
        let f = classes::random_member_coeff(spec, MEMBER_DEGREE, s);
        let slack = lambda - weighted_coeff_sum(&f);
        let report = is_member_numeric(&f, spec);
        let mut margin = slack.min(report.margin);
        if !coeff_sufficient(&f, lambda) || report.verdict != Verdict::Member {
            margin = -1.0;
        }
        batch.record(margin);
    }
    out.push(batch.finish(suite, "sufficient-sum-implies-membership", start));

    let start = Instant::now();
    let mut batch = Batch::new();
    for m in 2..=6usize {
        for lambda in [0.3, 0.65, 1.0] {
            for side in [ExtremalSide::Analytic, ExtremalSide::Coanalytic] {
                let sharp = extremal(m, lambda, side, m).unwrap();
                let (h, g) = (sharp.h().clone(), sharp.g().clone());
                let inflate = |s: &AnalyticSeries| {
                    AnalyticSeries::linear_combine(&[(Complex::new(1.01, 0.0), s)]).unwrap()
                };
                let bad = match side {
                    ExtremalSide::Analytic => {
                        let mut coeffs = inflate(&h).coeffs().to_vec();
                        coeffs[0] = Complex::new(1.0, 0.0);
                        HarmonicPolyMap::new(AnalyticSeries::new(coeffs).unwrap(), g).unwrap()
                    }
                    ExtremalSide::Coanalytic => HarmonicPolyMap::new(h, inflate(&g)).unwrap(),
                };
                let spec = pinned(lambda);
                let report = is_member_numeric(&bad, spec);
                let caught = report.verdict == Verdict::NonMember
                    && !coeff_necessary_checks(&bad, spec).is_empty();
                batch.record(if caught { report.defect_sup - lambda } else { -1.0 });
            }
        }
    }
    out.push(batch.finish(suite, "inflated-extremal-rejection", start));

    out
}

fn growth(seed: u64, samples: usize, grids: &Grids) -> Vec<SuiteEntry> {
    let start = Instant::now();
    let mut batch = Batch::new();
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i);
        let lambda = lambda_at(s);
        let f = member_at(pinned(lambda), s);
        let check = check_growth(&f, lambda, &grids.full);
        batch.record(check.worst_slack + 1e-9);
    }
    vec![batch.finish("growth", "modulus-envelope", start)]
}

fn area(seed: u64, samples: usize) -> Vec<SuiteEntry> {
    let mut out = Vec::new();
    let suite = "area";

    let start = Instant::now();
    let mut batch = Batch::new();
    let top = extremal(2, 1.0, ExtremalSide::Analytic, 2).unwrap();
    let bottom = extremal(2, 1.0, ExtremalSide::Coanalytic, 2).unwrap();
    batch.record(1e-12 - (area_exact(&top) - 1.5 * PI).abs());
    batch.record(1e-12 - (area_exact(&bottom) - 0.5 * PI).abs());
    out.push(batch.finish(suite, "sharp-area-extremes", start));

    let start = Instant::now();
    let mut batch = Batch::new();
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i);
        let lambda = lambda_at(s);
        let degree = 4 + (s as usize % 13);
        let f = member_at(pinned(lambda), s.wrapping_add(degree as u64));
        let exact = area_exact(&f);
        let quad = area_quadrature(&f, 64, 256);
        batch.record(1e-6 * exact.abs() - (quad - exact).abs());
    }
    out.push(batch.finish(suite, "closed-form-matches-quadrature", start));

    let start = Instant::now();
    let mut batch = Batch::new();
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i ^ 0xa5a5);
        let lambda = lambda_at(s);
        let f = member_at(pinned(lambda), s);
        let ceiling = PI * (1.0 + lambda * lambda / 2.0);
        batch.record(ceiling + 1e-9 - area_exact(&f));
    }
    out.push(batch.finish(suite, "area-ceiling", start));

    out
}

fn jacobian(seed: u64, samples: usize, grids: &Grids) -> Vec<SuiteEntry> {
    let start = Instant::now();
    let mut batch = Batch::new();
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i);
        let lambda = lambda_at(s);
        let f = member_at(pinned(lambda), s);
        batch.record(jacobian_bound_margin(&f, &grids.full) + 1e-9);
    }
    vec![batch.finish("jacobian", "distortion-cap", start)]
}

fn boundary(seed: u64, samples: usize) -> Vec<SuiteEntry> {
    let mut out = Vec::new();
    let suite = "boundary";

    let start = Instant::now();
    let mut length_batch = Batch::new();
    let mut winding_batch = Batch::new();
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i);
        let lambda = lambda_at(s);
        let f = member_at(pinned(lambda), s);
        let trace = boundary_trace(&f, 1024).expect("1024 samples is enough");
        length_batch.record(2.0 * PI * (1.0 + lambda) + 1e-6 - trace.length);
        winding_batch.record(0.5 - (trace.winding_about_origin - 1).abs() as f64);
    }
    out.push(length_batch.finish(suite, "length-cap", start));
    out.push(winding_batch.finish(suite, "winding-number-one", start));

    let start = Instant::now();
    let mut batch = Batch::new();
    let cusp = extremal(2, 1.0, ExtremalSide::Coanalytic, 2).unwrap();
    let trace = boundary_trace(&cusp, 4096).expect("4096 samples is enough");
    batch.record(1e-3 - (trace.length - 8.0).abs());
    out.push(batch.finish(suite, "cusp-length-eight", start));

    out
}

fn orders(seed: u64, samples: usize, grids: &Grids) -> Vec<SuiteEntry> {
    let mut out = Vec::new();
    let suite = "orders";

    let start = Instant::now();
    let mut batch = Batch::new();
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i);
        let lambda = lambda_at(s);
        let f = classes::random_member_coeff(pinned(lambda), MEMBER_DEGREE, s);
        let sum = weighted_coeff_sum(&f);
        let floor = 2.0 * (1.0 - sum) / (2.0 + sum) - 0.02;
        let est = order_estimate(&f, FunctionalKind::Starlike, &grids.full);
        batch.record(est.value - floor);
    }
    out.push(batch.finish(suite, "starlike-order-floor", start));

    let start = Instant::now();
    let mut batch = Batch::new();
    let r = grids.full.r_max();
    for lambda in [0.25, 0.5, 0.75, 1.0] {
        let sharp = extremal(2, lambda, ExtremalSide::Coanalytic, 2).unwrap();
        let est = order_estimate(&sharp, FunctionalKind::Starlike, &grids.full);
        let closed_form = 2.0 * (1.0 - lambda * r) / (2.0 + lambda * r);
        batch.record(0.02 - (est.value - closed_form).abs());
    }
    out.push(batch.finish(suite, "extremal-order-closed-form", start));

    let start = Instant::now();
    let mut batch = Batch::new();
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i ^ 0x0f0f);
        let f = member_at(pinned(1.0), s);
        let est = order_estimate(&f, FunctionalKind::Starlike, &grids.inner);
        batch.record(est.value);
    }
    out.push(batch.finish(suite, "starlike-radius-evidence", start));

    let start = Instant::now();
    let mut batch = Batch::new();
    let narrow = pinned(2.0 / 5.0f64.sqrt());
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i ^ 0xf0f0);
        let f = member_at(narrow, s);
        let est = order_estimate(&f, FunctionalKind::Starlike, &grids.full);
        batch.record(est.value + 1e-6);
    }
    out.push(batch.finish(suite, "narrow-class-whole-disk-starlike", start));

    out
}

fn products(seed: u64, samples: usize, grids: &Grids) -> Vec<SuiteEntry> {
    let mut out = Vec::new();
    let suite = "products";
    let pairs = (samples / 2).max(1);

    let start = Instant::now();
    let mut class_batch = Batch::new();
    let mut order_batch = Batch::new();
    for i in 0..pairs as u64 {
        let s = sample_seed(seed, i);
        let lambda = lambda_at(s);
        let spec = pinned(lambda);
        let f = member_at(spec, s.wrapping_mul(2));
        let big = member_at(spec, s.wrapping_mul(2).wrapping_add(1));
        let conv = convolve(&f, &big);
        let half = lambda * lambda / 2.0;
        let report = is_member_numeric(&conv, pinned(half));
        class_batch.record(if report.verdict == Verdict::Member { report.margin.max(0.0) } else { report.margin });
        let l2 = lambda * lambda;
        let star = order_estimate(&conv, FunctionalKind::Starlike, &grids.full).value
            - (2.0 * (2.0 - l2) / (4.0 + l2) - 0.02);
        let convexity = order_estimate(&conv, FunctionalKind::Convex, &grids.full).value
            - (2.0 * (1.0 - l2) / (2.0 + l2) - 0.02);
        order_batch.record(star.min(convexity));
    }
    out.push(class_batch.finish(suite, "convolution-squared-class", start));
    out.push(order_batch.finish(suite, "convolution-order-floors", start));

    let start = Instant::now();
    let mut class_batch = Batch::new();
    let mut order_batch = Batch::new();
    for i in 0..pairs as u64 {
        let s = sample_seed(seed, i ^ 0x1111);
        let lambda = lambda_at(s);
        let spec = pinned(lambda);
        let f = member_at(spec, s.wrapping_mul(2));
        let big = member_at(spec, s.wrapping_mul(2).wrapping_add(1));
        let conv = integral_convolve(&f, &big);
        let quarter = lambda * lambda / 4.0;
        let report = is_member_numeric(&conv, pinned(quarter));
        class_batch.record(if report.verdict == Verdict::Member { report.margin.max(0.0) } else { report.margin });
        let l2 = lambda * lambda;
        let star = order_estimate(&conv, FunctionalKind::Starlike, &grids.full).value
            - (2.0 * (4.0 - l2) / (8.0 + l2) - 0.02);
        let convexity = order_estimate(&conv, FunctionalKind::Convex, &grids.full).value
            - (2.0 * (2.0 - l2) / (4.0 + l2) - 0.02);
        order_batch.record(star.min(convexity));
    }
    out.push(class_batch.finish(suite, "integral-convolution-quarter-class", start));
    out.push(order_batch.finish(suite, "integral-convolution-order-floors", start));

    let start = Instant::now();
    let mut batch = Batch::new();
    let kernels = [
        AnalyticSeries::half_plane(64).unwrap(),
        AnalyticSeries::log_convex(64).unwrap(),
    ];
    let alphas = [
        Complex::new(0.0, 0.0),
        Complex::new(0.5, 0.0),
        Complex::from_polar(1.0, 0.7),
    ];
    for i in 0..(samples / 4).max(1) as u64 {
        let s = sample_seed(seed, i ^ 0x2222);
        let lambda = lambda_at(s);
        let spec = pinned(lambda);
        let f = member_at(spec, s);
        for phi in &kernels {
            for alpha in alphas {
                let sheared = shear_product(phi, alpha, &f).unwrap();
                let report = is_member_numeric(&sheared, spec);
                batch.record(if report.verdict == Verdict::Member { report.margin.max(0.0) } else { report.margin });
            }
            let tilded = tilde_product(phi, &f).unwrap();
            let report = is_member_numeric(&tilded, spec);
            batch.record(if report.verdict == Verdict::Member { report.margin.max(0.0) } else { report.margin });
        }
    }
    out.push(batch.finish(suite, "shear-and-kernel-closure", start));

    let start = Instant::now();
    let mut batch = Batch::new();
    for i in 0..(samples / 4).max(1) as u64 {
        let s = sample_seed(seed, i ^ 0x3333);
        let lambda = lambda_at(s);
        let spec = pinned(lambda);
        let maps: Vec<HarmonicPolyMap> =
            (0..5).map(|k| member_at(spec, s.wrapping_add(k * 977))).collect();
        let w = [0.3, 0.25, 0.2, 0.15, 0.1];
        let mix = convex_combination(&w, &maps).unwrap();
        let report = is_member_numeric(&mix, spec);
        batch.record(if report.verdict == Verdict::Member { report.margin.max(0.0) } else { report.margin });
    }
    out.push(batch.finish(suite, "convex-combination-closure", start));

    out
}

fn neighborhoods(seed: u64, samples: usize, grids: &Grids) -> Vec<SuiteEntry> {
    let start = Instant::now();
    let mut batch = Batch::new();
    let identity = HarmonicPolyMap::identity();
    let spec = pinned(1.0);
    for i in 0..samples as u64 {
        let s = sample_seed(seed, i);
        let f = classes::random_member_coeff(spec, MEMBER_DEGREE, s);
        let dist = nbhd_distance(&identity, &f).value;
        let report = is_member_numeric(&f, spec);
        let est = order_estimate(&f, FunctionalKind::Starlike, &grids.full);
        let mut margin = (1.0 - dist).min(est.value + 1e-6);
        if report.verdict != Verdict::Member {
            margin = -1.0;
        }
        batch.record(margin);
    }
    vec![batch.finish("neighborhoods", "identity-neighborhood-starlike", start)]
}

pub fn run(suite: Suite, seed: u64, samples: usize, grids: &Grids) -> VerifyReport {
    let mut entries = Vec::new();
    let wants = |s: Suite| suite == Suite::All || suite == s;
    if wants(Suite::Coefficients) {
        entries.extend(coefficients(seed, samples));
    }
    if wants(Suite::Growth) {
        entries.extend(growth(seed, samples, grids));
    }
    if wants(Suite::Area) {
        entries.extend(area(seed, samples));
    }
    if wants(Suite::Jacobian) {
        entries.extend(jacobian(seed, samples, grids));
    }
    if wants(Suite::Boundary) {
        entries.extend(boundary(seed, samples));
    }
    if wants(Suite::Orders) {
        entries.extend(orders(seed, samples, grids));
    }
    if wants(Suite::Products) {
        entries.extend(products(seed, samples, grids));
    }
    if wants(Suite::Neighborhoods) {
        entries.extend(neighborhoods(seed, samples, grids));
    }
    VerifyReport { seed, entries }
}
