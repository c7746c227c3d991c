//! Numerical toolkit for truncated-series planar harmonic mappings on the
//! unit disk.
//!
//! A map is stored as f = h + conj(g) with analytic polynomial parts
//! h(z) = z + Σ aₙzⁿ and g(z) = Σ bₙzⁿ. Everything here revolves around the
//! derivative defect D(z) = |h'(z) − 1| + |g'(z)| and the family of maps
//! with D < λ on the open disk for a parameter λ ∈ (0, 1], optionally with
//! g'(0) pinned to 0. Members are sense-preserving and close-to-convex, and
//! obey sharp growth, area, Jacobian, and coefficient bounds that the test
//! suites verify numerically.
//!
//! Module map:
//! * [`series`]: coefficient arithmetic on truncated analytic series.
//! * [`harmap`]: the harmonic map type (evaluation, Jacobian, angular
//!   derivative, analytic ε-slices h + εg) and disk sampling grids.
//! * [`classes`]: membership tests (boundary supremum of the defect,
//!   coefficient criteria), extremal maps, seeded random member generators,
//!   and coefficient-weighted neighborhoods.
//! * [`geometry`]: growth envelopes, image area (closed form and
//!   quadrature), Jacobian bound margins, boundary traces with length and
//!   winding, starlikeness and convexity functionals, order and radius
//!   estimates.
//! * [`products`]: convolution-type products under which the family is
//!   closed.
//!
//! With the `parallel` feature (default) grid sweeps and batch checks fan
//! out over rayon. Reductions keep deterministic order either way, so
//! results are bit-identical with the feature disabled.

pub mod classes;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod harmap;
pub mod products;
pub mod series;

/// Scalar type for all coefficients and sample points.
pub type Complex = num_complex::Complex<f64>;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

pub use classes::{
    coeff_necessary_checks, coeff_sufficient, extremal, is_member_numeric, nbhd_distance,
    random_member_boundary, random_member_coeff, sup_defect, ClassSpec, ExtremalSide,
    MembershipReport, Verdict,
};
pub use geometry::{
    area_exact, area_quadrature, boundary_trace, check_growth, convex_functional, growth_bounds,
    jacobian_bound_margin, order_estimate, radius_bracket, starlike_functional, BoundaryTrace,
    FunctionalKind, GrowthCheck, OrderEstimate, RadiusBracket,
};
pub use harmap::{DiskGrid, HarmonicPolyMap};
pub use products::{convex_combination, convolve, integral_convolve, shear_product, tilde_product};
pub use series::{AnalyticSeries, DerivedSeries, COEFF_TOL, DEFAULT_DEGREE};
