//! Execution helpers shared by grid sweeps and batch checks.
//!
//! With the `parallel` feature (default) [`map_range`] fans out over the
//! rayon pool; results are collected in index order, and every reduction in
//! the crate folds those ordered values sequentially (plain scans) or by
//! [`pairwise_sum`], so numbers are bit-identical whether or not the
//! feature is enabled. [`map_range_seq`] is the always-available sequential
//! twin; the bench suite runs both on the same kernels to measure the
//! speedup.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every index in `0..n`, preserving index order.
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential twin of [`map_range`], kept unconditionally compiled so the
/// two paths can be compared in one build.
pub fn map_range_seq<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

/// Cascade summation: deterministic for a fixed slice order and with error
/// growth O(log n) instead of O(n) on long grids.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 32 {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

/// Index of the largest value, first occurrence on ties. NaN entries never
/// win. Panics on an empty slice.
pub fn argmax(xs: &[f64]) -> usize {
    assert!(!xs.is_empty(), "argmax of an empty slice");
    let mut best = 0;
    let mut best_val = f64::NEG_INFINITY;
    for (i, &v) in xs.iter().enumerate() {
        if v > best_val {
            best = i;
            best_val = v;
        }
    }
    best
}
