//! Deterministic SVG renderings of a stored map. Coordinates are written
//! with fixed six-decimal formatting, so the same map and flags always
//! produce byte-identical files.

use std::fmt::Write as _;

use harmkit::geometry::boundary_trace;
use harmkit::{Complex, DiskGrid, HarmonicPolyMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Style {
    /// Closed image of the unit circle.
    BoundaryCurve,
    /// Images of concentric circles and radial rays of the disk.
    GridImage,
}

impl Style {
    pub fn name(self) -> &'static str {
        match self {
            Style::BoundaryCurve => "boundary-curve",
            Style::GridImage => "grid-image",
        }
    }
}

/// One polyline in image coordinates plus its stroke color.
struct Stroke {
    points: Vec<(f64, f64)>,
    closed: bool,
    color: &'static str,
}

fn flip(z: Complex) -> (f64, f64) {
    // SVG y grows downward; mirror so the image keeps its orientation.
    (z.re, -z.im)
}

fn emit(strokes: &[Stroke]) -> String {
    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for s in strokes {
        for &(x, y) in &s.points {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1e-6);
    let pad = 0.05 * span;
    let width = max_x - min_x + 2.0 * pad;
    let height = max_y - min_y + 2.0 * pad;
    let stroke_width = 0.004 * span;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\" width=\"640\" height=\"640\">",
        min_x - pad,
        min_y - pad,
        width,
        height
    );
    let _ = writeln!(
        svg,
        "<rect x=\"{:.6}\" y=\"{:.6}\" width=\"{:.6}\" height=\"{:.6}\" fill=\"#ffffff\"/>",
        min_x - pad,
        min_y - pad,
        width,
        height
    );
    for s in strokes {
        let mut d = String::new();
        for (i, &(x, y)) in s.points.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(d, "{cmd}{x:.6} {y:.6}");
        }
        if s.closed {
            d.push('Z');
        }
        let _ = writeln!(
            svg,
            "<path d=\"{d}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{stroke_width:.6}\"/>",
            s.color
        );
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn boundary_curve_svg(f: &HarmonicPolyMap, samples: usize) -> Result<String, String> {
    let trace = boundary_trace(f, samples).map_err(|e| e.to_string())?;
    let stroke = Stroke {
        points: trace.points.iter().map(|&z| flip(z)).collect(),
        closed: true,
        color: "#1d4ed8",
    };
    Ok(emit(&[stroke]))
}

pub fn grid_image_svg(f: &HarmonicPolyMap, angles: usize, r_max: f64) -> Result<String, String> {
    let grid = DiskGrid::standard(angles, r_max).map_err(|e| e.to_string())?;
    let mut strokes = Vec::new();
    for &r in grid.radii() {
        let points = (0..angles)
            .map(|k| {
                let theta = std::f64::consts::TAU * k as f64 / angles as f64;
                flip(f.eval(Complex::from_polar(r, theta)))
            })
            .collect();
        strokes.push(Stroke {
            points,
            closed: true,
            color: "#2563eb",
        });
    }
    let steps = 96;
    for k in 0..16 {
        let theta = std::f64::consts::TAU * k as f64 / 16.0;
        let points = (0..=steps)
            .map(|i| {
                let r = r_max * i as f64 / steps as f64;
                flip(f.eval(Complex::from_polar(r, theta)))
            })
            .collect();
        strokes.push(Stroke {
            points,
            closed: false,
            color: "#dc2626",
        });
    }
    Ok(emit(&strokes))
}
