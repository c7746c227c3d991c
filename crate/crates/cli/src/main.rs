//! Command-line front end: membership checks, invariant batteries, radius
//! brackets, and SVG renderings for stored harmonic polynomial maps.
//!
//! Exit codes: 0 for a member or a passing battery, 1 for a non-member or
//! a failing battery, 2 for boundary or degenerate outcomes, 3 for usage
//! and input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use harmkit::classes::{
    coeff_necessary_checks, is_member_numeric, ClassSpec, CoeffViolation, Constraint, Method,
    Verdict,
};
use harmkit::geometry::{radius_bracket, FunctionalKind};
use harmkit::{Complex, Error, HarmonicPolyMap};
use harmkit_cli::mapfile::MapFile;
use harmkit_cli::render;
use harmkit_cli::verify::{self, Grids, Suite};
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Starlike,
    Convex,
}

impl Kind {
    fn functional(self) -> FunctionalKind {
        match self {
            Kind::Starlike => FunctionalKind::Starlike,
            Kind::Convex => FunctionalKind::Convex,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Kind::Starlike => "starlike",
            Kind::Convex => "convex",
        }
    }
}

#[derive(Parser)]
#[command(
    name = "harmkit",
    version,
    about = "Membership, invariants, radii, and renderings for truncated-series harmonic maps"
)]
struct Cli {
    /// Base seed for generated members.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Bracket tolerance for the radius command (default 1e-3).
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Angular sample count for disk grids.
    #[arg(long, global = true, default_value_t = 720)]
    grid_angles: usize,

    /// Outermost grid radius.
    #[arg(long, global = true, default_value_t = 0.999)]
    r_max: f64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide class membership for a stored map.
    Check {
        /// Map file (JSON).
        input: PathBuf,
        /// Defect bound of the class.
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        /// Require the conjugated part to have no linear term.
        #[arg(long)]
        pinned: bool,
    },
    /// Generate members and re-check the library's guarantees in bulk.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Samples per property.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Bracket the largest radius on which a shape functional stays positive.
    Radius {
        /// Map file (JSON).
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Render a stored map as an SVG drawing.
    Render {
        /// Map file (JSON).
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = render::Style::BoundaryCurve)]
        style: render::Style,
        /// Output SVG path.
        #[arg(long)]
        out: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: String) -> Self {
        Failure { code: 3, message }
    }

    fn usage(message: String) -> Self {
        Failure { code: 3, message }
    }

    fn degenerate(message: String) -> Self {
        Failure { code: 2, message }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Check {
            ref input,
            lambda,
            pinned,
        } => cmd_check(input, lambda, pinned, cli.format),
        Command::Verify { suite, samples } => cmd_verify(
            suite,
            samples,
            cli.seed,
            cli.grid_angles,
            cli.r_max,
            cli.format,
        ),
        Command::Radius { ref input, kind } => {
            cmd_radius(input, kind, cli.tol.unwrap_or(1e-3), cli.format)
        }
        Command::Render {
            ref input,
            style,
            ref out,
        } => cmd_render(input, style, out, cli.grid_angles, cli.r_max, cli.format),
    }
}

fn load_map(path: &Path) -> Result<HarmonicPolyMap, Failure> {
    let file = MapFile::load(path).map_err(Failure::input)?;
    file.to_map().map_err(Failure::input)
}

fn fmt_complex(z: Complex) -> String {
    format!("{:.6}{:+.6}i", z.re, z.im)
}

fn describe_violation(v: &CoeffViolation) -> String {
    let what = match (v.constraint, v.n) {
        (Constraint::WeightedSquareSum, _) => "weighted coefficient square sum".to_string(),
        (Constraint::AnalyticCoeff, Some(n)) => format!("|a_{n}|"),
        (Constraint::CoAnalyticCoeff, Some(n)) => format!("|b_{n}|"),
        (Constraint::PairSum, Some(n)) => format!("|a_{n}| + |b_{n}|"),
        (Constraint::PairDifference, Some(n)) => format!("| |a_{n}| - |b_{n}| |"),
        (c, None) => format!("{c:?}"),
    };
    format!("{what} = {:.6} exceeds {:.6}", v.lhs, v.rhs)
}

fn cmd_check(input: &Path, lambda: f64, pinned: bool, format: Format) -> Result<u8, Failure> {
    let map = load_map(input)?;
    let spec = ClassSpec::new(lambda, pinned).map_err(|e| Failure::usage(e.to_string()))?;
    let report = is_member_numeric(&map, spec);
    let violations = coeff_necessary_checks(&map, spec);

    let verdict = match report.verdict {
        Verdict::Member => "member",
        Verdict::NonMember => "non-member",
        Verdict::BoundaryCase => "boundary-case",
    };
    let method = match report.method {
        Method::NumericSup => "numeric-sup",
        Method::CoeffSufficient => "coeff-sufficient",
        Method::CoeffNecessaryViolation => "coeff-necessary-violation",
    };

    match format {
        Format::Text => {
            println!("file: {}", input.display());
            println!(
                "map: degree {}, b1 = {}",
                map.degree(),
                fmt_complex(map.b(1))
            );
            println!(
                "class: lambda {lambda}, {}",
                if pinned { "pinned" } else { "unpinned" }
            );
            println!(
                "defect sup: {:.9} at z = {}",
                report.defect_sup,
                fmt_complex(report.witness)
            );
            println!("margin: {:.9}", report.margin);
            if violations.is_empty() {
                println!("necessary checks: pass");
            } else {
                println!("necessary checks: {} violated", violations.len());
                for v in &violations {
                    println!("  {}", describe_violation(v));
                }
            }
            println!("verdict: {verdict} ({method})");
        }
        Format::JsonLines => {
            let line = json!({
                "command": "check",
                "input": input.display().to_string(),
                "lambda": lambda,
                "pinned": pinned,
                "degree": map.degree(),
                "defect_sup": report.defect_sup,
                "margin": report.margin,
                "witness": [report.witness.re, report.witness.im],
                "method": method,
                "necessary_violations": violations.iter().map(describe_violation).collect::<Vec<_>>(),
                "verdict": verdict,
            });
            println!("{line}");
        }
    }

    Ok(match report.verdict {
        Verdict::Member => 0,
        Verdict::NonMember => 1,
        Verdict::BoundaryCase => 2,
    })
}

fn cmd_verify(
    suite: Suite,
    samples: usize,
    seed: u64,
    grid_angles: usize,
    r_max: f64,
    format: Format,
) -> Result<u8, Failure> {
    if samples == 0 {
        return Err(Failure::usage("samples must be positive".into()));
    }
    let grids = Grids::build(grid_angles, r_max).map_err(Failure::usage)?;
    let report = verify::run(suite, seed, samples, &grids);
    let overall = if report.pass() { "pass" } else { "fail" };

    match format {
        Format::Text => {
            println!(
                "verify suite {}, seed {}, samples {}",
                suite.name(),
                seed,
                samples
            );
            for e in &report.entries {
                println!(
                    "  {:<14} {:<38} samples {:>5}  violations {:>3}  worst margin {:>12.3e}  {:>5} ms",
                    e.suite, e.id, e.samples, e.violations, e.worst_margin, e.elapsed_ms
                );
            }
            println!("overall: {overall}");
        }
        Format::JsonLines => {
            for e in &report.entries {
                let line = json!({
                    "command": "verify",
                    "suite": e.suite,
                    "id": e.id,
                    "samples": e.samples,
                    "violations": e.violations,
                    "worst_margin": e.worst_margin,
                });
                println!("{line}");
            }
            let line = json!({
                "command": "verify",
                "overall": overall,
                "seed": seed,
                "samples": samples,
            });
            println!("{line}");
        }
    }

    Ok(if report.pass() { 0 } else { 1 })
}

fn cmd_radius(input: &Path, kind: Kind, tol: f64, format: Format) -> Result<u8, Failure> {
    let map = load_map(input)?;
    let bracket = match radius_bracket(&map, kind.functional(), tol) {
        Ok(b) => b,
        Err(Error::AllDegenerate) => {
            return Err(Failure::degenerate(format!(
                "the {} functional is degenerate on every probe circle",
                kind.name()
            )))
        }
        Err(e @ Error::InvalidTolerance { .. }) => return Err(Failure::usage(e.to_string())),
        Err(e) => return Err(Failure::input(e.to_string())),
    };

    match format {
        Format::Text => {
            println!(
                "{} radius of {}: [{:.6}, {:.6}] (tol {:e})",
                kind.name(),
                input.display(),
                bracket.lo,
                bracket.hi,
                bracket.tol
            );
        }
        Format::JsonLines => {
            let line = json!({
                "command": "radius",
                "input": input.display().to_string(),
                "kind": kind.name(),
                "lo": bracket.lo,
                "hi": bracket.hi,
                "tol": bracket.tol,
            });
            println!("{line}");
        }
    }
    Ok(0)
}

fn cmd_render(
    input: &Path,
    style: render::Style,
    out: &Path,
    grid_angles: usize,
    r_max: f64,
    format: Format,
) -> Result<u8, Failure> {
    let map = load_map(input)?;
    let svg = match style {
        render::Style::BoundaryCurve => {
            render::boundary_curve_svg(&map, grid_angles.max(256) * 4).map_err(Failure::usage)?
        }
        render::Style::GridImage => {
            render::grid_image_svg(&map, grid_angles, r_max).map_err(Failure::usage)?
        }
    };
    std::fs::write(out, &svg)
        .map_err(|e| Failure::input(format!("cannot write {}: {e}", out.display())))?;

    match format {
        Format::Text => {
            println!(
                "wrote {} ({} bytes) to {}",
                style.name(),
                svg.len(),
                out.display()
            );
        }
        Format::JsonLines => {
            let line = json!({
                "command": "render",
                "input": input.display().to_string(),
                "style": style.name(),
                "out": out.display().to_string(),
                "bytes": svg.len(),
            });
            println!("{line}");
        }
    }
    Ok(0)
}
