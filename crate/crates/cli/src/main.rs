use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minkcurves::tolerance::{GRID_POINTS, GRID_T_MAX, GRID_T_MIN};
use minkcurves::transforms::transformed;
use minkcurves::{uniform_grid, CurveSpec, DerivativeMethod, TransformKind};

mod error;
mod io;
mod suites;

use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "minkcurves", version, about = "Time-like Salkowski curves in Minkowski 3-space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a closed-form curve at uniform parameters.
    Sample(SampleArgs),
    /// Frenet frame, curvature and torsion along a curve.
    Frenet(FrenetArgs),
    /// Sample the torsion- or curvature-normalizing transform of a curve.
    Transform(TransformArgs),
    /// Run invariant suites and emit a report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Salkowski,
    AntiSalkowski,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Analytic,
    Fd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Lemma2,
    Lemma3,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long, default_value_t = GRID_T_MIN)]
    t_min: f64,
    #[arg(long, default_value_t = GRID_T_MAX)]
    t_max: f64,
    #[arg(long, default_value_t = GRID_POINTS)]
    count: usize,
}

impl GridArgs {
    fn grid(&self) -> Result<Vec<f64>, CliError> {
        if !(self.t_min.is_finite() && self.t_max.is_finite()) || self.t_max < self.t_min {
            return Err(CliError::Usage(format!("need t-min <= t-max (got {} and {})", self.t_min, self.t_max)));
        }
        if self.t_min == self.t_max {
            return Ok(Vec::new());
        }
        if self.count < 2 {
            return Err(CliError::Usage(format!("count must be at least 2 (got {})", self.count)));
        }
        Ok(uniform_grid(self.t_min, self.t_max, self.count))
    }
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    m: f64,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file, `-` for stdout.
    #[arg(long, short, default_value = "-")]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct FrenetArgs {
    #[arg(long, value_enum, required_unless_present = "input", conflicts_with = "input")]
    family: Option<Family>,
    #[arg(long, required_unless_present = "input")]
    m: Option<f64>,
    /// Tabulated curve as `t,x1,x2,x3` CSV, `-` for stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Parameters to evaluate; defaults to the interior samples for `--input`.
    #[arg(long)]
    t_min: Option<f64>,
    #[arg(long)]
    t_max: Option<f64>,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long, value_enum, default_value_t = Method::Analytic)]
    method: Method,
    /// Finite-difference step; defaults to 1e-4·max(1, |t|).
    #[arg(long)]
    step: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long, short, default_value = "-")]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct TransformArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long, value_enum, required_unless_present = "input", conflicts_with = "input")]
    family: Option<Family>,
    #[arg(long, required_unless_present = "input")]
    m: Option<f64>,
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long, short, default_value = "-")]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = suites::Suite::All)]
    suite: suites::Suite,
    /// Family parameters, comma separated or repeated.
    #[arg(long, value_delimiter = ',', num_args = 1.., default_value = "2")]
    m: Vec<f64>,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    #[arg(long, short, default_value = "-")]
    output: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

fn family_curve(family: Family, m: f64) -> Result<CurveSpec, CliError> {
    Ok(match family {
        Family::Salkowski => CurveSpec::salkowski(m)?,
        Family::AntiSalkowski => CurveSpec::anti_salkowski(m)?,
    })
}

fn base_curve(family: Option<Family>, m: Option<f64>, input: &Option<PathBuf>) -> Result<CurveSpec, CliError> {
    match (input, family, m) {
        (Some(path), _, _) => io::read_tabulated(path),
        (None, Some(f), Some(m)) => family_curve(f, m),
        _ => Err(CliError::Usage("need --family and --m, or --input".into())),
    }
}

/// Tolerance multiplier from `MINKCURVES_TOL`.
fn tolerance_scale() -> Result<f64, CliError> {
    match std::env::var("MINKCURVES_TOL") {
        Err(_) => Ok(1.0),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
            _ => Err(CliError::Usage(format!("MINKCURVES_TOL must be a positive number (got {s:?})"))),
        },
    }
}

fn sample(args: SampleArgs) -> Result<(), CliError> {
    let grid = args.grid.grid()?;
    let mut curve = family_curve(args.family, args.m)?;
    if !(args.grid.t_min > 0.0) {
        return Err(CliError::Usage(format!("t-min must be positive (got {})", args.grid.t_min)));
    }
    if let (Some(&a), Some(&b)) = (grid.first(), grid.last()) {
        curve = curve.with_domain(a, b)?;
    }
    let rows = grid.iter().map(|&t| Ok((t, curve.position(t)?))).collect::<Result<Vec<_>, CliError>>()?;
    io::write_points(io::sink(&args.output)?, args.format == Format::Json, &rows)
}

fn frenet(args: FrenetArgs) -> Result<(), CliError> {
    let curve = base_curve(args.family, args.m, &args.input)?;
    let method = match args.method {
        Method::Analytic => DerivativeMethod::Analytic,
        Method::Fd => DerivativeMethod::FiniteDifference { step: args.step },
    };
    if let Some(h) = args.step {
        if !(h > 0.0 && h.is_finite()) {
            return Err(CliError::Usage(format!("step must be positive (got {h})")));
        }
    }
    let grid = match (args.t_min, args.t_max, args.count, curve.kind()) {
        (None, None, None, minkcurves::CurveKind::Tabulated(tab)) => {
            let d = curve.domain();
            tab.params()
                .iter()
                .copied()
                .filter(|&t| {
                    let r = method.reach(t);
                    t - r > d.start && t + r < d.end
                })
                .collect()
        }
        (a, b, c, _) => GridArgs {
            t_min: a.unwrap_or(GRID_T_MIN),
            t_max: b.unwrap_or(GRID_T_MAX),
            count: c.unwrap_or(GRID_POINTS),
        }
        .grid()?,
    };
    let rows = minkcurves::frenet::frenet_samples(&curve, &grid, method)?;
    io::write_frenet(io::sink(&args.output)?, args.format == Format::Json, &rows)
}

fn transform(args: TransformArgs) -> Result<(), CliError> {
    let grid = args.grid.grid()?;
    let base = base_curve(args.family, args.m, &args.input)?;
    let kind = match args.which {
        Which::Lemma2 => TransformKind::TorsionNormalizing,
        Which::Lemma3 => TransformKind::CurvatureNormalizing,
    };
    let beta = transformed(&base, kind);
    let points = beta.sample(&grid)?;
    let rows: Vec<_> = grid.iter().copied().zip(points).collect();
    io::write_points(io::sink(&args.output)?, args.format == Format::Json, &rows)
}

fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let grid = args.grid.grid()?;
    let scale = tolerance_scale()?;
    let mut reports = Vec::new();
    for &m in &args.m {
        reports.extend(suites::run(args.suite, m, &grid)?);
    }
    let reports: Vec<_> = reports.into_iter().map(|r| r.rescaled(scale)).collect();
    io::write_reports(io::sink(&args.output)?, args.format == ReportFormat::Json, &reports)?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        return Err(CliError::ChecksFailed { failed, total: reports.len() });
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sample(a) => sample(a),
        Command::Frenet(a) => frenet(a),
        Command::Transform(a) => transform(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // downstream reader closed early, e.g. `| head`
        Err(CliError::Output(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
