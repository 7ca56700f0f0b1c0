use std::ops::RangeInclusive;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spline_dim::analytics::bound_analytics;
use spline_dim::bound::schumaker_bound;
use spline_dim::checks::{run_checks, CheckRecord};
use spline_dim::complex::discrepancy;
use spline_dim::mesh::{bundled_mesh_text, BUNDLED_MESHES};
use spline_dim::report::{
    parse_range, rows_to_csv, rows_to_text, sweep, to_csv, to_sorted_json, Row, RunRecord,
};
use spline_dim::{parse_mesh, RankEngine, RankMethod, Triangulation, ENGINE_VERSION};

/// Exit status when a `check` clause fails.
const CHECK_FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "splinedim", version, about = "Exact spline space dimensions on planar triangulations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print dim C^r_k.
    Dim(PointArgs),
    /// Print Schumaker's lower bound P(r,k).
    Bound(PointArgs),
    /// Tabulate the discrepancy rows over a range of degrees.
    Sweep(SweepArgs),
    /// Run every self-check that applies to the mesh.
    Check(CheckArgs),
    /// Closed-form quantities attached to the degree bound, per r.
    Analytics(AnalyticsArgs),
}

#[derive(Args)]
struct Common {
    /// Bundled mesh name or path to a mesh file.
    #[arg(long)]
    mesh: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the modular rank primes; results do not depend on it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report wall-clock time.
    #[arg(long)]
    timing: bool,
    /// Use fraction-free elimination for every rank, however large.
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct PointArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    r: usize,
    /// `N`, `A..B` or `A..=B`, inclusive.
    #[arg(long, value_parser = range_arg)]
    k: RangeInclusive<usize>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    common: Common,
    /// `N`, `A..B` or `A..=B`, inclusive.
    #[arg(long, value_parser = range_arg)]
    r: RangeInclusive<usize>,
}

#[derive(Args)]
struct AnalyticsArgs {
    /// `N`, `A..B` or `A..=B`, inclusive.
    #[arg(long, value_parser = range_arg)]
    r: RangeInclusive<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

fn range_arg(text: &str) -> Result<RangeInclusive<usize>, String> {
    parse_range(text).ok_or_else(|| format!("expected N or A..B with A <= B, got {text:?}"))
}

fn load_mesh(spec: &str) -> Result<Triangulation, String> {
    if let Some(text) = bundled_mesh_text(spec) {
        return parse_mesh(text).map_err(|e| e.to_string());
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path).map_err(|e| {
        format!("cannot read mesh {spec:?}: {e} (bundled meshes: {})", BUNDLED_MESHES.join(", "))
    })?;
    parse_mesh(&text).map_err(|e| format!("{spec}: {e}"))
}

fn engine(common: &Common) -> RankEngine {
    let method = if common.exact { RankMethod::Exact } else { RankMethod::Auto };
    RankEngine::new(method, common.seed)
}

fn elapsed_ms(common: &Common, start: Instant) -> Option<u64> {
    common.timing.then(|| start.elapsed().as_millis() as u64)
}

fn record(
    command: &str,
    common: &Common,
    r: usize,
    rows: Vec<Row>,
    max: Option<usize>,
    start: Instant,
) -> RunRecord {
    RunRecord {
        command: command.into(),
        mesh: common.mesh.clone(),
        r,
        rows,
        max_nonzero_h1: max,
        engine_version: ENGINE_VERSION.into(),
        elapsed_ms: elapsed_ms(common, start),
    }
}

fn print_timing(common: &Common, start: Instant) {
    if common.timing && common.format != Format::Json {
        eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    }
}

fn run_point(command: &str, args: &PointArgs) -> Result<ExitCode, String> {
    let start = Instant::now();
    let mesh = load_mesh(&args.common.mesh)?;
    if command == "bound" && args.common.format == Format::Text {
        let p = schumaker_bound(&mesh, args.r, args.k).map_err(|e| e.to_string())?;
        println!("{}", p.value);
        print_timing(&args.common, start);
        return Ok(ExitCode::SUCCESS);
    }
    let engine = engine(&args.common);
    let row = Row::from(&discrepancy(&mesh, args.r, args.k, &engine).map_err(|e| e.to_string())?);
    match args.common.format {
        Format::Text => println!("{}", row.dim),
        Format::Csv => print!("{}", rows_to_csv(&[row])),
        Format::Json => print!("{}", record(command, &args.common, args.r, vec![row], None, start).to_json()),
    }
    print_timing(&args.common, start);
    Ok(ExitCode::SUCCESS)
}

fn run_sweep(args: &SweepArgs) -> Result<ExitCode, String> {
    let start = Instant::now();
    let mesh = load_mesh(&args.common.mesh)?;
    let (rows, max) =
        sweep(&mesh, args.r, args.k.clone(), &engine(&args.common)).map_err(|e| e.to_string())?;
    match args.common.format {
        Format::Text => print!("{}", rows_to_text(&rows, max)),
        Format::Csv => print!("{}", rows_to_csv(&rows)),
        Format::Json => print!("{}", record("sweep", &args.common, args.r, rows, max, start).to_json()),
    }
    print_timing(&args.common, start);
    Ok(ExitCode::SUCCESS)
}

fn run_check(args: &CheckArgs) -> Result<ExitCode, String> {
    let start = Instant::now();
    let mesh = load_mesh(&args.common.mesh)?;
    let clauses = run_checks(&mesh, args.r.clone(), &engine(&args.common)).map_err(|e| e.to_string())?;
    let passed = clauses.iter().all(|c| c.passed);
    match args.common.format {
        Format::Json => {
            let rec = CheckRecord {
                command: "check".into(),
                mesh: args.common.mesh.clone(),
                r_range: [*args.r.start(), *args.r.end()],
                clauses,
                passed,
                engine_version: ENGINE_VERSION.into(),
            };
            print!("{}", to_sorted_json(&rec));
        }
        Format::Csv => print!("{}", to_csv(&clauses)),
        Format::Text => {
            for c in &clauses {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let k = c.offending_k.map_or(String::new(), |k| format!(" (first offending k = {k})"));
                println!("{status} r={} {}: {}{k}", c.r, c.name, c.statement);
            }
            let failed = clauses.iter().filter(|c| !c.passed).count();
            println!("{} clauses, {failed} failed", clauses.len());
        }
    }
    print_timing(&args.common, start);
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(CHECK_FAILED) })
}

fn run_analytics(args: &AnalyticsArgs) -> Result<ExitCode, String> {
    let items: Vec<_> = args.r.clone().map(bound_analytics).collect();
    match args.format {
        Format::Json => print!("{}", to_sorted_json(&items)),
        Format::Csv => print!("{}", to_csv(&items)),
        Format::Text => {
            for a in &items {
                println!(
                    "r={}: (22r+7)/10 = {} (floor {}), floor((9r+2)/4) = {}",
                    a.r, a.degree_bound, a.degree_bound_floor, a.max_h1_degree
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Dim(args) => run_point("dim", args),
        Command::Bound(args) => run_point("bound", args),
        Command::Sweep(args) => run_sweep(args),
        Command::Check(args) => run_check(args),
        Command::Analytics(args) => run_analytics(args),
    };
    result.unwrap_or_else(|message| {
        eprintln!("error: {message}");
        ExitCode::FAILURE
    })
}
