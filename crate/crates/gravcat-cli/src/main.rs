//! `gravcat`: thermal quantum correlations of two field-split qubits.
//!
//! Subcommands: `point` for one parameter set, `sweep` for a single-variable
//! grid written as CSV, `figure` for the preset figure families, and
//! `selfcheck` for the deterministic verification suite.
//!
//! Exit codes: 0 success, 1 computation or check failure, 2 usage error.

#![forbid(unsafe_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gravcat_cli::emit::{branch_label, emit_csv, format_float};
use gravcat_cli::figures::{write_figure, FigureName};
use gravcat_cli::run::{run_point, run_sweep, BasePoint, RowOptions, SweepSpec, Variable};
use gravcat_cli::selfcheck::{render_report, run_all, suite_passed};
use gravcat_cli::CliError;

#[derive(Parser)]
#[command(
    name = "gravcat",
    version,
    about = "Thermal quantum correlations of two gravitationally coupled qubits in a split magnetic field"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every measure at one parameter point.
    Point(PointArgs),
    /// Sweep one variable over an inclusive linear grid and emit CSV.
    Sweep(SweepArgs),
    /// Write the CSV files and gnuplot script for a preset figure.
    Figure(FigureArgs),
    /// Run the deterministic verification suite.
    Selfcheck(SelfcheckArgs),
}

/// The five model inputs, shared by `point` and `sweep`. Defaults sit at
/// the weak-coupling reference point used throughout the presets.
#[derive(Args, Clone, Copy)]
struct PointFlags {
    /// Energy offset added to the uniform field in the aligned sector.
    #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
    omega: f64,
    /// Sector coupling strength.
    #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
    delta: f64,
    /// Uniform magnetic field (case-sensitive: capital B).
    #[arg(long = "B", default_value_t = 0.5, allow_negative_numbers = true)]
    uniform_field: f64,
    /// Field imbalance between the two sites (lowercase b).
    #[arg(long = "b", default_value_t = 0.5, allow_negative_numbers = true)]
    imbalance: f64,
    /// Temperature; 0 selects the ground sector.
    #[arg(long = "T", default_value_t = 0.5, allow_negative_numbers = true)]
    temperature: f64,
}

impl PointFlags {
    fn base(self) -> BasePoint {
        BasePoint {
            omega: self.omega,
            delta: self.delta,
            uniform_field: self.uniform_field,
            imbalance: self.imbalance,
            temperature: self.temperature,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Paper,
    Both,
}

#[derive(Args)]
struct PointArgs {
    #[command(flatten)]
    point: PointFlags,
    /// Also run the brute-force minimizer and print its minimum.
    #[arg(long)]
    oracle: bool,
    /// Which uncertainty variant to print.
    #[arg(long, value_enum, default_value_t = ModeArg::Both)]
    mode: ModeArg,
}

#[derive(Args)]
struct SweepArgs {
    /// Variable to sweep (case-sensitive: B is the uniform field, b the
    /// imbalance).
    #[arg(long)]
    var: Variable,
    /// Inclusive sweep start.
    #[arg(long, allow_negative_numbers = true)]
    from: f64,
    /// Inclusive sweep stop.
    #[arg(long, allow_negative_numbers = true)]
    to: f64,
    /// Number of grid points (at least 2), endpoints included.
    #[arg(long)]
    steps: usize,
    #[command(flatten)]
    point: PointFlags,
    /// Record the brute-force minimum in every row.
    #[arg(long)]
    oracle: bool,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; 0 picks the default width.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Args)]
struct FigureArgs {
    /// Preset name: fig1a, fig1b, fig2a, fig2b, fig3a, fig3b, fig4a, fig4b.
    #[arg(long)]
    name: FigureName,
    /// Directory receiving one CSV per curve plus a gnuplot script.
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    /// Override the preset's grid resolution.
    #[arg(long)]
    steps: Option<usize>,
    /// Override the preset's curve values, comma-separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    curves: Option<Vec<f64>>,
    /// Worker threads; 0 picks the default width.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Args)]
struct SelfcheckArgs {
    /// Worker threads for the parallel checks; 0 picks the default width.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

fn print_point(args: &PointArgs) -> Result<(), CliError> {
    let options = RowOptions {
        with_oracle: args.oracle,
        ..RowOptions::default()
    };
    let row = run_point(args.point.base(), &options)?;

    let mut lines: Vec<(&str, String)> = vec![
        ("omega", format_float(row.omega)),
        ("delta", format_float(row.delta)),
        ("B", format_float(row.uniform_field)),
        ("b", format_float(row.imbalance)),
        ("T", format_float(row.temperature)),
        ("Z", format_float(row.partition)),
    ];
    if args.mode != ModeArg::Paper {
        lines.push(("lqu_exact", format_float(row.lqu_exact)));
        lines.push(("branch_exact", branch_label(row.branch_exact).to_string()));
        lines.push(("w1", format_float(row.w1)));
        lines.push(("w3", format_float(row.w3)));
    }
    if args.mode != ModeArg::Exact {
        lines.push(("lqu_paper", format_float(row.lqu_paper)));
    }
    if let Some(c) = row.concurrence {
        lines.push(("concurrence", format_float(c)));
    }
    if let Some(oracle) = row.oracle_min {
        lines.push(("oracle_min", format_float(oracle)));
    }
    lines.push(("purity", format_float(row.purity)));

    let mut out = String::new();
    for (key, value) in lines {
        out.push_str(key);
        out.push_str(" = ");
        out.push_str(&value);
        out.push('\n');
    }
    print!("{out}");
    Ok(())
}

fn write_sweep(args: &SweepArgs) -> Result<(), CliError> {
    let options = RowOptions {
        with_oracle: args.oracle,
        ..RowOptions::default()
    };
    let spec = SweepSpec::new(
        args.var,
        args.from,
        args.to,
        args.steps,
        args.point.base(),
        options,
    )?;
    let rows = run_sweep(&spec, args.workers)?;
    let bytes = emit_csv(&rows)?;
    match &args.out {
        Some(path) => std::fs::write(path, bytes).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(&bytes)
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Point(args) => {
            print_point(&args)?;
            Ok(0)
        }
        Command::Sweep(args) => {
            write_sweep(&args)?;
            Ok(0)
        }
        Command::Figure(args) => {
            let written = write_figure(
                args.name,
                &args.out_dir,
                args.workers,
                args.steps,
                args.curves.as_deref(),
            )?;
            for path in written {
                println!("{}", path.display());
            }
            Ok(0)
        }
        Command::Selfcheck(args) => {
            let started = std::time::Instant::now();
            let checks = run_all(args.workers)?;
            print!("{}", render_report(&checks));
            eprintln!("selfcheck finished in {:.1} s", started.elapsed().as_secs_f64());
            Ok(if suite_passed(&checks) { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    // Clap handles usage errors itself and exits with code 2.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
