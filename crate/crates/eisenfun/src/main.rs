//! Command-line front end. Exit codes: 0 success, 1 check suite failure,
//! 2 usage error (clap parse errors included), 3 I/O error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use eisenfun::cli::{
    decompose_table, eft_table, figure, figure_default_range, phf_table, run_check, BuiltinFn,
    BuiltinSeries, Format, GridSpec, Table, DEFAULT_EFT_STEPS, DEFAULT_STEPS,
};

#[derive(Parser)]
#[command(
    name = "eisenfun",
    version,
    about = "Component functions of the exponential on the cube roots of unity: \
             figure data, tables, transforms, and an identity check suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(value: OutputFormat) -> Self {
        match value {
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    Gaussian,
    Expdecay,
}

impl From<Builtin> for BuiltinFn {
    fn from(value: Builtin) -> Self {
        match value {
            Builtin::Gaussian => BuiltinFn::Gaussian,
            Builtin::Expdecay => BuiltinFn::ExpDecay,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Series {
    Exp,
    Cosh,
}

impl From<Series> for BuiltinSeries {
    fn from(value: Series) -> Self {
        match value {
            Series::Exp => BuiltinSeries::Exp,
            Series::Cosh => BuiltinSeries::Cosh,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit the dataset behind one of the five figures (see README for the
    /// column lists).
    Figure {
        /// Figure id, 1 through 5
        id: u8,
        /// Grid start (default depends on the figure)
        #[arg(long, allow_negative_numbers = true)]
        min: Option<f64>,
        /// Grid end (default depends on the figure)
        #[arg(long, allow_negative_numbers = true)]
        max: Option<f64>,
        /// Number of grid points, endpoints included
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
        /// Write here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Tabulate all components e_0..e_(m-1) on an x grid.
    Table {
        /// Component order m (at least 2)
        #[arg(long, default_value_t = 3)]
        order: u32,
        #[arg(long, default_value_t = -3.0, allow_negative_numbers = true)]
        min: f64,
        #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
        max: f64,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
        /// Series truncation tolerance
        #[arg(long, default_value = "1e-14")]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Transform a builtin function on a k grid: both kernel variants plus
    /// the three component transforms. Cells where the weighted integrand
    /// does not decay are left empty.
    Eft {
        #[arg(long = "fn", value_enum, default_value_t = Builtin::Gaussian)]
        function: Builtin,
        #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
        k_min: f64,
        #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
        k_max: f64,
        #[arg(long, default_value_t = DEFAULT_EFT_STEPS)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Split a builtin series into its order-m parity components on an x
    /// grid.
    Decompose {
        #[arg(long = "fn", value_enum, default_value_t = Series::Exp)]
        function: Series,
        /// Component order m (at least 2)
        #[arg(long, default_value_t = 3)]
        order: u32,
        #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
        min: f64,
        #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
        max: f64,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Run the identity suite; prints one line per entry and exits nonzero
    /// if any entry is off.
    Check {
        /// Tolerance override for the standard entries (the expected-fail
        /// demonstrations keep their documented thresholds)
        #[arg(long)]
        tol: Option<f64>,
    },
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<eisenfun::Error> for Failure {
    fn from(value: eisenfun::Error) -> Self {
        match value {
            eisenfun::Error::Io(message) => Failure::Io(io::Error::other(message)),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(value: io::Error) -> Self {
        Failure::Io(value)
    }
}

fn emit(table: &Table, format: OutputFormat, out: Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let file = File::create(&path)?;
            let mut writer = BufWriter::new(file);
            table.write(&mut writer, format.into())?;
            writer.flush()?;
        }
        None => {
            let stdout = io::stdout();
            table.write(stdout.lock(), format.into())?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Figure {
            id,
            min,
            max,
            steps,
            out,
            format,
        } => {
            let (default_min, default_max) = figure_default_range(id)?;
            let grid = GridSpec::new(min.unwrap_or(default_min), max.unwrap_or(default_max), steps)?;
            let table = figure(id, Some(grid))?;
            emit(&table, format, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            order,
            min,
            max,
            steps,
            tol,
            out,
            format,
        } => {
            let grid = GridSpec::new(min, max, steps)?;
            let table = phf_table(order, grid, tol)?;
            emit(&table, format, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Eft {
            function,
            k_min,
            k_max,
            steps,
            out,
            format,
        } => {
            let grid = GridSpec::new(k_min, k_max, steps)?;
            let table = eft_table(function.into(), grid)?;
            emit(&table, format, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose {
            function,
            order,
            min,
            max,
            steps,
            out,
            format,
        } => {
            let grid = GridSpec::new(min, max, steps)?;
            let table = decompose_table(function.into(), order, grid)?;
            emit(&table, format, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { tol } => {
            if let Some(t) = tol {
                if !(t.is_finite() && t > 0.0) {
                    return Err(Failure::Usage(format!(
                        "check tolerance must be positive and finite, got {t}"
                    )));
                }
            }
            let report = run_check(tol);
            let stdout = io::stdout();
            report.write(stdout.lock())?;
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Io(error)) => {
            eprintln!("I/O error: {error}");
            ExitCode::from(3)
        }
    }
}
