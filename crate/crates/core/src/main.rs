use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use paritykick::experiments::{
    list_presets, preset, run_scenario, sweep_min_cv, write_csv, write_report_json,
    write_sweep_csv, Scenario,
};
use paritykick::pauli::anticommutant;
use paritykick::{Error, Result};

#[derive(Parser)]
#[command(
    name = "paritykick",
    version,
    about = "Parity-kick entanglement protection in spin chains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Built-in scenario (see `presets`).
    #[arg(long)]
    preset: Option<String>,
    /// TOML scenario file.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<Scenario> {
        match (&self.preset, &self.config) {
            (Some(name), _) => preset(name),
            (_, Some(path)) => Scenario::from_path(path),
            _ => unreachable!("clap enforces one source"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario and emit its trajectory as CSV.
    Run {
        #[command(flatten)]
        source: Source,
        /// Trajectory CSV path (stdout when omitted).
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Free-evolution reference CSV for kicked scenarios.
        #[arg(long)]
        free_csv: Option<PathBuf>,
        /// Full JSON report.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// List built-in presets.
    Presets,
    /// Preserved CV minimum for several half-periods.
    Sweep {
        #[command(flatten)]
        source: Source,
        /// Half-periods, comma separated; fractions like `1/15` are accepted.
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<String>,
    },
    /// Print the anti-commuting Pauli strings of a scenario's model.
    Anticommutant {
        #[command(flatten)]
        source: Source,
    },
}

fn parse_time(text: &str) -> Result<f64> {
    let bad = || Error::Validation {
        field: "values".into(),
        message: format!("cannot parse {text:?} as a time"),
    };
    match text.split_once('/') {
        Some((a, b)) => {
            let (a, b): (f64, f64) = (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            );
            Ok(a / b)
        }
        None => text.trim().parse().map_err(|_| bad()),
    }
}

fn create(path: &PathBuf) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run {
            source,
            csv,
            free_csv,
            report,
        } => {
            let r = run_scenario(&source.load()?)?;
            match csv {
                Some(p) => write_csv(&r.rows, create(&p)?)?,
                None => write_csv(&r.rows, io::stdout().lock())?,
            }
            if let Some(p) = free_csv {
                let free = r.free_reference.as_ref().ok_or_else(|| Error::Validation {
                    field: "free_csv".into(),
                    message: "scenario is not kicked; its main CSV is already free evolution"
                        .into(),
                })?;
                write_csv(&free.rows, create(&p)?)?;
            }
            if let Some(p) = report {
                write_report_json(&r, create(&p)?)?;
            }
        }
        Command::Presets => {
            let mut out = io::stdout().lock();
            for p in list_presets() {
                writeln!(out, "{:<6} {}", p.name, p.description)?;
            }
        }
        Command::Sweep { source, values } => {
            let ts = values
                .iter()
                .map(|v| parse_time(v))
                .collect::<Result<Vec<_>>>()?;
            let rows = sweep_min_cv(&source.load()?, &ts)?;
            write_sweep_csv(&rows, io::stdout().lock())?;
        }
        Command::Anticommutant { source } => {
            let model = source.load()?.model.build()?;
            let mut out = io::stdout().lock();
            for s in anticommutant(&model)? {
                writeln!(out, "{s}")?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
