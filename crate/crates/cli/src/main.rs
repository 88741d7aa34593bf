use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ncq_core::check::self_check;
use ncq_core::nc::Orientation;
use ncq_core::sweep::{
    emit_csv, evaluate_point, figure_configs, parse_config, run_sweep, write_csv, CycleKind, SweepPoint, SweepRow,
    Units,
};
use ncq_core::{Error, SolverSettings};

const EXIT_INPUT: u8 = 1;
const EXIT_CHECK: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "ncq", version, about = "Quantum heat engines on noncommutative phase space")]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the sweep described by a config file and write CSV.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Output file; overrides `output` in the config. Stdout if neither is set.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerate the data behind efficiency figure 2, 3 or 4.
    Figure {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=4))]
        id: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate one cycle and print it as a CSV row.
    Point {
        #[arg(long, value_parser = parse_cycle)]
        cycle: CycleKind,
        #[arg(long, default_value = "positive", value_parser = parse_orientation)]
        orientation: Orientation,
        #[arg(long)]
        n_phi0: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        theta_eta: f64,
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
    },
    /// Run every oracle against the closed forms.
    Check,
}

fn parse_cycle(s: &str) -> Result<CycleKind, String> {
    s.parse()
}

fn parse_orientation(s: &str) -> Result<Orientation, String> {
    s.parse()
}

/// Default settings with the root tolerance taken from `NCQ_TOL` if set.
fn solver_settings() -> Result<SolverSettings, Error> {
    let settings = SolverSettings::default();
    match std::env::var("NCQ_TOL") {
        Ok(raw) => match raw.trim().parse::<f64>() {
            Ok(tol) if tol > 0.0 && tol.is_finite() => Ok(settings.with_root_tol(tol)),
            _ => Err(Error::Validation(format!("NCQ_TOL must be a positive number, got `{raw}`"))),
        },
        Err(_) => Ok(settings),
    }
}

fn write_rows(rows: &[SweepRow], out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => emit_csv(rows, path),
        None => write_csv(rows, io::stdout().lock()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let settings = solver_settings()?;
    match cli.command {
        Command::Sweep { config, out } => {
            let text = fs::read_to_string(&config)?;
            let mut cfg = parse_config(&text)?;
            if std::env::var_os("NCQ_TOL").is_some() {
                cfg.settings.root_tol = settings.root_tol;
            }
            let rows = run_sweep(&cfg, cli.jobs)?;
            write_rows(&rows, out.as_deref().or(cfg.output.as_deref()))?;
        }
        Command::Figure { id, out } => {
            fs::create_dir_all(&out)?;
            for (stem, cfg) in figure_configs(id)? {
                let rows = run_sweep(&cfg, cli.jobs)?;
                let path = out.join(format!("{stem}.csv"));
                emit_csv(&rows, &path)?;
                let errors = rows.iter().filter(|r| !r.is_ok()).count();
                eprintln!("wrote {} ({} rows, {} outside the admissible domain)", path.display(), rows.len(), errors);
            }
        }
        Command::Point {
            cycle,
            orientation,
            n_phi0,
            theta_eta,
            gamma,
            alpha,
            hbar,
            omega,
            mass,
        } => {
            let point = SweepPoint {
                cycle,
                orientation,
                n_phi0,
                theta_eta,
                gamma,
                alpha,
            };
            let efficiency = evaluate_point(&point, &Units { hbar, omega, mass })?;
            let row = SweepRow {
                point,
                efficiency: Some(efficiency),
                status: "ok",
            };
            write_csv(&[row], io::stdout().lock())?;
        }
        Command::Check => {
            let report = self_check(&settings);
            let mut stdout = io::stdout().lock();
            stdout.write_all(report.table().as_bytes())?;
            if !report.all_passed() {
                writeln!(stdout, "self-check FAILED")?;
                return Ok(ExitCode::from(EXIT_CHECK));
            }
            writeln!(stdout, "self-check passed")?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) => ExitCode::from(EXIT_IO),
                _ => ExitCode::from(EXIT_INPUT),
            }
        }
    }
}
