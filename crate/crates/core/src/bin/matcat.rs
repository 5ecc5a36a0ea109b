use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use matcat::harness::{eval_morphism, parse_q, parse_row, run_suite, Format, Instance, RunConfig, Target};
use matcat::linalg::Q;
use matcat::Error;

#[derive(Parser)]
#[command(name = "matcat", version, about = "Exact law checks for the matrix category and its bialgebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite and print a report.
    Check {
        #[arg(long, value_enum, default_value = "all")]
        target: Target,
        #[command(flatten)]
        opts: Opts,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include per-check wall-clock times.
        #[arg(long)]
        timings: bool,
    },
    /// Print one row of a structure map or composite.
    Eval {
        /// e.g. "mu ∘ (mu ⊗ id)"
        #[arg(long)]
        expr: String,
        /// `*`, a number, `x0`, `[d1,...]` or a pair `(r,s)`.
        #[arg(long)]
        row: String,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args)]
struct Opts {
    /// Braiding parameter, an exact rational.
    #[arg(long, default_value = "2", value_parser = q_arg, allow_hyphen_values = true)]
    q: Q,
    #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
    max_degree: i64,
    #[arg(long, default_value_t = 2)]
    max_dim: usize,
    /// Probe rows per law.
    #[arg(long, default_value_t = 25)]
    probes: usize,
    /// Overridden by MATCAT_SEED when set.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "graded")]
    instance: Instance,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn q_arg(s: &str) -> Result<Q, String> {
    parse_q(s).map_err(|e| e.to_string())
}

impl Opts {
    fn config(&self, timings: bool) -> Result<RunConfig, Error> {
        let seed = match std::env::var("MATCAT_SEED") {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("MATCAT_SEED is not a seed: {s:?}")))?,
            Err(_) => self.seed,
        };
        let cfg = RunConfig {
            q: self.q.clone(),
            max_degree: self.max_degree,
            max_dim: self.max_dim,
            probe_rows: self.probes,
            seed,
            instance: self.instance,
            format: self.format,
            timings,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

enum Failure {
    Usage(String),
    Checks,
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Usage(m) => Failure::Usage(m),
            e => Failure::Other(e.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check {
            target,
            opts,
            out,
            timings,
        } => {
            let cfg = opts.config(timings)?;
            let report = run_suite(target, &cfg)?;
            let text = report.render();
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Failure::Other(format!("writing {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Eval { expr, row, opts } => {
            let cfg = opts.config(false)?;
            let row = parse_row(&row)?;
            let report = eval_morphism(&expr, &row, &cfg).map_err(|e| match e {
                Error::Usage(m) => Failure::Usage(m),
                e => Failure::Usage(e.to_string()),
            })?;
            print!("{}", report.render(cfg.format));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Other(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
