mod commands;
mod matrix_file;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use stampfli::numrange::DEFAULT_SAMPLES;
use stampfli::oracle::DEFAULT_TOL;
use stampfli::roberts::DEFAULT_ROBERTS_TOL;
use stampfli::Complex64;

use commands::{Ctx, ExitWith, MethodChoice};

#[derive(Parser)]
#[command(
    name = "stampfli",
    version,
    about = "Stampfli points, numerical ranges and Roberts orthogonality"
)]
struct Cli {
    /// Convergence and structure tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Number of support angles for boundary tables.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// Output file (a directory for `figures`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Stampfli point; one JSON record per input file.
    St {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodChoice::Auto)]
        method: MethodChoice,
        /// Include wall-clock time in the record.
        #[arg(long)]
        timing: bool,
    },
    /// Numerical range boundary, spectrum and Stampfli point as CSV.
    Nr { path: PathBuf },
    /// Maximal numerical range of A - shift·I and its zero-membership margin.
    W0 {
        path: PathBuf,
        /// Shift as `re,im`.
        #[arg(long, default_value = "0,0", allow_hyphen_values = true, value_parser = parse_complex)]
        shift: Complex64,
    },
    /// Numerical Roberts orthogonality test against the identity.
    Roberts {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ROBERTS_TOL)]
        roberts_tol: f64,
    },
    /// Compare closed forms with the oracle and check certificates.
    Verify {
        #[arg(required_unless_present = "suite")]
        path: Option<PathBuf>,
        /// Run the built-in matrix corpus and a seeded 2×2 batch.
        #[arg(long)]
        suite: bool,
    },
    /// Write the four figure datasets into the `--out` directory.
    Figures,
    /// Print a built-in matrix as a matrix file; lists names when none is given.
    Gallery { name: Option<String> },
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s.split_once(',').ok_or("expected re,im")?;
    let re: f64 = re.trim().parse().map_err(|e| format!("{e}"))?;
    let im: f64 = im.trim().parse().map_err(|e| format!("{e}"))?;
    if !re.is_finite() || !im.is_finite() {
        return Err("shift must be finite".into());
    }
    Ok(Complex64::new(re, im))
}

fn open_out(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        anyhow::bail!(ExitWith(2, "--tol must be positive".into()));
    }
    let ctx = Ctx {
        tol: cli.tol,
        samples: cli.samples,
    };
    let mut code = ExitCode::SUCCESS;
    match cli.command {
        Command::Figures => {
            let dir = cli
                .out
                .clone()
                .ok_or_else(|| ExitWith(2, "figures requires --out <dir>".into()))?;
            for p in commands::cmd_figures(&ctx, &dir)? {
                eprintln!("wrote {}", p.display());
            }
        }
        command => {
            let mut out = open_out(&cli.out)?;
            match command {
                Command::St {
                    paths,
                    method,
                    timing,
                } => commands::cmd_st(&ctx, &paths, method, timing, &mut out)?,
                Command::Nr { path } => commands::cmd_nr(&ctx, &path, &mut out)?,
                Command::W0 { path, shift } => commands::cmd_w0(&ctx, &path, shift, &mut out)?,
                Command::Roberts { path, roberts_tol } => {
                    commands::cmd_roberts(&path, roberts_tol, &mut out)?
                }
                Command::Verify { path, suite } => {
                    if !commands::cmd_verify(&ctx, path.as_deref(), suite, &mut out)? {
                        code = ExitCode::from(1);
                    }
                }
                Command::Gallery { name } => commands::cmd_gallery(name.as_deref(), &mut out)?,
                Command::Figures => unreachable!(),
            }
            out.flush()?;
        }
    }
    Ok(code)
}

/// 3 for convergence failures, 2 for everything else.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(ExitWith(code, _)) = cause.downcast_ref::<ExitWith>() {
            return *code as u8;
        }
        if let Some(stampfli::Error::NoConvergence { .. }) = cause.downcast_ref::<stampfli::Error>()
        {
            return 3;
        }
    }
    2
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
