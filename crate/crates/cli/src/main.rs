mod commands;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use sha2::{Digest, Sha256};

use commands::Settings;

#[derive(Parser)]
#[command(
    name = "semirep",
    version,
    about = "Green's relations, representations and inverse-semigroup decisions for finite semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Args)]
struct GlobalOpts {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized irrep construction.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Tolerance for preunitarity and rank decisions.
    #[arg(long, global = true, default_value_t = 1e-9)]
    eps: f64,
    /// Skip brute-force cross-checks.
    #[arg(long, global = true)]
    no_oracle: bool,
    /// Include wall time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Green's relations, principal series, regularity and semisimplicity.
    Analyze { file: PathBuf },
    /// Inverse-semigroup decision via Schützenberger representations.
    IsInverse { file: PathBuf },
    /// All involutions and the one inducing the inverse map.
    Involutions { file: PathBuf },
    /// Rees coordinates of each regular J-class.
    Rees { file: PathBuf },
    /// Schützenberger representations with per-element preunitarity.
    Reps { file: PathBuf },
    /// ∗-representability under the involution declared in the file or given
    /// on the command line (1-based images).
    StarCheck {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        involution: Option<Vec<usize>>,
    },
    /// Exhaustive sweeps over small semigroups and small Rees semigroups.
    Corpus {
        /// Largest semigroup order to enumerate.
        #[arg(long, default_value_t = 4)]
        max_order: usize,
    },
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    input_digest: Option<String>,
    seed: u64,
    eps: f64,
    verdict: serde_json::Value,
    wall_time_ms: Option<f64>,
}

enum Failure {
    Input(anyhow::Error),
    Internal(anyhow::Error),
}

impl From<semirep::Error> for Failure {
    fn from(e: semirep::Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.into())
        } else {
            Failure::Input(e.into())
        }
    }
}

fn read_input(path: &PathBuf) -> Result<(String, String), Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Input(anyhow::anyhow!("{}: {e}", path.display())))?;
    let digest = Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();
    let text = String::from_utf8(bytes).map_err(|e| Failure::Input(anyhow::anyhow!("{}: {e}", path.display())))?;
    Ok((text, digest))
}

fn run(cli: Cli) -> Result<(Report, String), Failure> {
    let start = Instant::now();
    let settings = Settings {
        seed: cli.opts.seed,
        eps: cli.opts.eps,
        oracle: !cli.opts.no_oracle,
    };
    let (name, digest, out) = match &cli.command {
        Command::Corpus { max_order } => ("corpus", None, commands::corpus(*max_order, &settings)?),
        Command::Analyze { file }
        | Command::IsInverse { file }
        | Command::Involutions { file }
        | Command::Rees { file }
        | Command::Reps { file }
        | Command::StarCheck { file, .. } => {
            let (text, digest) = read_input(file)?;
            let sgt = semirep::parse_sgt(&text)
                .map_err(|e| Failure::Input(anyhow::Error::new(e).context(file.display().to_string())))?;
            let (name, out) = match &cli.command {
                Command::Analyze { .. } => ("analyze", commands::analyze(&sgt.table)?),
                Command::IsInverse { .. } => ("is-inverse", commands::is_inverse(&sgt.table, &settings)?),
                Command::Involutions { .. } => ("involutions", commands::involutions(&sgt)?),
                Command::Rees { .. } => ("rees", commands::rees(&sgt.table)?),
                Command::Reps { .. } => ("reps", commands::reps(&sgt.table, &settings)?),
                Command::StarCheck { involution, .. } => {
                    let star = match involution {
                        Some(v) => Some(
                            v.iter()
                                .map(|&x| {
                                    x.checked_sub(1).ok_or_else(|| {
                                        Failure::Input(anyhow::anyhow!("involution indices are 1-based"))
                                    })
                                })
                                .collect::<Result<Vec<_>, _>>()?,
                        ),
                        None => sgt.involution.clone(),
                    };
                    let star = star.ok_or_else(|| {
                        Failure::Input(anyhow::anyhow!(
                            "no involution given: add an \"involution\" line or pass --involution"
                        ))
                    })?;
                    ("star-check", commands::star_check(&sgt.table, &star, &settings)?)
                }
                Command::Corpus { .. } => unreachable!(),
            };
            (name, Some(digest), out)
        }
    };
    let report = Report {
        command: name,
        input_digest: digest,
        seed: settings.seed,
        eps: settings.eps,
        verdict: out.json,
        wall_time_ms: cli.opts.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    };
    Ok((report, out.text))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.opts.json;
    let timing = cli.opts.timing;
    match run(cli) {
        Ok((report, text)) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            } else {
                print!("{text}");
                if timing {
                    println!("wall time: {:.1} ms", report.wall_time_ms.unwrap_or_default());
                }
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(2)
        }
    }
}
