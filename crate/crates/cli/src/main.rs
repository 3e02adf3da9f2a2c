//! `ttstar`: command-line front end for the tt*-Toda kernels.
//!
//! JSON goes to stdout unless `--out FILE` is given. Exit codes: 0 success,
//! 1 failed self-check, 2 invalid input, 3 numerical failure.

mod commands;
mod convert;
mod input;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{ensure, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use crate::convert::{Data, Kind, Sources};

#[derive(Parser)]
#[command(
    name = "ttstar",
    version,
    about = "tt*-Toda data, Stokes parameters, affine weights and minimal models"
)]
struct Cli {
    /// Write the main output to FILE instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

/// Flags describing k, m, s or a weight.
#[derive(Args, Clone, Debug, Default)]
struct DataArgs {
    /// Rank n; checked against the data when given.
    #[arg(long)]
    n: Option<usize>,
    /// Exponents k_0,…,k_n, e.g. 1,0,0,0 or 1/2,-1,0.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    /// Trace-zero m_0,…,m_n as rationals.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    /// Stokes numbers s_1,…,s_n; complex entries as a+bi.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    /// Weight coefficients v_1,…,v_n in the basic weights.
    #[arg(long)]
    v: Option<String>,
    /// Level of the weight.
    #[arg(long)]
    level: Option<u64>,
    /// Total N = n+1+Σk_i, needed to turn m into k.
    #[arg(long = "N")]
    total: Option<String>,
    /// JSON file holding the input object instead of flags.
    #[arg(long)]
    input: Option<PathBuf>,
}

impl DataArgs {
    fn sources(&self) -> Result<Sources> {
        Ok(Sources {
            k: self.k.clone(),
            m: self.m.clone(),
            s: self.s.clone(),
            v: self.v.clone(),
            level: self.level,
            total: self.total.clone(),
            input: self.input.as_deref().map(input::read_json).transpose()?,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Convert between k, m, s and affine dominant weights.
    Convert {
        #[arg(long, value_enum)]
        from: Kind,
        #[arg(long, value_enum)]
        to: Kind,
        /// Reject input that is not tt*-symmetric.
        #[arg(long)]
        tt_symmetric: bool,
        #[command(flatten)]
        data: DataArgs,
    },
    /// Stokes numbers, characteristic polynomial and eigenvalues from k or m.
    Stokes {
        #[command(flatten)]
        data: DataArgs,
    },
    /// Integer exponents to a dominant weight and back, with the alcove check;
    /// exact m is classified.
    Weight {
        #[command(flatten)]
        data: DataArgs,
    },
    /// Special elements of level k, characters and the fusion-ideal test.
    Fusion {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        level: u64,
        /// Highest weight of the character to evaluate, e.g. 2,0.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Central charge and conformal dimensions of the (n+1, N) or (p, p') model.
    Model {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        total: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        p_prime: Option<u64>,
        /// Also write the table as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Cyclic classes of exponent strings with total N.
    Necklaces {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        total: u64,
        /// Print the enumerated and closed-form counts only.
        #[arg(long)]
        count: bool,
    },
    /// Integrate the radial Toda equation from asymptotic data; CSV output.
    Ode {
        #[command(flatten)]
        data: DataArgs,
        /// Starting radius.
        #[arg(long, default_value_t = 0.05)]
        eps: f64,
        /// Final radius.
        #[arg(long)]
        r_end: f64,
        /// Fixed RK4 step count (default 1000).
        #[arg(long)]
        steps: Option<usize>,
        /// Adaptive tolerance instead of a fixed step count.
        #[arg(long)]
        tol: Option<f64>,
        /// Additive constants w_i(ε) += c_i.
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
        /// JSON metadata file; defaults to the --out path with .json appended.
        #[arg(long)]
        meta: Option<PathBuf>,
    },
    /// Run the invariant suite.
    Selfcheck {
        #[arg(long, default_value_t = ttstar_core::selfcheck::DEFAULT_SEED)]
        seed: u64,
    },
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn emit(out: &Option<PathBuf>, value: &Value) -> Result<()> {
    let mut w = sink(out)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    let value = match &cli.command {
        Command::Convert {
            from,
            to,
            tt_symmetric,
            data,
        } => {
            let src = data.sources()?;
            let input = Data::read(*from, &src)?;
            convert::check_rank(&input, data.n)?;
            if *tt_symmetric {
                ensure!(input.is_tt_symmetric()?, "input is not tt*-symmetric");
            }
            input.convert(*to, src.total()?)?.to_json()
        }
        Command::Stokes { data } => commands::stokes(&data.sources()?, data.n)?,
        Command::Weight { data } => commands::weight(&data.sources()?, data.n)?,
        Command::Fusion { n, level, mu } => commands::fusion(*n, *level, mu.as_deref())?,
        Command::Model {
            n,
            total,
            p,
            p_prime,
            csv,
        } => commands::model(*n, *total, *p, *p_prime, csv.as_deref())?,
        Command::Necklaces { n, total, count } => commands::necklaces(*n, *total, *count)?,
        Command::Ode {
            data,
            eps,
            r_end,
            steps,
            tol,
            shift,
            meta,
        } => {
            let args = commands::OdeArgs {
                epsilon: *eps,
                r_end: *r_end,
                steps: *steps,
                tol: *tol,
                shift: shift.as_deref(),
            };
            let src = data.sources()?;
            let mut csv_out = sink(&cli.out)?;
            let meta_value = commands::ode(&src, data.n, &args, &mut csv_out)?;
            csv_out.flush()?;
            let meta_path = meta.clone().or_else(|| {
                cli.out.as_ref().map(|p| {
                    let mut s = p.clone().into_os_string();
                    s.push(".json");
                    PathBuf::from(s)
                })
            });
            if let Some(path) = meta_path {
                emit(&Some(path), &meta_value)?;
            }
            return Ok(ExitCode::SUCCESS);
        }
        Command::Selfcheck { seed } => {
            let (value, passed) = commands::selfcheck(*seed);
            emit(&cli.out, &value)?;
            return Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    };
    emit(&cli.out, &value)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            let numerical = err
                .chain()
                .filter_map(|e| e.downcast_ref::<ttstar_core::Error>())
                .any(ttstar_core::Error::is_numerical);
            ExitCode::from(if numerical { 3 } else { 2 })
        }
    }
}
