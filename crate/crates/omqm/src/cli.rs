//! Argument parsing and dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use omqm_core::moduli::Point;

use crate::commands::{self, DynamicsArgs, Output};
use crate::config::{parse_mode, OutputFormat, RunConfig, ZeroSource};
use crate::error::{AppError, AppResult};
use crate::io;

#[derive(Debug, Parser)]
#[command(name = "omqm", version, about = "Number-theoretic, zeta-zero and chaotic-dynamics calculator for the OM correspondence")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// File of `key = value` lines applied before the flags below.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Zero-list file to use instead of computing zeros.
    #[arg(long, global = true)]
    pub zeros: Option<PathBuf>,

    #[arg(long, global = true)]
    pub format: Option<OutputFormat>,

    /// Also write a plot of the table to this SVG file.
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,

    /// Fractal dimension used by the OM formulas.
    #[arg(long = "D", global = true)]
    pub dimension: Option<f64>,

    #[arg(long, global = true)]
    pub delta: Option<f64>,

    /// Sign of s = ±(i - 1).
    #[arg(long = "s-sign", global = true, allow_negative_numbers = true)]
    pub s_sign: Option<i8>,

    /// Gravitational constant convention: derived or paper-literal.
    #[arg(long, global = true, value_parser = parse_mode_arg)]
    pub mode: Option<omqm_core::omqm::GravityMode>,

    /// Number of zeros to compute (at most 100).
    #[arg(long = "zero-count", global = true)]
    pub zero_count: Option<usize>,

    /// Decimal digits carried by the Feigenbaum iteration.
    #[arg(long, global = true)]
    pub precision: Option<u32>,

    /// Worker threads for the spectrum.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

fn parse_mode_arg(s: &str) -> Result<omqm_core::omqm::GravityMode, String> {
    parse_mode(s)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Von Mangoldt function and running Chebyshev sum for N = 1..=NMAX.
    Mangoldt { nmax: u64 },
    /// Chebyshev psi by the Lambda sum and by ln lcm, side by side.
    Psi { nmax: u64 },
    /// The first COUNT zeta zeros.
    Zeros {
        count: usize,
        /// Also write them as a zero-list file.
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Scaling constant, fine-structure inverse and related numbers.
    Alpha {
        /// Also evaluate the x ln x difference ratio at this N.
        #[arg(long = "limit-n")]
        limit_n: Option<u64>,
    },
    /// Mass, curvature and energy for N = 1..=NMAX.
    Spectrum { nmax: u64 },
    /// Rossler Lyapunov spectrum and Feigenbaum delta.
    DynamicsReport {
        #[arg(long, default_value_t = 12)]
        levels: usize,
        #[arg(long, default_value_t = 0.01)]
        dt: f64,
        /// Steps averaged over; defaults to 10^6 at dt = 0.01, scaled for other steps.
        #[arg(long)]
        span: Option<usize>,
    },
    /// Curvature, area and entropy split at a prime power N.
    Holography { n: u64 },
    /// Uncertainty, first-order and cosmological reports for the first COUNT prime-power pairs.
    Relations { count: usize },
    /// Reduces a closed path file to its scale and winding number.
    Knot {
        path: PathBuf,
        #[arg(long, value_parser = parse_point, default_value = "0,0")]
        center: Point,
        #[arg(long = "cell-radius", default_value_t = 1.0)]
        cell_radius: f64,
    },
}

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected x,y, got {s:?}"))?;
    let x = x.trim().parse().map_err(|_| format!("bad x in {s:?}"))?;
    let y = y.trim().parse().map_err(|_| format!("bad y in {s:?}"))?;
    Ok([x, y])
}

impl GlobalArgs {
    /// Defaults, then the config file, then flags.
    pub fn resolve(&self) -> AppResult<RunConfig> {
        let mut cfg = RunConfig::default();
        if let Some(path) = &self.config {
            cfg.apply_file(path)?;
        }
        if let Some(p) = &self.zeros {
            cfg.zeros = ZeroSource::File(p.clone());
        }
        if let Some(f) = self.format {
            cfg.format = f;
        }
        if let Some(d) = self.dimension {
            cfg.dimension = d;
        }
        if let Some(d) = self.delta {
            cfg.delta = d;
        }
        if let Some(s) = self.s_sign {
            cfg.s_sign = s;
        }
        if let Some(m) = self.mode {
            cfg.mode = m;
        }
        if let Some(n) = self.zero_count {
            cfg.zero_count = Some(n);
        }
        if let Some(p) = self.precision {
            cfg.precision_digits = p;
        }
        if let Some(t) = self.threads {
            cfg.threads = t;
        }
        Ok(cfg)
    }
}

pub fn execute(cfg: &RunConfig, command: &Command) -> AppResult<Output> {
    match command {
        Command::Mangoldt { nmax } => commands::mangoldt(cfg, *nmax),
        Command::Psi { nmax } => commands::psi(cfg, *nmax),
        Command::Zeros { count, write } => commands::zeros(cfg, *count, write.as_deref()),
        Command::Alpha { limit_n } => commands::alpha(cfg, *limit_n),
        Command::Spectrum { nmax } => commands::spectrum(cfg, *nmax),
        Command::DynamicsReport { levels, dt, span } => {
            let defaults = DynamicsArgs::default();
            let span = span.unwrap_or_else(|| (defaults.span as f64 * defaults.dt / dt).round() as usize);
            let settle = (defaults.settle as f64 * defaults.dt / dt).round() as usize;
            commands::dynamics_report(
                cfg,
                &DynamicsArgs {
                    levels: *levels,
                    dt: *dt,
                    settle: settle.max(defaults.settle),
                    span: span.max(defaults.span),
                },
            )
        }
        Command::Holography { n } => commands::holography(cfg, *n),
        Command::Relations { count } => commands::relations(cfg, *count),
        Command::Knot {
            path,
            center,
            cell_radius,
        } => commands::knot(cfg, path, *center, *cell_radius),
    }
}

/// Runs a parsed command line and returns the rendered output.
pub fn run(cli: &Cli) -> AppResult<String> {
    let cfg = cli.global.resolve()?;
    let out = execute(&cfg, &cli.command)?;
    if let Some(path) = &cli.global.svg {
        let plot = out
            .plot
            .as_ref()
            .ok_or_else(|| AppError::Argument("this command has no plot".into()))?;
        io::write(path, plot)?;
    }
    Ok(match cfg.format {
        OutputFormat::Csv => out.report.to_csv(),
        OutputFormat::Json => out.report.to_json(),
    })
}
