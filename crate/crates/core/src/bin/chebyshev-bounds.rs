use chebyshev_bounds::chebyshev_compute::Inequality;
use chebyshev_bounds::cli::{self, Point, RunConfig};
use chebyshev_bounds::Error;
use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

/// Explicit bounds for |psi(x) - x| from zeta zeros, checked by sieving.
#[derive(Parser)]
#[command(version)]
struct Args {
    /// height of the zero table
    #[arg(long, global = true, default_value_t = 5000.0)]
    height: f64,
    /// largest x the sieve accepts
    #[arg(long, global = true, default_value_t = 1_000_000_000)]
    limit: u64,
    /// height below which all zeros are known to lie on the critical line
    #[arg(long = "A", global = true)]
    a: Option<f64>,
    /// cutoff of the general-D table
    #[arg(long = "D", global = true)]
    d: Option<f64>,
    /// comma-separated values of log x, or "default"
    #[arg(long, global = true, default_value = "default")]
    grid: String,
    /// certified or reference
    #[arg(long, global = true, default_value = "certified")]
    mode: String,
    /// directory for report files
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Locate and count the zeros up to --height
    Zeros,
    /// Bound sum 1/|gamma|^k over all zeros
    Sums {
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,6,7")]
        k: Vec<u32>,
    },
    /// Optimized epsilon tables for both configurations
    Table,
    /// eta_k coefficients and linear theta bounds
    Eta {
        #[arg(long, default_value_t = 27.407_877_564_614_34)]
        b_min: f64,
        /// use the published epsilon rows instead of recomputed ones
        #[arg(long)]
        published: bool,
    },
    /// Check inequalities against sieved values
    Verify {
        #[arg(long, default_value_t = 2.0)]
        from: f64,
        /// upper end; defaults to --limit
        #[arg(long)]
        to: Option<f64>,
        /// inequality id, repeatable; defaults to the standard set
        #[arg(long)]
        check: Vec<String>,
        /// extra sample spacing on top of the prime powers
        #[arg(long)]
        step: Option<f64>,
    },
    /// Best epsilon at x (a number, or e^<log x>)
    Eps { x: String },
}

fn config(args: &Args) -> Result<RunConfig, Error> {
    let base = RunConfig::default();
    Ok(RunConfig {
        height: args.height,
        limit: args.limit,
        a: args.a.unwrap_or(base.a),
        d: args.d.unwrap_or(base.d),
        grid: cli::parse_grid(&args.grid)?,
        out: args.out.clone(),
        mode: cli::parse_mode(&args.mode)?,
    })
}

fn run(args: &Args) -> Result<u8, Error> {
    let cfg = config(args)?;
    cfg.validate()?;
    let text = match &args.cmd {
        Cmd::Zeros => cli::cmd_zeros(&cfg)?,
        Cmd::Sums { k } => cli::cmd_sums(&cfg, k)?,
        Cmd::Table => cli::cmd_table(&cfg)?,
        Cmd::Eta { b_min, published } => cli::cmd_eta(&cfg, *b_min, *published)?,
        Cmd::Verify { from, to, check, step } => {
            let specs = if check.is_empty() {
                cli::default_checks()
            } else {
                check.iter().map(|c| c.parse::<Inequality>()).collect::<Result<_, _>>()?
            };
            let to = to.unwrap_or(cfg.limit as f64);
            let (text, reports) = cli::cmd_verify(&cfg, (*from, to), &specs, *step)?;
            print!("{text}");
            return Ok(if reports.iter().all(|r| r.passed()) { 0 } else { 1 });
        }
        Cmd::Eps { x } => cli::cmd_eps(&cfg, x.parse::<Point>()?)?,
    };
    print!("{text}");
    Ok(0)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e))
        }
    }
}
