//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 a verified
//! violation of a stated bound (a finding).

mod commands;
mod config;
mod report;

pub use config::{parse_config_text, Format, Overrides, RunConfig, BITS_ENV, DEFAULT_ORDER, DEFAULT_SEED};
pub use report::{flatten, Report, Table};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bounds::WeightSpec;
use crate::classes::{ClassSpec, ExtremalName};
use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_FINDING: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "logcoeff",
    version,
    about = "Logarithmic coefficients of convex-type classes in MPFR precision"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Binary precision of every computation.
    #[arg(long, global = true)]
    pub bits: Option<u32>,
    /// Series truncation order.
    #[arg(long, global = true)]
    pub order: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// `key = value` file with bits, order, seed, format, out.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients of the best dominant psi.
    Psi {
        #[arg(long)]
        class: ClassSpec,
        /// Use the closed form instead of the recurrence.
        #[arg(long)]
        closed: bool,
    },
    /// Logarithmic coefficients of a class member.
    Gamma {
        #[arg(long)]
        class: ClassSpec,
        /// Named member: g1, g2, g3, g4 (Janowski) or h2 (Robertson).
        #[arg(long, default_value = "g1", conflicts_with = "sample")]
        extremal: ExtremalName,
        /// Build the member from the Schwarz function drawn with this seed.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// Sharp gamma_1..gamma_3 bounds of a class.
    Bounds {
        #[arg(long)]
        class: ClassSpec,
        /// Robertson: compare against the doubled gamma_2, gamma_3 values.
        #[arg(long)]
        printed: bool,
        /// Also report the weighted series right-hand side at --order.
        #[arg(long)]
        weight: Option<WeightSpec>,
    },
    /// Prokhorov-Szynal region and bound of (mu, nu).
    Region {
        #[arg(long, allow_hyphen_values = true, requires = "nu", conflicts_with = "class")]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "mu")]
        nu: Option<String>,
        /// Use the (mu, nu) of a Janowski class (or F(c), c <= 2).
        #[arg(long)]
        class: Option<ClassSpec>,
    },
    /// Re Psi at the tabulated boundary points of the F(c) dominant.
    Table1 {
        /// Add the printed values, sign agreement and radial cross-check.
        #[arg(long)]
        compare: bool,
    },
    /// Re Psi at e^{i(2 - eps) pi} for a list of eps.
    Scan {
        #[arg(long)]
        c: String,
        #[arg(long, value_delimiter = ',', required = true)]
        eps_list: Vec<String>,
    },
    /// Monte-Carlo check of the gamma bounds and weighted inequalities.
    Verify {
        #[arg(long)]
        class: ClassSpec,
        /// Weight family; repeat for several.
        #[arg(long = "weight", default_value = "n2")]
        weights: Vec<WeightSpec>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Largest |gamma_k| over the extremal Schwarz family.
    Sharpness {
        #[arg(long)]
        class: ClassSpec,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        gamma: u8,
        #[arg(long, default_value_t = 600)]
        budget: usize,
    },
    /// Hypergeometric ratio identity and the non-convexity predicate.
    HyperCheck {
        #[arg(long = "c", value_delimiter = ',', default_value = "0.25,0.75,1.5,2.5")]
        cs: Vec<f64>,
        /// Number of coefficients compared (defaults to 100).
        #[arg(long = "n", default_value_t = 100)]
        n: usize,
    },
    /// gamma_k of g1, g2, g3 in C(0, B) against the bounds |B|/4, 5B^2/48, |B|^3/16.
    RefuteCho {
        #[arg(long, allow_hyphen_values = true, default_value_t = -0.5)]
        b: f64,
    },
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidSpec(_) => EXIT_USAGE,
        _ => EXIT_COMPUTATION,
    }
}

/// Runs the tool on `argv` (program name first), writing reports to `stdout`
/// and diagnostics to `stderr`; `env_bits` stands for `LOGCOEFF_BITS`.
pub fn run_with(
    argv: impl IntoIterator<Item = impl Into<OsString> + Clone>,
    env_bits: Option<&str>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let flags = Overrides {
        bits: cli.global.bits,
        order: cli.global.order,
        seed: cli.global.seed,
        format: cli.global.format,
        out: cli.global.out.clone(),
    };
    let cfg = match RunConfig::resolve(cli.global.config.as_deref(), env_bits, &flags) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return match e {
                Error::Io(_) => EXIT_USAGE,
                other => exit_code_for(&other),
            };
        }
    };
    let report = match commands::execute(&cli.command, &cfg) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code_for(&e);
        }
    };
    if let Err(e) = report.emit(&cfg, stdout) {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_COMPUTATION;
    }
    if report.failed {
        let _ = writeln!(stderr, "error: self-check failed, see report");
        EXIT_COMPUTATION
    } else if report.findings.is_empty() {
        EXIT_OK
    } else {
        let _ = writeln!(stderr, "{} finding(s) reported", report.findings.len());
        EXIT_FINDING
    }
}

/// [`run_with`] on the process arguments, environment and standard streams.
pub fn run() -> i32 {
    let env_bits = std::env::var(BITS_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        std::env::args_os(),
        env_bits.as_deref(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
