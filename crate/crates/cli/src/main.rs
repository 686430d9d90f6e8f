use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tcalg::{
    cmd_bounds, cmd_genfun, cmd_normal_form, cmd_oracle, cmd_poincare, cmd_verify, Bundle, CliError,
    Outcome, SweepSpec, DEFAULT_MAX_CELLS,
};
use tcalg_core::params::DEFAULT_MAX_WORD_LEN;
use tcalg_core::Params;

/// Exact cohomology computations and certified topological-complexity
/// bounds for the Fadell–Neuwirth bundle.
#[derive(Parser)]
#[command(name = "tcalg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Args)]
struct AlgebraArgs {
    /// Ambient dimension (d >= 2).
    #[arg(long)]
    d: u32,
    /// Number of obstacles.
    #[arg(long)]
    m: u32,
    /// Number of robots.
    #[arg(long)]
    n: u32,
    /// Sequence length.
    #[arg(long)]
    r: u32,
    /// Longest generator word handed to the rewriter.
    #[arg(long, default_value_t = DEFAULT_MAX_WORD_LEN)]
    max_word_len: usize,
}

impl AlgebraArgs {
    fn params(&self) -> Result<Params, CliError> {
        Ok(Params::new(self.d, self.m, self.n, self.r)?.with_max_word_len(self.max_word_len))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Certified lower bound and formula upper bound for TC_r.
    Bounds {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Sweep a parameter box and check every cell.
    Verify {
        #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3, 4, 5])]
        d_set: Vec<u32>,
        #[arg(long, default_value_t = 4)]
        m_max: u32,
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        #[arg(long, default_value_t = 4)]
        r_max: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_WORD_LEN)]
        max_word_len: usize,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Evaluate an expression to its canonical basis expansion.
    NormalForm {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Poincaré polynomial of the algebra.
    Poincare {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Cross-check against an enumeration of the basis.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// TC-generating function of a registered sequence.
    Genfun {
        #[arg(long, value_enum)]
        bundle: Bundle,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Number of series coefficients to print.
        #[arg(long, default_value_t = 8)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Brute-force cup length over differences of fibre classes.
    Oracle {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = 12)]
        budget: usize,
        /// Also search products of base classes with differences.
        #[arg(long)]
        extended_pool: bool,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
}

fn max_cells() -> Result<usize, CliError> {
    match std::env::var("TCALG_MAX_CELLS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("TCALG_MAX_CELLS must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_CELLS),
    }
}

fn run(cli: Cli) -> Result<(Outcome, Emit), CliError> {
    Ok(match cli.command {
        Command::Bounds { algebra, emit } => (cmd_bounds(&algebra.params()?)?, emit),
        Command::Verify { d_set, m_max, n_max, r_max, max_word_len, emit } => {
            let sweep = SweepSpec { d_set, m_max, n_max, r_max, max_word_len };
            (cmd_verify(&sweep, max_cells()?)?, emit)
        }
        Command::NormalForm { expr, algebra, emit } => (cmd_normal_form(&expr, &algebra.params()?)?, emit),
        Command::Poincare { algebra, check, emit } => (cmd_poincare(&algebra.params()?, check)?, emit),
        Command::Genfun { bundle, m, n, terms, emit } => (cmd_genfun(bundle, m, n, terms)?, emit),
        Command::Oracle { algebra, budget, extended_pool, emit } => {
            (cmd_oracle(&algebra.params()?, budget, extended_pool)?, emit)
        }
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((outcome, emit)) => {
            match emit {
                Emit::Text => print!("{}", outcome.text),
                Emit::Json => println!("{}", outcome.envelope.to_json()),
            }
            ExitCode::from(outcome.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit as u8)
        }
    }
}
