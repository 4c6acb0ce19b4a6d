//! `plucker`: exact Plücker degrees and the identities around them.

mod commands;
mod limits;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::limits::Limits;
use crate::output::{Format, Outcome};

/// Exit status when every printed verdict is PASS.
const EXIT_PASS: u8 = 0;
/// At least one check failed; the output carries the diff.
const EXIT_FAIL: u8 = 1;
/// Unparseable arguments (clap uses the same code for its own usage errors).
const EXIT_USAGE: u8 = 2;
/// The request exceeds a safety limit and was not attempted.
const EXIT_REFUSED: u8 = 3;
/// An internal invariant broke.
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "plucker", version, about = "Exact Plücker degrees of Schubert varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, short, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,

    /// Show per-item detail in sweeps (repeat for more).
    #[arg(long, short, action = clap::ArgAction::Count, global = true)]
    verbose: u8,

    /// Largest weight for brute-force tableau enumeration.
    #[arg(long, global = true, env = "PLUCKER_SYT_CUTOFF", default_value_t = limits::DEFAULT_SYT_CUTOFF)]
    syt_cutoff: u32,

    /// Largest weight for formula-based methods.
    #[arg(long, global = true, env = "PLUCKER_MAX_WEIGHT", default_value_t = limits::DEFAULT_MAX_WEIGHT)]
    max_weight: u32,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Hook,
    Det,
    Deriv,
    Cap,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree f^λ of the Schubert variety indexed by λ (e.g. `3,2,1`; `-` for the empty partition).
    Degree {
        partition: String,
        #[arg(long, short, value_enum, default_value_t = Method::All)]
        method: Method,
        /// Also count standard Young tableaux by brute force.
        #[arg(long)]
        oracle: bool,
    },
    /// Every λ ⊢ d with its degree, hook lengths and Δ_λ(exp t).
    Table { d: u32 },
    /// Classical identities, checked exactly.
    Identity {
        #[command(subcommand)]
        which: Identity,
    },
    /// Exhaustive verification sweeps.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
    /// Schur-basis expansion of a polynomial in x1, x2, ... (e.g. `1/2 * x1^2 + x2`).
    Expand {
        #[arg(allow_hyphen_values = true)]
        polynomial: String,
    },
}

#[derive(Subcommand, Debug)]
enum Identity {
    /// n! = Σ_{λ ⊢ n} (f^λ)².
    Square { n: u32 },
    /// r^d = Σ s_λ(1..1) f^λ, and (z_1+...+z_r)^d = Σ f^λ s_λ(z) term by term.
    Powersum { r: usize, d: u32 },
    /// ∂^{|μ|} h_μ / ∂x_1^{|μ|} = multinomial(|μ|; μ), three ways.
    Integrals { mu: String },
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// σ_i ∩ Ω^λ = π(S_i(∂̃) S_λ) for every λ in the r x (n-r) box and 1 <= i <= |λ|.
    Theorem13 { r: u32, n: u32 },
    /// Giambelli's formula for every λ in the r x (n-r) box.
    Giambelli { r: u32, n: u32 },
    /// Schubert derivations on ⋀^r V_n through order `cut`, and the truncated boson-fermion match.
    Fock { r: usize, n: usize, cut: u32 },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match Limits::new(cli.syt_cutoff, cli.max_weight) {
        Ok(l) => l,
        Err(e) => return report_error(e),
    };
    let result = match cli.command {
        Command::Degree {
            partition,
            method,
            oracle,
        } => commands::degree(&partition, method, oracle, &limits),
        Command::Table { d } => commands::table(d, &limits),
        Command::Identity { which } => match which {
            Identity::Square { n } => commands::square(n, &limits),
            Identity::Powersum { r, d } => commands::powersum(r, d, &limits),
            Identity::Integrals { mu } => commands::integrals(&mu, &limits),
        },
        Command::Verify { which } => match which {
            Verify::Theorem13 { r, n } => commands::theorem13(r, n, &limits),
            Verify::Giambelli { r, n } => commands::giambelli(r, n, &limits),
            Verify::Fock { r, n, cut } => commands::fock(r, n, cut, &limits),
        },
        Command::Expand { polynomial } => commands::expand(&polynomial, &limits),
    };
    match result {
        Ok(outcome) => emit(&outcome, cli.format, cli.verbose),
        Err(e) => report_error(e),
    }
}

fn emit(outcome: &Outcome, format: Format, verbose: u8) -> ExitCode {
    match outcome.render(format, verbose) {
        Ok(text) => print!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INTERNAL);
        }
    }
    ExitCode::from(if outcome.pass { EXIT_PASS } else { EXIT_FAIL })
}

fn report_error(e: commands::CliError) -> ExitCode {
    use commands::CliError::*;
    match e {
        Usage(msg) => {
            eprintln!("error: {msg}");
            eprintln!("run `plucker --help` for usage");
            ExitCode::from(EXIT_USAGE)
        }
        Refused(msg) => {
            eprintln!("refused: {msg}");
            ExitCode::from(EXIT_REFUSED)
        }
        Internal(msg) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
