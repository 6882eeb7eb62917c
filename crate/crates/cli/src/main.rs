use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use springer_core::springer::IdealKind;
use springer_core::verify::{CheckKind, KPolicy, VerifyOptions};
use springer_core::{Error, SpringerContext};

mod commands;

use commands::{CommandOutput, Method};

#[derive(Parser)]
#[command(name = "springer", version, about = "Cohomology presentations of two-row Springer varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdealArg {
    #[value(name = "I")]
    I,
    #[value(name = "J")]
    J,
    Tanisaki,
}

#[derive(Clone, Copy, ValueEnum)]
enum KArg {
    All,
    Max,
}

#[derive(clap::Args)]
struct ContextArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List the torus-fixed points, lexicographic by the position list ell
    FixedPoints {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the generators of an ideal in the canonical text format
    Generators {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, value_enum, ignore_case = true)]
        ideal: IdealArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Express a polynomial in the standard-tableau basis over Q[t]
    Straighten {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the verification suite on every context with n <= n-max
    Verify {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = KArg::All)]
        k: KArg,
        /// Largest degree for the kernel comparison [default: 2(k+1)]
        #[arg(long)]
        degree_max: Option<u32>,
        /// Comma-separated subset of checks [default: all]
        #[arg(long, value_delimiter = ',')]
        checks: Vec<CheckKind>,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Standard two-row tableaux and hook lengths
    Tableaux {
        #[arg(long, required_unless_present = "shape")]
        n: Option<usize>,
        /// Bottom-row length; lists every l <= n/2 when omitted
        #[arg(long, conflicts_with = "shape")]
        l: Option<usize>,
        /// Any partition, e.g. 4,3,2,1,1
        #[arg(long, value_delimiter = ',', conflicts_with = "n")]
        shape: Vec<usize>,
        /// Hook length query "i,j" (1-based) on --shape
        #[arg(long, requires = "shape")]
        hook: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

impl ContextArgs {
    fn context(&self) -> Result<SpringerContext, Error> {
        SpringerContext::new(self.n, self.k)
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(command: Command) -> Result<(CommandOutput, Format), Error> {
    Ok(match command {
        Command::FixedPoints { ctx, format } => (commands::fixed_points(&ctx.context()?), format),
        Command::Generators { ctx, ideal, format } => {
            let kind = match ideal {
                IdealArg::I => IdealKind::I,
                IdealArg::J => IdealKind::J,
                IdealArg::Tanisaki => IdealKind::Tanisaki,
            };
            (commands::generators(&ctx.context()?, kind), format)
        }
        Command::Straighten { ctx, poly, method, format } => {
            (commands::straighten(&ctx.context()?, &poly, method)?, format)
        }
        Command::Verify { n_max, k, degree_max, checks, seed, format } => {
            let opts = VerifyOptions {
                n_max: n_max as usize,
                k_policy: match k {
                    KArg::All => KPolicy::All,
                    KArg::Max => KPolicy::Max,
                },
                degree_max,
                checks: if checks.is_empty() { CheckKind::ALL.to_vec() } else { checks },
                seed,
            };
            (commands::verify(&opts), format)
        }
        Command::Tableaux { n, l, shape, hook, format } => {
            let out = if shape.is_empty() {
                commands::tableaux(n.expect("clap requires --n without --shape"), l)?
            } else {
                let hook = hook.map(|h| parse_pair(&h)).transpose()?;
                commands::hooks(shape, hook)?
            };
            (out, format)
        }
    })
}

fn parse_pair(text: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::InvalidInput(format!("expected 'i,j', got '{text}'"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let poly_text = match &cli.command {
        Command::Straighten { poly, .. } => Some(poly.clone()),
        _ => None,
    };
    match run(cli.command) {
        Ok((out, format)) => {
            match format {
                Format::Text => print!("{}", out.to_text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.report).expect("report serializes")),
            }
            if out.report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(Error::Parse { pos, msg }) => {
            let text = poly_text.unwrap_or_default();
            usage_error(format!("cannot parse polynomial at position {pos}: {msg}\n  {text}\n  {}^", " ".repeat(pos)))
        }
        Err(e @ (Error::InvalidInput(_) | Error::VarMismatch(..))) => usage_error(e),
        Err(e) => {
            eprintln!("fatal: {e}");
            ExitCode::FAILURE
        }
    }
}
