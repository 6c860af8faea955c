use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use fsplit_cli::{mismatches, parse_instance, parse_primes, parse_queries, render, run, Kind, OutputFormat, Request};
use fsplit_core::Decision;

#[derive(Parser)]
#[command(name = "fsplit", version, about = "Decide Frobenius splitting, F-regularity and diagonal splitting in characteristic p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Complexity-one T-variety given by its quotient curve and stabilizer orders
    ComplexityOne(Common),
    /// Cyclic cover of a toric variety branched along a hypersurface
    CyclicCover(Common),
    /// Toric pair (X, sum a_i V(f_i)) via the Cox-ring monomial criterion
    ToricPair(Common),
    /// Hypersurface in Cox coordinates via Fedder's criterion
    Fedder(Common),
    /// Diagonal splitting of a complete toric variety
    ToricDiagonal(Common),
    /// Two-step toric vector bundle via its quotient pair
    Tvb(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Expect {
    Yes,
    No,
    Unknown,
}

#[derive(Args)]
struct Common {
    /// Instance JSON file
    #[arg(long)]
    instance: PathBuf,
    /// Prime(s): `7`, `2,3,5`
    #[arg(long, conflicts_with = "primes")]
    prime: Option<String>,
    /// Inclusive range `A..B`; only the primes in it are used
    #[arg(long)]
    primes: Option<String>,
    /// Comma-separated subset of fsplit, fregular, diagonal
    #[arg(long, default_value = "fsplit,fregular")]
    query: String,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Exit with status 2 unless every reported verdict equals this value
    #[arg(long, value_enum)]
    expect: Option<Expect>,
    /// Accept primes above 10^4 (f^(p-1) can get very large)
    #[arg(long)]
    allow_large_primes: bool,
}

fn execute(kind: Kind, c: Common) -> anyhow::Result<ExitCode> {
    let text = std::fs::read_to_string(&c.instance).with_context(|| format!("reading {}", c.instance.display()))?;
    let instance = parse_instance(&text, Some(kind)).with_context(|| format!("in {}", c.instance.display()))?;
    let list = c.prime.or(c.primes).context("one of --prime or --primes is required")?;
    let primes = parse_primes(&list, c.allow_large_primes)?;
    let format = match c.format {
        Format::Table => OutputFormat::Table,
        Format::Json => OutputFormat::Json,
    };
    let expect = c.expect.map(|e| match e {
        Expect::Yes => Decision::Yes,
        Expect::No => Decision::No,
        Expect::Unknown => Decision::Unknown,
    });
    let request = Request::new(instance, primes, parse_queries(&c.query)?, format, expect)?;
    let report = run(&request)?;
    print!("{}", render(&report, request.format));
    if let Some(e) = request.expect {
        let bad = mismatches(&report, e);
        if !bad.is_empty() {
            for r in bad {
                eprintln!("expected {e:?} but p = {} {} is {:?}", r.prime, r.query.as_str(), r.verdict.value);
            }
            return Ok(ExitCode::from(2));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    // usage errors are errors (1); status 2 is reserved for --expect mismatches
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let (kind, common) = match cli.command {
        Command::ComplexityOne(c) => (Kind::ComplexityOne, c),
        Command::CyclicCover(c) => (Kind::CyclicCover, c),
        Command::ToricPair(c) => (Kind::ToricPair, c),
        Command::Fedder(c) => (Kind::Fedder, c),
        Command::ToricDiagonal(c) => (Kind::ToricDiagonal, c),
        Command::Tvb(c) => (Kind::Tvb, c),
    };
    match execute(kind, common) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
