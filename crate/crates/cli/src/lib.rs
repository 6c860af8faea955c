//! Request handling for the `fsplit` command: parse an instance, evaluate it at each prime, and
//! assemble a deterministic report.

pub mod instance;
pub mod report;

use std::thread;

use fsplit_core::lattice::diag_split_toric;
use fsplit_core::pairs::{complexity_one_verdict, diag_necessary_complexity_one};
use fsplit_core::toricpairs::{
    cyclic_cover_verdict, fedder_cox, toric_pair_fregular, toric_pair_fsplit, RULE_FEDDER, RULE_TORIC,
};
use fsplit_core::tvb::{bundle_verdict, BundleRoute};
use fsplit_core::{Decision, Prime, Verdict};
use thiserror::Error;

pub use instance::{parse_instance, Instance, Kind};
pub use report::{render_table, sweep_summary, Query, QuerySummary, Record, Report};

/// Largest prime accepted without `--allow-large-primes`; `f^(p-1)` grows quickly.
pub const PRIME_CAP: u64 = 10_000;

pub const RULE_NO_DIAGONAL: &str = "diagonal/not-covered";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error {location}: {message}")]
    Parse { location: String, message: String },
    #[error("invalid request: {0}")]
    Validation(String),
    #[error("engine failed at p = {prime}")]
    Engine { prime: u32, source: fsplit_core::Error },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

/// A validated request.
#[derive(Debug, Clone)]
pub struct Request {
    pub instance: Instance,
    /// Ascending, without repeats.
    pub primes: Vec<Prime>,
    /// Ascending, without repeats.
    pub queries: Vec<Query>,
    pub format: OutputFormat,
    pub expect: Option<Decision>,
}

impl Request {
    pub fn new(
        instance: Instance,
        primes: Vec<Prime>,
        queries: Vec<Query>,
        format: OutputFormat,
        expect: Option<Decision>,
    ) -> Result<Self, CliError> {
        let mut primes = primes;
        primes.sort();
        primes.dedup();
        let mut queries = queries;
        queries.sort();
        queries.dedup();
        if primes.is_empty() {
            return Err(CliError::Validation("no primes requested".into()));
        }
        if queries.is_empty() {
            return Err(CliError::Validation("no queries requested".into()));
        }
        Ok(Request { instance, primes, queries, format, expect })
    }
}

/// Parse `P`, `A..B` (inclusive) or comma-separated mixtures of both. Bounds of a range need not
/// be prime; explicit values must be.
pub fn parse_primes(list: &str, allow_large: bool) -> Result<Vec<Prime>, CliError> {
    let mut out = Vec::new();
    for part in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let num = |s: &str| {
            s.trim().parse::<u64>().map_err(|_| CliError::Validation(format!("`{s}` is not a nonnegative integer")))
        };
        let (lo, hi, explicit) = match part.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?, false),
            None => {
                let v = num(part)?;
                (v, v, true)
            }
        };
        if lo > hi {
            return Err(CliError::Validation(format!("empty prime range `{part}`")));
        }
        if hi > PRIME_CAP && !allow_large {
            return Err(CliError::Validation(format!(
                "`{part}` exceeds the prime cap {PRIME_CAP}; pass --allow-large-primes to accept the cost"
            )));
        }
        if explicit {
            out.push(Prime::new(lo).map_err(|e| CliError::Validation(e.to_string()))?);
        } else {
            let found = fsplit_core::fppoly::primes_in(lo, hi);
            if found.is_empty() {
                return Err(CliError::Validation(format!("no primes in `{part}`")));
            }
            out.extend(found);
        }
    }
    if out.is_empty() {
        return Err(CliError::Validation("no primes requested".into()));
    }
    Ok(out)
}

pub fn parse_queries(list: &str) -> Result<Vec<Query>, CliError> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.parse::<Query>().map_err(CliError::Validation))
        .collect()
}

fn not_covered(kind: Kind) -> Verdict {
    Verdict::unknown(RULE_NO_DIAGONAL, format!("no diagonal-splitting criterion is implemented for {kind}"))
}

/// All three answers for one prime; callers keep the ones they asked for.
fn evaluate(instance: &Instance, p: Prime) -> fsplit_core::Result<(Verdict, Verdict, Verdict, Option<BundleRoute>)> {
    Ok(match instance {
        Instance::ComplexityOne(inst) => {
            let v = complexity_one_verdict(inst, p)?;
            (v.fsplit, v.fregular, diag_necessary_complexity_one(inst, p), None)
        }
        Instance::CyclicCover { ambient, f, n, flags } => {
            let v = cyclic_cover_verdict(ambient, f, *n, p, *flags)?;
            (v.fsplit, v.fregular, not_covered(Kind::CyclicCover), None)
        }
        Instance::ToricPair { ambient, branches } => {
            let fsplit = toric_pair_fsplit(ambient, branches, p)?;
            let fregular = toric_pair_fregular(ambient, branches, &fsplit)?;
            (fsplit, fregular, not_covered(Kind::ToricPair), None)
        }
        Instance::Fedder { ambient, f } => {
            let fsplit = fedder_cox(ambient, f, p)?;
            let fregular = if fsplit.is_no() {
                Verdict::no(RULE_FEDDER, "not F-split, hence not F-regular")
            } else {
                Verdict::unknown(RULE_FEDDER, "the hypersurface criterion decides F-splitting only")
            }
            .with_assumptions(fsplit.assumptions.clone());
            (fsplit, fregular, not_covered(Kind::Fedder), None)
        }
        Instance::ToricDiagonal(fan) => {
            let toric = || Verdict::yes(RULE_TORIC, "normal toric varieties are F-regular");
            (toric(), toric(), diag_split_toric(fan, p)?, None)
        }
        Instance::Tvb(bundle) => {
            let v = bundle_verdict(bundle, p)?;
            (v.fsplit, v.fregular, v.diagonal, Some(v.route))
        }
    })
}

fn route_name(r: BundleRoute) -> String {
    serde_json::to_value(r).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

fn records_for(req: &Request, p: Prime) -> Result<Vec<Record>, CliError> {
    let (fsplit, fregular, diagonal, route) =
        evaluate(&req.instance, p).map_err(|source| CliError::Engine { prime: p.get(), source })?;
    let route = route.map(route_name);
    Ok(req
        .queries
        .iter()
        .map(|&q| {
            let verdict = match q {
                Query::Fsplit => fsplit.clone(),
                Query::Fregular => fregular.clone(),
                Query::Diagonal => diagonal.clone(),
            };
            Record { prime: p.get(), query: q, route: route.clone(), verdict }
        })
        .collect())
}

/// Evaluate every prime (concurrently) and merge the results in ascending prime order. The first
/// failing prime, in that order, aborts the request.
pub fn run(req: &Request) -> Result<Report, CliError> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(req.primes.len());
    let chunk = req.primes.len().div_ceil(workers);
    let per_prime: Vec<Result<Vec<Record>, CliError>> = thread::scope(|s| {
        let handles: Vec<_> = req
            .primes
            .chunks(chunk)
            .map(|ps| s.spawn(move || ps.iter().map(|&p| records_for(req, p)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("prime worker panicked")).collect()
    });
    let mut records = Vec::new();
    for r in per_prime {
        records.extend(r?);
    }
    let summary = sweep_summary(&records, &req.queries);
    Ok(Report {
        kind: req.instance.kind().to_string(),
        primes: req.primes.iter().map(|p| p.get()).collect(),
        queries: req.queries.clone(),
        records,
        summary,
    })
}

/// Records whose verdict differs from the expectation.
pub fn mismatches<'a>(report: &'a Report, expect: Decision) -> Vec<&'a Record> {
    report.records.iter().filter(|r| r.verdict.value != expect).collect()
}

pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => render_table(report),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}
