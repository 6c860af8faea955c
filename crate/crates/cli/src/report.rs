//! Verdict reports and their digests.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use fsplit_core::{Decision, Verdict};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Query {
    Fsplit,
    Fregular,
    Diagonal,
}

impl Query {
    pub fn as_str(self) -> &'static str {
        match self {
            Query::Fsplit => "fsplit",
            Query::Fregular => "fregular",
            Query::Diagonal => "diagonal",
        }
    }
}

impl std::str::FromStr for Query {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "fsplit" => Ok(Query::Fsplit),
            "fregular" => Ok(Query::Fregular),
            "diagonal" => Ok(Query::Diagonal),
            other => Err(format!("unknown query `{other}` (expected fsplit, fregular or diagonal)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub prime: u32,
    pub query: Query,
    /// Which bundle route produced the verdict (bundles only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct QuerySummary {
    pub query: Query,
    pub total: usize,
    pub yes: usize,
    pub no: usize,
    pub unknown: usize,
    /// Smallest description of the Yes primes that fits every tested prime, if one was found.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unknown_reasons: Vec<String>,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub kind: String,
    pub primes: Vec<u32>,
    pub queries: Vec<Query>,
    pub records: Vec<Record>,
    pub summary: Vec<QuerySummary>,
}

/// Largest modulus tried when looking for a congruence pattern.
const MAX_MODULUS: u32 = 12;

/// Describe which tested primes answered Yes, using only the observed verdicts.
pub fn describe_yes_set(tested: &[u32], yes: &BTreeSet<u32>) -> Option<String> {
    if yes.is_empty() || yes.len() == tested.len() {
        return None;
    }
    let min_yes = *yes.iter().next().unwrap();
    if tested.iter().all(|p| yes.contains(p) == (*p >= min_yes)) {
        return Some(format!("p >= {min_yes}"));
    }
    for m in 2..=MAX_MODULUS {
        let residues: BTreeSet<u32> = yes.iter().map(|p| p % m).collect();
        if tested.iter().all(|p| yes.contains(p) == residues.contains(&(p % m))) {
            let r: Vec<String> = residues.iter().map(u32::to_string).collect();
            return Some(format!("p = {} (mod {m})", r.join(", ")));
        }
    }
    None
}

/// Per-query digest of a report: counts, a congruence or threshold pattern, and Unknown reasons.
pub fn sweep_summary(records: &[Record], queries: &[Query]) -> Vec<QuerySummary> {
    queries
        .iter()
        .map(|&query| {
            let rows: Vec<&Record> = records.iter().filter(|r| r.query == query).collect();
            let tested: Vec<u32> = rows.iter().map(|r| r.prime).collect();
            let count = |d: Decision| rows.iter().filter(|r| r.verdict.value == d).count();
            let (yes, no, unknown) = (count(Decision::Yes), count(Decision::No), count(Decision::Unknown));
            let yes_set: BTreeSet<u32> =
                rows.iter().filter(|r| r.verdict.value == Decision::Yes).map(|r| r.prime).collect();
            let pattern = if unknown == 0 { describe_yes_set(&tested, &yes_set) } else { None };
            let unknown_reasons: Vec<String> = rows
                .iter()
                .filter(|r| r.verdict.value == Decision::Unknown)
                .map(|r| r.verdict.reason.clone())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let total = rows.len();
            let mut text = if total == 0 {
                "no primes tested".to_string()
            } else if yes == total {
                "Yes for all tested primes".to_string()
            } else if no == total {
                "No for all tested primes".to_string()
            } else {
                let mut t = format!("Yes for {yes}/{total} primes");
                if let Some(p) = &pattern {
                    let _ = write!(t, ", exactly those with {p}");
                }
                t
            };
            if unknown > 0 && unknown < total {
                let _ = write!(text, "; {unknown} Unknown");
            } else if unknown == total && total > 0 {
                text = "Unknown for all tested primes".into();
            }
            if !unknown_reasons.is_empty() {
                let _ = write!(text, " ({})", unknown_reasons.join("; "));
            }
            QuerySummary { query, total, yes, no, unknown, pattern, unknown_reasons, text }
        })
        .collect()
}

fn cell(s: &str, width: usize) -> String {
    let mut out: String = s.chars().take(width).collect();
    let len = out.chars().count();
    out.extend(std::iter::repeat(' ').take(width - len));
    out
}

/// Fixed-width table: one row per record, then the digest.
pub fn render_table(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "instance: {}", report.kind);
    let header = [("prime", 7), ("query", 9), ("verdict", 8), ("rule", 36)];
    for (h, w) in header {
        out.push_str(&cell(h, w));
        out.push(' ');
    }
    out.push_str("evidence\n");
    let width: usize = header.iter().map(|(_, w)| w + 1).sum::<usize>() + 8;
    out.push_str(&"-".repeat(width));
    out.push('\n');
    for r in &report.records {
        let v = &r.verdict;
        let value = match v.value {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Unknown => "unknown",
        };
        let evidence = match &v.certificate {
            Some(c) => c.to_string(),
            None => v.reason.clone(),
        };
        let _ = write!(out, "{} {} {} {} {}", cell(&r.prime.to_string(), 7), cell(r.query.as_str(), 9), cell(value, 8), cell(&v.rule, 36), evidence);
        if let Some(route) = &r.route {
            let _ = write!(out, " [route {route}]");
        }
        out.push('\n');
    }
    out.push('\n');
    for s in &report.summary {
        let _ = writeln!(out, "{}: {}", s.query.as_str(), s.text);
    }
    out
}
