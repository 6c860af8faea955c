//! Tri-state decision records shared by all engines.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::fppoly::{FpElem, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Unknown => "unknown",
        })
    }
}

impl std::str::FromStr for Decision {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "yes" => Ok(Decision::Yes),
            "no" => Ok(Decision::No),
            "unknown" => Ok(Decision::Unknown),
            other => Err(format!("expected yes|no|unknown, got `{other}`")),
        }
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Certificate {
    /// A term of the criterion polynomial with nonzero coefficient.
    Monomial { exponents: Vec<i32>, coefficient: u32, display: String },
    /// A residue class of `M / pM` with no admissible representative.
    MissingClass { class: Vec<i64> },
    /// One admissible representative per residue class.
    Representatives { points: Vec<Vec<i64>> },
    /// A degree inequality that rules out any splitting section.
    DegreeObstruction { lhs: String, rhs: String, relation: String },
    /// A scalar coefficient that decided the verdict (e.g. a Hasse-type coefficient).
    Coefficient { value: u32, context: String },
    /// Quotient pair data handed back for inspection.
    Descriptor { centers: Vec<(usize, u32)>, delta: Vec<String> },
}

impl Certificate {
    pub fn monomial(m: &Monomial, c: FpElem, vars: &[String]) -> Self {
        Certificate::Monomial {
            exponents: m.exponents().to_vec(),
            coefficient: c.residue(),
            display: m.display_with(vars),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Monomial { coefficient, display, .. } => write!(f, "{coefficient}*{display}"),
            Certificate::MissingClass { class } => write!(f, "missing class {class:?}"),
            Certificate::Representatives { points } => write!(f, "{} representatives", points.len()),
            Certificate::DegreeObstruction { lhs, rhs, relation } => write!(f, "{lhs} {relation} {rhs}"),
            Certificate::Coefficient { value, context } => write!(f, "{context} = {value}"),
            Certificate::Descriptor { centers, delta } => {
                write!(f, "{} centers, delta [{}]", centers.len(), delta.join(", "))
            }
        }
    }
}

/// Decision with the rule that produced it and the user assertions it relies on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub value: Decision,
    pub reason: String,
    pub rule: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default)]
    pub assumptions: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn new(value: Decision, rule: impl Into<String>, reason: impl Into<String>) -> Self {
        Verdict {
            value,
            reason: reason.into(),
            rule: rule.into(),
            certificate: None,
            assumptions: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn yes(rule: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::new(Decision::Yes, rule, reason)
    }

    pub fn no(rule: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::new(Decision::No, rule, reason)
    }

    pub fn unknown(rule: impl Into<String>, reason: impl Into<String>) -> Self {
        Self::new(Decision::Unknown, rule, reason)
    }

    pub fn with_certificate(mut self, c: Certificate) -> Self {
        self.certificate = Some(c);
        self
    }

    pub fn with_assumptions<I, S>(mut self, a: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        for s in a {
            let s = s.into();
            if !self.assumptions.contains(&s) {
                self.assumptions.push(s);
            }
        }
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_yes(&self) -> bool {
        self.value == Decision::Yes
    }

    pub fn is_no(&self) -> bool {
        self.value == Decision::No
    }
}

/// The pair of answers most engines produce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitVerdicts {
    pub fsplit: Verdict,
    pub fregular: Verdict,
}
