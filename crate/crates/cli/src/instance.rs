//! Instance files: one JSON object whose `kind` selects the engine.

use std::fmt;
use std::str::FromStr;

use fsplit_core::fppoly::parse_rational;
use fsplit_core::pairs::{ComplexityOneInstance, CurvePoint};
use fsplit_core::{BranchDatum, CoverFlags, Fan, RationalPoly, ToricAmbient, TwoStepBundle};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    ComplexityOne,
    CyclicCover,
    ToricPair,
    Fedder,
    ToricDiagonal,
    Tvb,
}

impl Kind {
    pub const ALL: [Kind; 6] =
        [Kind::ComplexityOne, Kind::CyclicCover, Kind::ToricPair, Kind::Fedder, Kind::ToricDiagonal, Kind::Tvb];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::ComplexityOne => "complexity-one",
            Kind::CyclicCover => "cyclic-cover",
            Kind::ToricPair => "toric-pair",
            Kind::Fedder => "fedder",
            Kind::ToricDiagonal => "toric-diagonal",
            Kind::Tvb => "tvb",
        }
    }

    /// Assertion flags an instance of this kind may carry.
    fn allowed_flags(self) -> &'static [&'static str] {
        match self {
            Kind::CyclicCover => &["complete", "smooth", "reduced-branch", "anticanonical-matching"],
            Kind::ToricPair => &["complete", "smooth", "reduced-branch"],
            Kind::Fedder => &["complete", "smooth", "normal"],
            _ => &[],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Kind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown instance kind `{s}`"))
    }
}

/// A parsed, validated instance.
#[derive(Debug, Clone)]
pub enum Instance {
    ComplexityOne(ComplexityOneInstance),
    CyclicCover { ambient: ToricAmbient, f: RationalPoly, n: u32, flags: CoverFlags },
    ToricPair { ambient: ToricAmbient, branches: Vec<BranchDatum> },
    Fedder { ambient: ToricAmbient, f: RationalPoly },
    ToricDiagonal(Fan),
    Tvb(TwoStepBundle),
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::ComplexityOne(_) => Kind::ComplexityOne,
            Instance::CyclicCover { .. } => Kind::CyclicCover,
            Instance::ToricPair { .. } => Kind::ToricPair,
            Instance::Fedder { .. } => Kind::Fedder,
            Instance::ToricDiagonal(_) => Kind::ToricDiagonal,
            Instance::Tvb(_) => Kind::Tvb,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Stabilizer {
    point: CurvePoint,
    order: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexityOneJson {
    base: String,
    #[serde(default)]
    lambda: Option<String>,
    #[serde(default)]
    free: Option<bool>,
    #[serde(default)]
    stabilizers: Vec<Stabilizer>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CyclicCoverJson {
    ambient: ToricAmbient,
    f: RationalPoly,
    n: u32,
    #[serde(default)]
    flags: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BranchJson {
    f: RationalPoly,
    #[serde(default)]
    n: Option<u32>,
    #[serde(default)]
    a: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ToricPairJson {
    ambient: ToricAmbient,
    #[serde(default)]
    branches: Vec<BranchJson>,
    #[serde(default)]
    flags: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FedderJson {
    ambient: ToricAmbient,
    f: RationalPoly,
    #[serde(default)]
    flags: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ToricDiagonalJson {
    #[serde(default)]
    fan: Option<Fan>,
    #[serde(default)]
    ambient: Option<ToricAmbient>,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// Deserialize one instance body, reporting the JSON path of the first bad field.
fn body<T: DeserializeOwned>(v: Value) -> Result<T, CliError> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let path = e.path().to_string();
        CliError::Parse { location: format!("at `{path}`"), message: e.into_inner().to_string() }
    })
}

fn check_flags(kind: Kind, flags: &[String]) -> Result<(), CliError> {
    let allowed = kind.allowed_flags();
    match flags.iter().find(|f| !allowed.contains(&f.as_str())) {
        Some(f) => Err(invalid(format!("flag `{f}` is not meaningful for {kind} (allowed: {})", allowed.join(", ")))),
        None => Ok(()),
    }
}

/// `complete` / `smooth` flags upgrade the caller's assertions on a general fan.
fn apply_ambient_flags(ambient: ToricAmbient, flags: &[String]) -> Result<ToricAmbient, CliError> {
    let has = |f: &str| flags.iter().any(|g| g == f);
    Ok(match ambient {
        ToricAmbient::GeneralSmoothComplete { fan, cox_degrees } => {
            let fan = Fan::new(
                fan.dim(),
                fan.rays().to_vec(),
                fan.is_complete() || has("complete"),
                fan.is_smooth() || has("smooth"),
            )
            .map_err(|e| invalid(e.to_string()))?;
            ToricAmbient::GeneralSmoothComplete { fan, cox_degrees }
        }
        other => other,
    })
}

/// Parse instance text. `expected` is the subcommand's kind; a `kind` field, when present, must
/// agree with it.
pub fn parse_instance(text: &str, expected: Option<Kind>) -> Result<Instance, CliError> {
    let mut value: Value = serde_json::from_str(text).map_err(|e| CliError::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let obj = value.as_object_mut().ok_or_else(|| invalid("instance must be a JSON object"))?;
    let declared = match obj.remove("kind") {
        None => None,
        Some(Value::String(s)) => Some(s.parse::<Kind>().map_err(invalid)?),
        Some(other) => return Err(invalid(format!("`kind` must be a string, got {other}"))),
    };
    let kind = match (declared, expected) {
        (Some(d), Some(e)) if d != e => {
            return Err(invalid(format!("instance kind `{d}` does not match subcommand `{e}`")));
        }
        (Some(k), _) | (None, Some(k)) => k,
        (None, None) => return Err(invalid("instance has no `kind`")),
    };
    let engine = |e: fsplit_core::Error| invalid(e.to_string());
    Ok(match kind {
        Kind::ComplexityOne => {
            let j: ComplexityOneJson = body(value)?;
            let stabs: Vec<(CurvePoint, u32)> = j.stabilizers.into_iter().map(|s| (s.point, s.order)).collect();
            let inst = match j.base.as_str() {
                "P1" => {
                    reject_elliptic_fields(&j.lambda, j.free)?;
                    ComplexityOneInstance::projective_line(stabs)
                }
                "affine" => {
                    reject_elliptic_fields(&j.lambda, j.free)?;
                    ComplexityOneInstance::affine(stabs)
                }
                "elliptic" => {
                    let lambda = j.lambda.ok_or_else(|| invalid("elliptic base needs `lambda`"))?;
                    let lambda = parse_rational(&lambda).map_err(engine)?;
                    let free = j.free.unwrap_or(stabs.is_empty());
                    ComplexityOneInstance::elliptic(lambda, free, stabs)
                }
                other => return Err(invalid(format!("unknown base `{other}` (expected P1, affine or elliptic)"))),
            };
            Instance::ComplexityOne(inst.map_err(engine)?)
        }
        Kind::CyclicCover => {
            let j: CyclicCoverJson = body(value)?;
            check_flags(kind, &j.flags)?;
            let flags = CoverFlags {
                reduced_branch: j.flags.iter().any(|f| f == "reduced-branch"),
                anticanonical_matching: j.flags.iter().any(|f| f == "anticanonical-matching"),
            };
            if !flags.reduced_branch {
                return Err(invalid("cyclic covers need the `reduced-branch` flag"));
            }
            let ambient = apply_ambient_flags(j.ambient, &j.flags)?;
            ambient.validate().map_err(engine)?;
            Instance::CyclicCover { ambient, f: j.f, n: j.n, flags }
        }
        Kind::ToricPair => {
            let j: ToricPairJson = body(value)?;
            check_flags(kind, &j.flags)?;
            let branches = j
                .branches
                .into_iter()
                .enumerate()
                .map(|(i, b)| match (b.n, b.a) {
                    (Some(n), None) => BranchDatum::from_order(b.f, n).map_err(engine),
                    (None, Some(a)) => {
                        BranchDatum::with_coefficient(b.f, parse_rational(&a).map_err(engine)?).map_err(engine)
                    }
                    _ => Err(invalid(format!("branch {i} needs exactly one of `n` and `a`"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let ambient = apply_ambient_flags(j.ambient, &j.flags)?;
            ambient.validate().map_err(engine)?;
            Instance::ToricPair { ambient, branches }
        }
        Kind::Fedder => {
            let j: FedderJson = body(value)?;
            check_flags(kind, &j.flags)?;
            let ambient = apply_ambient_flags(j.ambient, &j.flags)?;
            ambient.validate().map_err(engine)?;
            Instance::Fedder { ambient, f: j.f }
        }
        Kind::ToricDiagonal => {
            let j: ToricDiagonalJson = body(value)?;
            let fan = match (j.fan, j.ambient) {
                (Some(fan), None) => fan,
                (None, Some(a)) => {
                    a.validate().map_err(engine)?;
                    a.fan()
                }
                _ => return Err(invalid("toric-diagonal needs exactly one of `fan` and `ambient`")),
            };
            Instance::ToricDiagonal(fan)
        }
        Kind::Tvb => Instance::Tvb(body(value)?),
    })
}

fn reject_elliptic_fields(lambda: &Option<String>, free: Option<bool>) -> Result<(), CliError> {
    if lambda.is_some() || free.is_some() {
        return Err(invalid("`lambda` and `free` only apply to an elliptic base"));
    }
    Ok(())
}
