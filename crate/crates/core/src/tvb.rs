//! Toric vector bundles given by two-step Klyachko filtrations: multiplicities of the proper
//! subspaces, the quotient pair of the projectivization, duals, and the decision routes that
//! apply to rank two, hyperplane, and point configurations.
//!
//! Filtrations are decreasing in `lambda`. A two-step filtration on a ray is the whole space `E`
//! below `first`, a proper subspace `F` on `[first, subLast]`, and `0` above. A one-step filtration
//! drops from `E` to `0` after `last`.
//!
//! The multiplicity of `E_i` along a ray is the number of levels on which it survives after the
//! filtration first leaves `E`, i.e. `max{l : E_i in E(l)} - min{l : E(l) != E} + 1`. The `+ 1`
//! makes the cotangent bundle come out with multiplicity one (empty boundary) and a subspace held
//! on `p` consecutive levels with multiplicity `p`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fppoly::{format_rational, parse_rational, Prime, RationalPoly};
use crate::lattice::Fan;
use crate::linalg::{nullspace, q, rank, rref, QVec};
use crate::pairs::{
    boundary_coefficient, complexity_one_verdict, diag_necessary_complexity_one, ComplexityOneInstance, CurvePoint,
};
use crate::toricpairs::{never_fregular_check, toric_pair_fsplit, BranchDatum, ToricAmbient};
use crate::verdict::{Certificate, SplitVerdicts, Verdict};

pub const RULE_HYPERPLANE: &str = "bundle/hyperplane-quotient";
pub const RULE_POINTS: &str = "bundle/point-blowup";
pub const RULE_DESCRIPTOR: &str = "bundle/quotient-descriptor";
pub const ASSUME_COMPATIBLE: &str = "klyachko-compatible";
pub const ASSUME_GENERAL: &str = "general-position";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum QEntry {
    Int(i64),
    Text(String),
}

impl QEntry {
    fn value(&self) -> Result<BigRational> {
        match self {
            QEntry::Int(n) => Ok(q(*n)),
            QEntry::Text(s) => parse_rational(s),
        }
    }

    fn from_value(x: &BigRational) -> Self {
        match i64::try_from(x.to_integer()) {
            Ok(n) if x.is_integer() => QEntry::Int(n),
            _ => QEntry::Text(format_rational(x)),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubspaceJson {
    basis: Vec<Vec<QEntry>>,
}

/// Proper nonzero subspace of `Q^r`, stored as the reduced echelon form of a basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<QVec>,
}

impl Subspace {
    pub fn new(ambient: usize, basis: Vec<QVec>) -> Result<Self> {
        if basis.iter().any(|v| v.len() != ambient) {
            return Err(Error::Invalid(format!("basis vectors must have length {ambient}")));
        }
        let (rows, _) = rref(&basis);
        if rows.len() != basis.len() {
            return Err(Error::Invalid("subspace basis is linearly dependent".into()));
        }
        if rows.is_empty() || rows.len() >= ambient {
            return Err(Error::Invalid(format!(
                "subspace of dimension {} is not proper and nonzero in dimension {ambient}",
                rows.len()
            )));
        }
        Ok(Subspace { ambient, rows })
    }

    pub fn from_ints(basis: &[&[i64]]) -> Result<Self> {
        let ambient = basis.first().map_or(0, |v| v.len());
        Self::new(ambient, basis.iter().map(|v| v.iter().map(|&x| q(x)).collect()).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[QVec] {
        &self.rows
    }

    pub fn is_hyperplane(&self) -> bool {
        self.dim() + 1 == self.ambient
    }

    pub fn is_line(&self) -> bool {
        self.dim() == 1
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Subspace) -> bool {
        let mut all = other.rows.clone();
        all.extend(self.rows.iter().cloned());
        rank(&all) == other.dim()
    }

    /// Orthogonal complement under the standard pairing.
    pub fn perp(&self) -> Subspace {
        Subspace::new(self.ambient, nullspace(&self.rows, self.ambient)).expect("complement of a proper subspace")
    }

    /// Image under the invertible matrix `a` acting on column vectors.
    pub fn transformed(&self, a: &[QVec]) -> Result<Subspace> {
        let basis = self
            .rows
            .iter()
            .map(|v| a.iter().map(|row| crate::linalg::dot(row, v)).collect())
            .collect();
        Subspace::new(self.ambient, basis)
    }

    /// Primitive integer normal of a hyperplane.
    pub fn integer_normal(&self) -> Option<Vec<BigInt>> {
        self.is_hyperplane().then(|| primitive(&self.perp().rows[0]))
    }

    /// Primitive integer spanning vector of a line.
    pub fn integer_direction(&self) -> Option<Vec<BigInt>> {
        self.is_line().then(|| primitive(&self.rows[0]))
    }
}

/// Clear denominators and common factors; the first nonzero entry is made positive.
fn primitive(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) { -1 } else { 1 };
    ints.into_iter().map(|x| x / &g * sign).collect()
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let basis = self.rows.iter().map(|r| r.iter().map(QEntry::from_value).collect()).collect();
        SubspaceJson { basis }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SubspaceJson::deserialize(d)?;
        let basis: Vec<QVec> = raw
            .basis
            .iter()
            .map(|r| r.iter().map(QEntry::value).collect::<Result<QVec>>())
            .collect::<Result<_>>()
            .map_err(serde::de::Error::custom)?;
        let ambient = basis.first().map_or(0, Vec::len);
        Subspace::new(ambient, basis).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "kebab-case")]
pub enum FiltrationShape {
    /// `E` for `lambda <= last`, `0` after.
    OneStep { last: i64 },
    /// `E` below `first`, the subspace on `[first, subLast]`, `0` above.
    #[serde(rename_all = "camelCase")]
    TwoStep { first: i64, subspace: usize, sub_last: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayFiltration {
    pub ray: usize,
    #[serde(flatten)]
    pub shape: FiltrationShape,
}

impl RayFiltration {
    pub fn two_step(ray: usize, first: i64, subspace: usize, sub_last: i64) -> Self {
        RayFiltration { ray, shape: FiltrationShape::TwoStep { first, subspace, sub_last } }
    }

    pub fn one_step(ray: usize, last: i64) -> Self {
        RayFiltration { ray, shape: FiltrationShape::OneStep { last } }
    }

    /// Multiplicity of `e` along this ray, clamped at zero.
    fn multiplicity(&self, e: &Subspace, subspaces: &[Subspace]) -> i64 {
        match self.shape {
            FiltrationShape::OneStep { .. } => 0,
            FiltrationShape::TwoStep { first, subspace, sub_last } => {
                if e.is_contained_in(&subspaces[subspace]) {
                    sub_last - first + 1
                } else {
                    0
                }
            }
        }
    }

    fn dual(&self) -> Self {
        let shape = match self.shape {
            FiltrationShape::OneStep { last } => FiltrationShape::OneStep { last: -last - 1 },
            FiltrationShape::TwoStep { first, subspace, sub_last } => {
                FiltrationShape::TwoStep { first: -sub_last, subspace, sub_last: -first }
            }
        };
        RayFiltration { ray: self.ray, shape }
    }
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct BundleJson {
    #[serde(default)]
    kind: Option<String>,
    rank: usize,
    fan: Fan,
    subspaces: Vec<Subspace>,
    filtrations: Vec<RayFiltration>,
    #[serde(default)]
    general_position: bool,
}

/// Equivariant vector bundle whose filtrations have at most one proper step per ray.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BundleJson", rename_all = "camelCase")]
pub struct TwoStepBundle {
    kind: String,
    rank: usize,
    fan: Fan,
    subspaces: Vec<Subspace>,
    filtrations: Vec<RayFiltration>,
    general_position: bool,
}

impl TryFrom<BundleJson> for TwoStepBundle {
    type Error = Error;
    fn try_from(j: BundleJson) -> Result<Self> {
        if let Some(k) = j.kind.as_deref().filter(|k| *k != "tvb") {
            return Err(Error::Invalid(format!("expected kind `tvb`, got `{k}`")));
        }
        TwoStepBundle::new(j.rank, j.fan, j.subspaces, j.filtrations, j.general_position)
    }
}

impl TwoStepBundle {
    pub fn new(
        rank: usize,
        fan: Fan,
        subspaces: Vec<Subspace>,
        mut filtrations: Vec<RayFiltration>,
        general_position: bool,
    ) -> Result<Self> {
        if rank < 2 {
            return Err(Error::Invalid(format!("bundle rank {rank} must be at least 2")));
        }
        if let Some(s) = subspaces.iter().find(|s| s.ambient_dim() != rank) {
            return Err(Error::Invalid(format!("subspace of Q^{} in a rank {rank} bundle", s.ambient_dim())));
        }
        if subspaces.iter().collect::<BTreeSet<_>>().len() != subspaces.len() {
            return Err(Error::Invalid("subspaces must be distinct".into()));
        }
        filtrations.sort_by_key(|f| f.ray);
        let rays: Vec<usize> = filtrations.iter().map(|f| f.ray).collect();
        if rays != (0..fan.rays().len()).collect::<Vec<_>>() {
            return Err(Error::Invalid(format!(
                "need exactly one filtration per ray (0..{}), got rays {rays:?}",
                fan.rays().len()
            )));
        }
        let mut used = vec![false; subspaces.len()];
        for f in &filtrations {
            if let FiltrationShape::TwoStep { first, subspace, sub_last } = f.shape {
                if subspace >= subspaces.len() {
                    return Err(Error::Invalid(format!("ray {} refers to missing subspace {subspace}", f.ray)));
                }
                if first > sub_last {
                    return Err(Error::Invalid(format!("ray {}: first {first} exceeds subLast {sub_last}", f.ray)));
                }
                used[subspace] = true;
            }
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(Error::OrphanSubspace(i));
        }
        Ok(TwoStepBundle { kind: "tvb".into(), rank, fan, subspaces, filtrations, general_position })
    }

    /// Every ray filtered by `subspace(ray)` on the levels `[first, last]`, repeated subspaces merged.
    fn from_ray_subspaces(
        fan: &Fan,
        rank: usize,
        first: i64,
        last: i64,
        subspace: impl Fn(&[i64]) -> Result<Subspace>,
    ) -> Result<Self> {
        let mut subspaces: Vec<Subspace> = Vec::new();
        let mut filtrations = Vec::new();
        for (i, ray) in fan.rays().iter().enumerate() {
            let s = subspace(ray)?;
            let idx = match subspaces.iter().position(|t| *t == s) {
                Some(j) => j,
                None => {
                    subspaces.push(s);
                    subspaces.len() - 1
                }
            };
            filtrations.push(RayFiltration::two_step(i, first, idx, last));
        }
        TwoStepBundle::new(rank, fan.clone(), subspaces, filtrations, false)
    }

    /// Tangent bundle: `<rho>` at level 0.
    pub fn tangent(fan: &Fan) -> Result<Self> {
        let n = fan.dim();
        Self::from_ray_subspaces(fan, n, 0, 0, |r| Subspace::from_ints(&[r]))
    }

    /// Cotangent bundle: `rho^perp` at level 0.
    pub fn cotangent(fan: &Fan) -> Result<Self> {
        Self::cotangent_on_levels(fan, 0, 0)
    }

    /// Frobenius pullback of the cotangent bundle: `rho^perp` held on `p` consecutive levels.
    pub fn frobenius_pullback_cotangent(fan: &Fan, p: Prime) -> Result<Self> {
        Self::cotangent_on_levels(fan, 0, p.get() as i64 - 1)
    }

    fn cotangent_on_levels(fan: &Fan, first: i64, last: i64) -> Result<Self> {
        let n = fan.dim();
        Self::from_ray_subspaces(fan, n, first, last, |r| {
            let rq: QVec = r.iter().map(|&x| q(x)).collect();
            Subspace::new(n, nullspace(&[rq], n))
        })
    }

    pub fn with_general_position(mut self, asserted: bool) -> Self {
        self.general_position = asserted;
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn filtrations(&self) -> &[RayFiltration] {
        &self.filtrations
    }

    pub fn general_position(&self) -> bool {
        self.general_position
    }

    /// Apply an invertible change of basis of `E`; the filtration intervals are unchanged.
    pub fn transformed(&self, a: &[QVec]) -> Result<Self> {
        if a.len() != self.rank || rank(a) != self.rank {
            return Err(Error::Invalid("change of basis must be an invertible square matrix".into()));
        }
        let subspaces = self.subspaces.iter().map(|s| s.transformed(a)).collect::<Result<_>>()?;
        TwoStepBundle::new(self.rank, self.fan.clone(), subspaces, self.filtrations.clone(), self.general_position)
    }
}

/// Multiplicity of each listed subspace: the maximum over rays of its survival interval length.
pub fn mu_values(bundle: &TwoStepBundle) -> Result<Vec<u32>> {
    bundle
        .subspaces
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mu = bundle
                .filtrations
                .iter()
                .map(|f| f.multiplicity(e, &bundle.subspaces))
                .max()
                .unwrap_or(0);
            if mu < 1 {
                return Err(Error::OrphanSubspace(i));
            }
            u32::try_from(mu).map_err(|_| Error::Invalid(format!("multiplicity {mu} is too large")))
        })
        .collect()
}

/// Blowup centers of the projectivized bundle and the boundary coefficients of its quotient pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct QuotientDescriptor {
    pub base_dim: usize,
    /// `(dim E_i, mu_i)` in the order the subspaces are listed.
    pub centers: Vec<(usize, u32)>,
    pub delta: Vec<String>,
}

impl QuotientDescriptor {
    pub fn delta_is_zero(&self) -> bool {
        self.centers.iter().all(|&(_, mu)| mu == 1)
    }

    fn certificate(&self) -> Certificate {
        Certificate::Descriptor { centers: self.centers.clone(), delta: self.delta.clone() }
    }
}

pub fn quotient_descriptor(bundle: &TwoStepBundle) -> Result<QuotientDescriptor> {
    let mus = mu_values(bundle)?;
    Ok(QuotientDescriptor {
        base_dim: bundle.rank - 1,
        centers: bundle.subspaces.iter().zip(&mus).map(|(s, &mu)| (s.dim(), mu)).collect(),
        delta: mus.iter().map(|&mu| format_rational(&boundary_coefficient(mu))).collect(),
    })
}

/// `E*(lambda) = E(-lambda)^perp`: complements held on the reflected intervals.
pub fn dual_bundle(bundle: &TwoStepBundle) -> TwoStepBundle {
    TwoStepBundle {
        kind: "tvb".into(),
        rank: bundle.rank,
        fan: bundle.fan.clone(),
        subspaces: bundle.subspaces.iter().map(Subspace::perp).collect(),
        filtrations: bundle.filtrations.iter().map(RayFiltration::dual).collect(),
        general_position: bundle.general_position,
    }
}

/// Whether two integer vectors are proportional modulo `p`.
fn proportional_mod_p(a: &[BigInt], b: &[BigInt], p: Prime) -> bool {
    let pb = BigInt::from(p.get());
    (0..a.len()).all(|i| (i + 1..a.len()).all(|j| (&a[i] * &b[j] - &a[j] * &b[i]).mod_floor(&pb).is_zero()))
}

/// The boundary components must stay distinct after reduction.
fn check_distinct_mod_p(vectors: &[Vec<BigInt>], p: Prime) -> Result<()> {
    for (i, a) in vectors.iter().enumerate() {
        for b in &vectors[i + 1..] {
            if proportional_mod_p(a, b, p) {
                return Err(Error::DegeneratePoints(format!("{a:?}"), format!("{b:?} coincide mod {p}")));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTwoVerdicts {
    pub fsplit: Verdict,
    pub fregular: Verdict,
    pub diagonal: Verdict,
}

/// Rank two: `P(E) = P^1` with the lines of multiplicity above one as marked points.
pub fn ranktwo_verdict(bundle: &TwoStepBundle, p: Prime) -> Result<RankTwoVerdicts> {
    if bundle.rank != 2 {
        return Err(Error::Invalid(format!("rank two route applied to a rank {} bundle", bundle.rank)));
    }
    let mus = mu_values(bundle)?;
    let mut dirs = Vec::new();
    let mut stabilizers = Vec::new();
    for (s, &mu) in bundle.subspaces.iter().zip(&mus) {
        if mu > 1 {
            let d = s.integer_direction().expect("lines in rank two");
            let point = CurvePoint::projective(BigRational::from_integer(d[0].clone()), BigRational::from_integer(d[1].clone()))?;
            stabilizers.push((point, mu));
            dirs.push(d);
        }
    }
    check_distinct_mod_p(&dirs, p)?;
    let inst = ComplexityOneInstance::projective_line(stabilizers)?;
    let v = complexity_one_verdict(&inst, p)?;
    let diagonal = diag_necessary_complexity_one(&inst, p);
    Ok(RankTwoVerdicts {
        fsplit: v.fsplit.with_assumptions([ASSUME_COMPATIBLE]),
        fregular: v.fregular.with_assumptions([ASSUME_COMPATIBLE]),
        diagonal: diagonal.with_assumptions([ASSUME_COMPATIBLE]),
    })
}

/// All proper subspaces are hyperplanes: the quotient is `P^{r-1}` with a hyperplane arrangement.
pub fn hyperplane_case_verdict(bundle: &TwoStepBundle, p: Prime) -> Result<SplitVerdicts> {
    if let Some(i) = bundle.subspaces.iter().position(|s| !s.is_hyperplane()) {
        return Err(Error::NotHyperplaneCase(i));
    }
    let desc = quotient_descriptor(bundle)?;
    let r = bundle.rank;
    let ambient = ToricAmbient::projective_space(r - 1);
    if desc.delta_is_zero() {
        let v = |s: &str| {
            Verdict::yes(RULE_HYPERPLANE, s).with_certificate(desc.certificate()).with_assumptions([ASSUME_COMPATIBLE])
        };
        return Ok(SplitVerdicts {
            fsplit: v("quotient pair is projective space with empty boundary"),
            fregular: v("quotient pair is projective space with empty boundary"),
        });
    }
    let mus = mu_values(bundle)?;
    let mut normals = Vec::new();
    let mut branches = Vec::new();
    for (s, &mu) in bundle.subspaces.iter().zip(&mus) {
        if mu > 1 {
            let n = s.integer_normal().expect("hyperplane");
            let terms = n.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| {
                let mut e = vec![0; r];
                e[j] = 1;
                (e, BigRational::from_integer(c.clone()))
            });
            let vars = (0..r).map(|j| format!("y{j}")).collect();
            branches.push(BranchDatum::with_coefficient(RationalPoly::from_terms(vars, terms)?, boundary_coefficient(mu))?);
            normals.push(n);
        }
    }
    check_distinct_mod_p(&normals, p)?;
    let fsplit = toric_pair_fsplit(&ambient, &branches, p)?;
    let fregular = if fsplit.is_no() {
        Verdict::no(RULE_HYPERPLANE, "not F-split")
    } else if never_fregular_check(&ambient, &branches)? {
        Verdict::no(RULE_HYPERPLANE, "boundary is anticanonical")
    } else {
        Verdict::unknown(RULE_HYPERPLANE, "F-regularity with nonzero hyperplane boundary is not decided")
    };
    Ok(SplitVerdicts {
        fsplit: fsplit.with_assumptions([ASSUME_COMPATIBLE]),
        fregular: fregular.with_assumptions([ASSUME_COMPATIBLE]),
    })
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// Blowup of `P^m` in `l` general points, with empty boundary.
pub fn point_blowup_rules(m: usize, l: usize, general_position: bool, _p: Prime) -> Result<SplitVerdicts> {
    if !general_position {
        return Err(Error::GeneralPositionNotAsserted);
    }
    if m == 0 {
        return Err(Error::Invalid("base dimension must be positive".into()));
    }
    let yes = |reason: &str| {
        let v = Verdict::yes(RULE_POINTS, reason).with_assumptions([ASSUME_GENERAL]);
        SplitVerdicts { fsplit: v.clone(), fregular: v }
    };
    let h0 = binomial(2 * m as u64 + 1, m as u64);
    let l128 = l as u128;
    Ok(if m == 1 {
        // points on a curve are divisors; nothing is blown up
        yes("blowing up points of P^1 does not change it")
    } else if l <= m + 1 {
        yes("at most m+1 general points: toric after a change of coordinates")
    } else if l == m + 2 {
        yes("m+2 general points: F-regular blowup")
    } else if l128 >= h0 {
        let cert = Certificate::DegreeObstruction {
            lhs: format!("{l} points"),
            rhs: format!("h0(P^{m}, O({})) = {h0}", m + 1),
            relation: ">=".into(),
        };
        let v = Verdict::no(RULE_POINTS, "anti-pluricanonical forms cannot vanish at every center")
            .with_certificate(cert)
            .with_assumptions([ASSUME_GENERAL]);
        SplitVerdicts { fsplit: v.clone(), fregular: v }
    } else {
        let v = Verdict::unknown(RULE_POINTS, format!("{l} points lies strictly between m+2 and {h0}"))
            .with_assumptions([ASSUME_GENERAL]);
        SplitVerdicts { fsplit: v.clone(), fregular: v }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BundleRoute {
    RankTwo,
    Hyperplanes,
    Points,
    DescriptorOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleVerdicts {
    pub route: BundleRoute,
    pub descriptor: QuotientDescriptor,
    pub fsplit: Verdict,
    pub fregular: Verdict,
    pub diagonal: Verdict,
}

/// Pick the applicable route and decide.
pub fn bundle_verdict(bundle: &TwoStepBundle, p: Prime) -> Result<BundleVerdicts> {
    let descriptor = quotient_descriptor(bundle)?;
    let diag_unknown = || {
        Verdict::unknown(crate::pairs::RULE_DIAG, "diagonal splitting is only tested for rank two")
            .with_assumptions([ASSUME_COMPATIBLE])
    };
    if bundle.rank == 2 {
        let v = ranktwo_verdict(bundle, p)?;
        return Ok(BundleVerdicts {
            route: BundleRoute::RankTwo,
            descriptor,
            fsplit: v.fsplit,
            fregular: v.fregular,
            diagonal: v.diagonal,
        });
    }
    if bundle.subspaces.iter().all(Subspace::is_hyperplane) {
        let v = hyperplane_case_verdict(bundle, p)?;
        return Ok(BundleVerdicts {
            route: BundleRoute::Hyperplanes,
            descriptor,
            fsplit: v.fsplit,
            fregular: v.fregular,
            diagonal: diag_unknown(),
        });
    }
    if bundle.subspaces.iter().all(Subspace::is_line) && descriptor.delta_is_zero() {
        let v = point_blowup_rules(bundle.rank - 1, bundle.subspaces.len(), bundle.general_position, p)?;
        let tag = |v: Verdict| v.with_certificate(descriptor.certificate()).with_assumptions([ASSUME_COMPATIBLE]);
        return Ok(BundleVerdicts {
            route: BundleRoute::Points,
            fsplit: tag(v.fsplit),
            fregular: tag(v.fregular),
            descriptor,
            diagonal: diag_unknown(),
        });
    }
    let unknown = Verdict::unknown(RULE_DESCRIPTOR, "no decision rule covers this blowup configuration")
        .with_certificate(descriptor.certificate())
        .with_assumptions([ASSUME_COMPATIBLE]);
    Ok(BundleVerdicts {
        route: BundleRoute::DescriptorOnly,
        descriptor,
        fsplit: unknown.clone(),
        fregular: unknown,
        diagonal: diag_unknown(),
    })
}
