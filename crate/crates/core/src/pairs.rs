//! Rational divisors on curves, Legendre-type ordinarity, and the classification of F-split and
//! F-regular complexity-one T-varieties by the stabilizer orders over their quotient curve.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fppoly::{format_rational, parse_rational, FpElem, FpPoly, Monomial, Prime};
use crate::verdict::{Certificate, Decision, SplitVerdicts, Verdict};

/// A point of `P^1` over `Q`, stored in the affine chart `b = 1` or as infinity `(1:0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint {
    Finite(BigRational),
    Infinity,
}

impl CurvePoint {
    pub fn finite(q: BigRational) -> Self {
        CurvePoint::Finite(q)
    }

    pub fn int(n: i64) -> Self {
        CurvePoint::Finite(BigRational::from_integer(n.into()))
    }

    /// The point `(a : b)`.
    pub fn projective(a: BigRational, b: BigRational) -> Result<Self> {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => Err(Error::Invalid("(0:0) is not a point of P^1".into())),
            (_, true) => Ok(CurvePoint::Infinity),
            _ => Ok(CurvePoint::Finite(a / b)),
        }
    }

    /// Homogeneous coordinates `(a, b)` in canonical form.
    pub fn coords(&self) -> (BigRational, BigRational) {
        match self {
            CurvePoint::Finite(q) => (q.clone(), BigRational::one()),
            CurvePoint::Infinity => (BigRational::one(), BigRational::zero()),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(CurvePoint::Infinity),
            t => Ok(CurvePoint::Finite(parse_rational(t)?)),
        }
    }

    /// Image under `z -> (a z + b) / (c z + d)`.
    pub fn mobius(&self, a: &BigRational, b: &BigRational, c: &BigRational, d: &BigRational) -> Result<Self> {
        let (x, y) = self.coords();
        CurvePoint::projective(a * &x + b * &y, c * &x + d * &y)
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Finite(q) => f.write_str(&format_rational(q)),
            CurvePoint::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for CurvePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CurvePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CurvePoint::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Formal `Q`-linear combination of distinct points.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QDivisor {
    entries: Vec<(CurvePoint, BigRational)>,
}

impl QDivisor {
    pub fn new(entries: Vec<(CurvePoint, BigRational)>) -> Result<Self> {
        let mut out: Vec<(CurvePoint, BigRational)> = Vec::new();
        for (pt, c) in entries {
            if out.iter().any(|(q, _)| *q == pt) {
                return Err(Error::DegeneratePoints(pt.to_string(), pt.to_string()));
            }
            if !c.is_zero() {
                out.push((pt, c));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(QDivisor { entries: out })
    }

    /// `sum (mu - 1) / mu * c` over the marked points.
    pub fn from_stabilizers(stabilizers: &[(CurvePoint, u32)]) -> Result<Self> {
        Self::new(stabilizers.iter().map(|(c, mu)| (c.clone(), boundary_coefficient(*mu))).collect())
    }

    pub fn entries(&self) -> &[(CurvePoint, BigRational)] {
        &self.entries
    }

    pub fn degree(&self) -> BigRational {
        self.entries.iter().fold(BigRational::zero(), |acc, (_, c)| acc + c)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn check_boundary_range(&self) -> Result<()> {
        for (_, c) in &self.entries {
            if c.is_negative() || *c >= BigRational::one() {
                return Err(Error::CoefficientOutOfRange(format_rational(c)));
            }
        }
        Ok(())
    }
}

/// `(mu - 1) / mu`.
pub fn boundary_coefficient(mu: u32) -> BigRational {
    BigRational::new(BigInt::from(mu) - 1, BigInt::from(mu))
}

/// Genus of the pair: `(deg Delta + 2g) / 2`.
pub fn pair_genus(g: u32, delta: &QDivisor) -> Result<BigRational> {
    delta.check_boundary_range()?;
    Ok((delta.degree() + BigRational::from_integer((2 * g).into())) / BigRational::from_integer(2.into()))
}

fn bracket(x: &CurvePoint, y: &CurvePoint) -> BigRational {
    let (xa, xb) = x.coords();
    let (ya, yb) = y.coords();
    xa * yb - xb * ya
}

/// Cross-ratio `(c1, c2; c3, c4)`: the image of `c4` under the Möbius map sending `c1, c2, c3`
/// to `0, inf, 1`. Thus `(0, inf; 1, t) = t`.
pub fn cross_ratio(c1: &CurvePoint, c2: &CurvePoint, c3: &CurvePoint, c4: &CurvePoint) -> Result<BigRational> {
    let pts = [c1, c2, c3, c4];
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return Err(Error::DegeneratePoints(pts[i].to_string(), pts[j].to_string()));
            }
        }
    }
    Ok(bracket(c4, c1) * bracket(c3, c2) / (bracket(c4, c2) * bracket(c3, c1)))
}

/// Coefficient of `x^m` in `((x - lambda)(x - 1))^m`, `m = (p - 1) / 2`.
pub fn legendre_coefficient(lambda: FpElem) -> Result<FpElem> {
    let p = lambda.prime();
    let m = (p.as_u64() - 1) / 2;
    let x = Monomial::var(1, 0, 1);
    let one = Monomial::one(1);
    let lin = |root: FpElem| FpPoly::from_terms(1, p, [(x.clone(), 1), (one.clone(), -(root.residue() as i64))]);
    let base = lin(lambda)?.mul(&lin(FpElem::one(p))?)?;
    base.pow(m)?.coeff(&Monomial::var(1, 0, m as i32))
}

/// Reduces `lambda` modulo `p`, rejecting values that collide with `0, 1, inf`.
pub fn lambda_mod_p(lambda: &BigRational, p: Prime) -> Result<FpElem> {
    let degenerate = || Error::LambdaDegenerateModP { lambda: format_rational(lambda), p: p.get() };
    let r = p.reduce_rational(lambda).ok_or_else(degenerate)?;
    if r == 0 || r == 1 % p.get() {
        return Err(degenerate());
    }
    Ok(FpElem::new(r as i64, p))
}

/// Ordinarity of `(P^1, 1/2 (c1 + c2 + c3 + c4))` at an odd prime.
pub fn ordinary_pair(c1: &CurvePoint, c2: &CurvePoint, c3: &CurvePoint, c4: &CurvePoint, p: Prime) -> Result<bool> {
    Ok(!ordinarity_coefficient(c1, c2, c3, c4, p)?.is_zero())
}

fn ordinarity_coefficient(
    c1: &CurvePoint,
    c2: &CurvePoint,
    c3: &CurvePoint,
    c4: &CurvePoint,
    p: Prime,
) -> Result<FpElem> {
    if !p.is_odd() {
        return Err(Error::EvenPrime);
    }
    let lambda = cross_ratio(c1, c2, c3, c4)?;
    legendre_coefficient(lambda_mod_p(&lambda, p)?)
}

fn ceil_rational(q: &BigRational) -> BigInt {
    q.ceil().to_integer()
}

/// `deg ceil((p^e - 1) Delta)` and `(p^e - 1)(2 - 2g)`.
fn degree_sides(g: u32, delta: &QDivisor, p: Prime, e: u32) -> (BigInt, BigInt) {
    let q: BigInt = num_traits::pow(BigInt::from(p.get()), e as usize) - 1;
    let qr = BigRational::from_integer(q.clone());
    let lhs = delta.entries().iter().map(|(_, c)| ceil_rational(&(c * &qr))).fold(BigInt::zero(), |a, b| a + b);
    let rhs = q * (BigInt::from(2) - BigInt::from(2 * g as i64));
    (lhs, rhs)
}

/// Necessary condition for a splitting section: `deg ceil((p^e-1) Delta) <= (p^e-1)(2 - 2g)`.
pub fn fsplit_degree_bound(g: u32, delta: &QDivisor, p: Prime, e: u32) -> bool {
    assert!(e >= 1, "Frobenius iterate must be positive");
    let (lhs, rhs) = degree_sides(g, delta, p, e);
    lhs <= rhs
}

fn degree_certificate(g: u32, delta: &QDivisor, p: Prime) -> Certificate {
    let (lhs, rhs) = degree_sides(g, delta, p, 1);
    Certificate::DegreeObstruction { lhs: lhs.to_string(), rhs: rhs.to_string(), relation: ">".into() }
}

/// Quotient curve of a complexity-one T-variety.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveBase {
    AffineCurve,
    /// `y^2 = x (x - 1)(x - lambda)`.
    EllipticLegendre { lambda: String },
    ProjectiveLine,
}

/// Quotient curve plus the maximal stabilizer order over each special point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityOneInstance {
    base: Base,
    stabilizers: Vec<(CurvePoint, u32)>,
    free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Base {
    Affine,
    Elliptic(BigRational),
    Line,
}

impl ComplexityOneInstance {
    pub fn affine(stabilizers: Vec<(CurvePoint, u32)>) -> Result<Self> {
        Self::build(Base::Affine, stabilizers, None)
    }

    pub fn elliptic(lambda: BigRational, free: bool, stabilizers: Vec<(CurvePoint, u32)>) -> Result<Self> {
        if lambda.is_zero() || lambda.is_one() {
            return Err(Error::Invalid(format!("Legendre parameter {} must differ from 0 and 1", format_rational(&lambda))));
        }
        Self::build(Base::Elliptic(lambda), stabilizers, Some(free))
    }

    pub fn projective_line(stabilizers: Vec<(CurvePoint, u32)>) -> Result<Self> {
        Self::build(Base::Line, stabilizers, None)
    }

    /// `P^1` with the given orders at `0, inf, 1, 2, 3, ...`.
    pub fn projective_line_orders(orders: &[u32]) -> Result<Self> {
        let pts = std::iter::once(CurvePoint::int(0))
            .chain(std::iter::once(CurvePoint::Infinity))
            .chain((1..).map(CurvePoint::int));
        Self::projective_line(pts.zip(orders.iter().copied()).collect())
    }

    fn build(base: Base, stabilizers: Vec<(CurvePoint, u32)>, free: Option<bool>) -> Result<Self> {
        for (i, (c, mu)) in stabilizers.iter().enumerate() {
            if *mu < 2 {
                return Err(Error::Invalid(format!("stabilizer order at {c} must be at least 2")));
            }
            if stabilizers[..i].iter().any(|(d, _)| d == c) {
                return Err(Error::DegeneratePoints(c.to_string(), c.to_string()));
            }
        }
        let free = match free {
            Some(f) => {
                if f != stabilizers.is_empty() {
                    return Err(Error::Invalid(
                        "elliptic base: `free` must hold exactly when no stabilizers are listed".into(),
                    ));
                }
                f
            }
            None => stabilizers.is_empty(),
        };
        Ok(ComplexityOneInstance { base, stabilizers, free })
    }

    pub fn stabilizers(&self) -> &[(CurvePoint, u32)] {
        &self.stabilizers
    }

    /// Stabilizer orders sorted ascending.
    pub fn orders(&self) -> Vec<u32> {
        let mut o: Vec<u32> = self.stabilizers.iter().map(|(_, m)| *m).collect();
        o.sort_unstable();
        o
    }

    pub fn base(&self) -> CurveBase {
        match &self.base {
            Base::Affine => CurveBase::AffineCurve,
            Base::Elliptic(l) => CurveBase::EllipticLegendre { lambda: format_rational(l) },
            Base::Line => CurveBase::ProjectiveLine,
        }
    }

    pub fn is_projective_line(&self) -> bool {
        self.base == Base::Line
    }

    pub fn boundary(&self) -> Result<QDivisor> {
        QDivisor::from_stabilizers(&self.stabilizers)
    }

    fn genus(&self) -> u32 {
        match self.base {
            Base::Elliptic(_) => 1,
            _ => 0,
        }
    }
}

pub const RULE_AFFINE: &str = "complexity-one/affine-quotient";
pub const RULE_ELLIPTIC: &str = "complexity-one/elliptic-quotient";
pub const RULE_TABLE: &str = "complexity-one/stabilizer-table";
pub const RULE_FOUR_POINTS: &str = "complexity-one/four-points-ordinary";
pub const RULE_DIAG: &str = "complexity-one/diagonal-necessary";

/// Which row of the stabilizer table an order multiset falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableRow {
    /// At most two orders above one.
    AtMostTwo,
    TwoTwoAny,
    TwoThreeThree,
    TwoThreeFour,
    TwoThreeFive,
    TwoThreeSix,
    TwoFourFour,
    ThreeThreeThree,
    FourTwos,
    Excluded,
}

impl TableRow {
    pub fn classify(sorted_orders: &[u32]) -> Self {
        match sorted_orders {
            [] | [_] | [_, _] => TableRow::AtMostTwo,
            [2, 2, _] => TableRow::TwoTwoAny,
            [2, 3, 3] => TableRow::TwoThreeThree,
            [2, 3, 4] => TableRow::TwoThreeFour,
            [2, 3, 5] => TableRow::TwoThreeFive,
            [2, 3, 6] => TableRow::TwoThreeSix,
            [2, 4, 4] => TableRow::TwoFourFour,
            [3, 3, 3] => TableRow::ThreeThreeThree,
            [2, 2, 2, 2] => TableRow::FourTwos,
            _ => TableRow::Excluded,
        }
    }

    /// `(fsplit, fregular)` from the prime condition alone; `None` for the four-point row, which
    /// also needs the ordinarity test.
    pub fn decide(self, p: Prime) -> Option<(bool, bool)> {
        let p = p.get();
        Some(match self {
            TableRow::AtMostTwo => (true, true),
            TableRow::TwoTwoAny => (p >= 3, p >= 3),
            TableRow::TwoThreeThree | TableRow::TwoThreeFour => (p >= 5, p >= 5),
            TableRow::TwoThreeFive => (p >= 7, p >= 7),
            TableRow::TwoThreeSix | TableRow::ThreeThreeThree => (p % 3 == 1, false),
            TableRow::TwoFourFour => (p % 4 == 1, false),
            TableRow::FourTwos => return None,
            TableRow::Excluded => (false, false),
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            TableRow::AtMostTwo => "(1,*,*)",
            TableRow::TwoTwoAny => "(2,2,*)",
            TableRow::TwoThreeThree => "(2,3,3)",
            TableRow::TwoThreeFour => "(2,3,4)",
            TableRow::TwoThreeFive => "(2,3,5)",
            TableRow::TwoThreeSix => "(2,3,6)",
            TableRow::TwoFourFour => "(2,4,4)",
            TableRow::ThreeThreeThree => "(3,3,3)",
            TableRow::FourTwos => "(2,2,2,2)",
            TableRow::Excluded => "excluded",
        }
    }
}

/// F-split and F-regular verdicts for a complexity-one T-variety.
pub fn complexity_one_verdict(inst: &ComplexityOneInstance, p: Prime) -> Result<SplitVerdicts> {
    match &inst.base {
        Base::Affine => Ok(SplitVerdicts {
            fsplit: Verdict::yes(RULE_AFFINE, "affine quotient curve: the pair is toroidal"),
            fregular: Verdict::yes(RULE_AFFINE, "affine quotient curve: the pair is toroidal"),
        }),
        Base::Elliptic(lambda) => {
            if !inst.free {
                let cert = degree_certificate(1, &inst.boundary()?, p);
                return Ok(SplitVerdicts {
                    fsplit: Verdict::no(RULE_ELLIPTIC, "elliptic quotient with nontrivial boundary")
                        .with_certificate(cert.clone()),
                    fregular: Verdict::no(RULE_ELLIPTIC, "elliptic quotient with nontrivial boundary")
                        .with_certificate(cert),
                });
            }
            let fregular = Verdict::no(RULE_ELLIPTIC, "elliptic quotient is never F-regular");
            if !p.is_odd() {
                return Err(Error::EvenPrime);
            }
            let c = legendre_coefficient(lambda_mod_p(lambda, p)?)?;
            let cert = Certificate::Coefficient {
                value: c.residue(),
                context: format!("Hasse coefficient at lambda = {}", format_rational(lambda)),
            };
            let fsplit = if c.is_zero() {
                Verdict::no(RULE_ELLIPTIC, "supersingular elliptic quotient")
            } else {
                Verdict::yes(RULE_ELLIPTIC, "ordinary elliptic quotient, free action")
            };
            Ok(SplitVerdicts { fsplit: fsplit.with_certificate(cert).with_assumptions(["free-action"]), fregular })
        }
        Base::Line => projective_line_verdict(inst, p),
    }
}

fn projective_line_verdict(inst: &ComplexityOneInstance, p: Prime) -> Result<SplitVerdicts> {
    let orders = inst.orders();
    let row = TableRow::classify(&orders);
    let delta = inst.boundary()?;
    let reason = |ok: bool| format!("orders {:?} match row {} {}", orders, row.label(), if ok { "at this p" } else { "but p fails the row condition" });
    match row.decide(p) {
        Some((fs, fr)) => {
            let mut fsplit = if row == TableRow::Excluded {
                Verdict::no(RULE_TABLE, format!("orders {orders:?} match no table row"))
            } else {
                Verdict::new(Decision::from_bool(fs), RULE_TABLE, reason(fs))
            };
            if !fsplit_degree_bound(0, &delta, p, 1) {
                fsplit = fsplit.with_certificate(degree_certificate(0, &delta, p));
            }
            let fregular = if fr {
                Verdict::yes(RULE_TABLE, reason(true))
            } else if fs {
                Verdict::no(RULE_TABLE, format!("row {} is never F-regular", row.label()))
            } else {
                Verdict::no(RULE_TABLE, "not F-split")
            };
            Ok(SplitVerdicts { fsplit, fregular })
        }
        None => {
            let fregular = Verdict::no(RULE_FOUR_POINTS, "four points of order 2 are never F-regular");
            if !p.is_odd() {
                return Ok(SplitVerdicts {
                    fsplit: Verdict::no(RULE_FOUR_POINTS, "four points of order 2 need p >= 3")
                        .with_certificate(degree_certificate(0, &delta, p)),
                    fregular,
                });
            }
            let s = &inst.stabilizers;
            let lambda = cross_ratio(&s[0].0, &s[1].0, &s[2].0, &s[3].0)?;
            let c = legendre_coefficient(lambda_mod_p(&lambda, p)?)?;
            let cert = Certificate::Coefficient {
                value: c.residue(),
                context: format!("Hasse coefficient at cross-ratio {}", format_rational(&lambda)),
            };
            let fsplit = if c.is_zero() {
                Verdict::no(RULE_FOUR_POINTS, "pair is not ordinary")
            } else {
                Verdict::yes(RULE_FOUR_POINTS, "pair is ordinary")
            };
            Ok(SplitVerdicts { fsplit: fsplit.with_certificate(cert), fregular })
        }
    }
}

/// Necessary condition for diagonal splitting: only `P^1` quotients with at most two special
/// points, or exactly three points of order 2, survive. Passing yields `Unknown`.
pub fn diag_necessary_complexity_one(inst: &ComplexityOneInstance, _p: Prime) -> Verdict {
    match &inst.base {
        Base::Affine => Verdict::unknown(RULE_DIAG, "criterion applies to complete quotient curves only"),
        Base::Elliptic(_) => Verdict::no(RULE_DIAG, "quotient curve is not P^1"),
        Base::Line => {
            let orders = inst.orders();
            if orders.len() <= 2 || orders == [2, 2, 2] {
                Verdict::unknown(RULE_DIAG, format!("orders {orders:?} pass the necessary condition"))
            } else {
                Verdict::no(RULE_DIAG, format!("orders {orders:?} are neither (1,*,*) nor (2,2,2)"))
            }
        }
    }
}

/// Genus of the quotient pair of an instance.
pub fn instance_pair_genus(inst: &ComplexityOneInstance) -> Result<BigRational> {
    pair_genus(inst.genus(), &inst.boundary()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn r(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn pt(s: &str) -> CurvePoint {
        CurvePoint::parse(s).unwrap()
    }

    #[test]
    fn genus_examples() {
        let three = QDivisor::new(vec![(pt("0"), r("1/2")), (pt("1"), r("1/2")), (pt("inf"), r("1/2"))]).unwrap();
        assert_eq!(pair_genus(0, &three).unwrap(), r("3/4"));
        assert_eq!(pair_genus(1, &QDivisor::default()).unwrap(), r("1"));
        let four = QDivisor::from_stabilizers(&[(pt("0"), 2), (pt("1"), 2), (pt("2"), 2), (pt("inf"), 2)]).unwrap();
        assert_eq!(pair_genus(0, &four).unwrap(), r("1"));
        let bad = QDivisor::new(vec![(pt("0"), r("1"))]).unwrap();
        assert!(matches!(pair_genus(0, &bad), Err(Error::CoefficientOutOfRange(_))));
    }

    #[test]
    fn cross_ratio_examples() {
        assert_eq!(cross_ratio(&pt("0"), &pt("inf"), &pt("1"), &pt("2")).unwrap(), r("2"));
        // (inf, 1; 0, 2): Mobius map z -> (0 - 1)/(z - 1), image of 2 is -1
        assert_eq!(cross_ratio(&pt("inf"), &pt("1"), &pt("0"), &pt("2")).unwrap(), r("-1"));
        assert!(matches!(cross_ratio(&pt("0"), &pt("1"), &pt("1"), &pt("2")), Err(Error::DegeneratePoints(..))));
    }

    #[test]
    fn ordinary_examples() {
        let (a, b, c) = (pt("0"), pt("inf"), pt("1"));
        let d = pt("2");
        assert!(!ordinary_pair(&a, &b, &c, &d, pr(3)).unwrap());
        assert!(ordinary_pair(&a, &b, &c, &d, pr(5)).unwrap());
        assert_eq!(ordinary_pair(&a, &b, &c, &d, pr(2)), Err(Error::EvenPrime));
        // lambda = 2 collides with 0 modulo 2 is already excluded; lambda = 4 collides with 1 mod 3
        let e = pt("4");
        assert!(matches!(ordinary_pair(&a, &b, &c, &e, pr(3)), Err(Error::LambdaDegenerateModP { .. })));
        assert_eq!(legendre_coefficient(FpElem::new(2, pr(5))).unwrap().residue(), 3);
    }

    #[test]
    fn degree_bound_examples() {
        let four_halves = QDivisor::from_stabilizers(&[(pt("0"), 2), (pt("1"), 2), (pt("2"), 2), (pt("inf"), 2)]).unwrap();
        assert!(fsplit_degree_bound(0, &four_halves, pr(3), 1));
        let thirds = QDivisor::from_stabilizers(&[(pt("0"), 3), (pt("1"), 3), (pt("inf"), 3)]).unwrap();
        assert!(!fsplit_degree_bound(0, &thirds, pr(5), 1));
        for p in [2, 3, 5, 7] {
            assert!(fsplit_degree_bound(1, &QDivisor::default(), pr(p), 1));
        }
    }

    #[test]
    fn verdict_examples() {
        let v = complexity_one_verdict(&ComplexityOneInstance::projective_line_orders(&[2, 2, 2]).unwrap(), pr(3)).unwrap();
        assert!(v.fsplit.is_yes() && v.fregular.is_yes());
        let v = complexity_one_verdict(&ComplexityOneInstance::projective_line_orders(&[2, 3, 6]).unwrap(), pr(7)).unwrap();
        assert!(v.fsplit.is_yes() && v.fregular.is_no());
        let inst = ComplexityOneInstance::projective_line(vec![(pt("0"), 2), (pt("1"), 2), (pt("2"), 2), (pt("inf"), 2)]).unwrap();
        let v = complexity_one_verdict(&inst, pr(3)).unwrap();
        assert!(v.fsplit.is_no());
        assert!(complexity_one_verdict(&inst, pr(5)).unwrap().fsplit.is_yes());
        assert!(complexity_one_verdict(&inst, pr(2)).unwrap().fsplit.is_no());
    }

    #[test]
    fn base_cases() {
        let aff = ComplexityOneInstance::affine(vec![(pt("0"), 7)]).unwrap();
        let v = complexity_one_verdict(&aff, pr(2)).unwrap();
        assert!(v.fsplit.is_yes() && v.fregular.is_yes());

        let ell = ComplexityOneInstance::elliptic(r("2"), true, vec![]).unwrap();
        assert!(complexity_one_verdict(&ell, pr(5)).unwrap().fsplit.is_yes());
        assert!(complexity_one_verdict(&ell, pr(3)).unwrap().fsplit.is_no());
        assert!(complexity_one_verdict(&ell, pr(5)).unwrap().fregular.is_no());
        let ell_bad = ComplexityOneInstance::elliptic(r("2"), false, vec![(pt("0"), 2)]).unwrap();
        let v = complexity_one_verdict(&ell_bad, pr(5)).unwrap();
        assert!(v.fsplit.is_no() && v.fregular.is_no());
        assert!(ComplexityOneInstance::elliptic(r("2"), true, vec![(pt("0"), 2)]).is_err());
        assert!(ComplexityOneInstance::elliptic(r("1"), true, vec![]).is_err());
        assert!(ComplexityOneInstance::projective_line(vec![(pt("0"), 1)]).is_err());
        assert!(ComplexityOneInstance::projective_line(vec![(pt("0"), 2), (pt("0"), 3)]).is_err());
    }

    #[test]
    fn diagonal_examples() {
        for p in [2, 3, 5, 7] {
            let v = diag_necessary_complexity_one(&ComplexityOneInstance::projective_line_orders(&[2, 3, 3]).unwrap(), pr(p));
            assert!(v.is_no());
        }
        let v = diag_necessary_complexity_one(&ComplexityOneInstance::projective_line_orders(&[2, 2, 2]).unwrap(), pr(5));
        assert_eq!(v.value, Decision::Unknown);
        let ell = ComplexityOneInstance::elliptic(r("2"), true, vec![]).unwrap();
        assert!(diag_necessary_complexity_one(&ell, pr(5)).is_no());
        let two = ComplexityOneInstance::projective_line_orders(&[5, 7]).unwrap();
        assert_eq!(diag_necessary_complexity_one(&two, pr(5)).value, Decision::Unknown);
    }
}
