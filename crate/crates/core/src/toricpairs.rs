//! Splitting of pairs `(X, sum a_i V(f_i))` on smooth complete toric varieties in Cox
//! coordinates, and its specializations: cyclic covers, Fedder checks for hypersurfaces of a
//! toric ambient, and the degree obstructions that rule out F-regularity.
//!
//! A splitting section of the pair corresponds to a Cox polynomial `h` with `h * prod f_i^{m_i}`
//! having a nonzero coefficient at `(prod x_rho)^{p-1}`, where `m_i = ceil((p - 1) a_i)`. Such an
//! `h` exists exactly when `prod f_i^{m_i}` has a term with every exponent at most `p - 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fppoly::{fedder_hypersurface, format_rational, FpPoly, Monomial, Prime, RationalPoly};
use crate::lattice::Fan;
use crate::pairs::boundary_coefficient;
use crate::verdict::{Certificate, SplitVerdicts, Verdict};

pub const RULE_PAIR: &str = "toric-pair/cox-monomial";
pub const RULE_CYCLIC: &str = "cyclic-cover/congruence";
pub const RULE_NEVER_FREGULAR: &str = "toric-pair/anticanonical-equality";
pub const RULE_FEDDER: &str = "fedder/cox-ring";
pub const RULE_TORIC: &str = "toric/always-f-regular";

/// Smooth complete toric ambient with its Cox grading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "preset")]
pub enum ToricAmbient {
    /// `P^m` with Cox ring `k[x_0, ..., x_m]`, graded by total degree.
    #[serde(rename = "P")]
    ProjectiveSpace { m: usize },
    /// `P^{m_1} x ... x P^{m_k}`; variables are grouped by factor.
    #[serde(rename = "product")]
    ProductOfProjectiveSpaces { dims: Vec<usize> },
    /// Any fan together with the class-group degree of each Cox variable (one per ray).
    #[serde(rename = "general", rename_all = "camelCase")]
    GeneralSmoothComplete { fan: Fan, cox_degrees: Vec<Vec<i64>> },
}

impl ToricAmbient {
    pub fn projective_space(m: usize) -> Self {
        ToricAmbient::ProjectiveSpace { m }
    }

    pub fn product(dims: &[usize]) -> Self {
        ToricAmbient::ProductOfProjectiveSpaces { dims: dims.to_vec() }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ToricAmbient::ProjectiveSpace { m } if *m == 0 => Err(Error::Invalid("P^0 is not supported".into())),
            ToricAmbient::ProductOfProjectiveSpaces { dims } if dims.is_empty() || dims.contains(&0) => {
                Err(Error::Invalid("product factors must have positive dimension".into()))
            }
            ToricAmbient::GeneralSmoothComplete { fan, cox_degrees } => {
                if cox_degrees.len() != fan.rays().len() {
                    return Err(Error::Invalid(format!(
                        "{} Cox degrees given for {} rays",
                        cox_degrees.len(),
                        fan.rays().len()
                    )));
                }
                let width = cox_degrees.first().map_or(0, Vec::len);
                if width == 0 || cox_degrees.iter().any(|d| d.len() != width) {
                    return Err(Error::Invalid("Cox degrees must be nonempty vectors of equal length".into()));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn cox_arity(&self) -> usize {
        match self {
            ToricAmbient::ProjectiveSpace { m } => m + 1,
            ToricAmbient::ProductOfProjectiveSpaces { dims } => dims.iter().map(|d| d + 1).sum(),
            ToricAmbient::GeneralSmoothComplete { fan, .. } => fan.rays().len(),
        }
    }

    pub fn is_complete(&self) -> bool {
        match self {
            ToricAmbient::GeneralSmoothComplete { fan, .. } => fan.is_complete(),
            _ => true,
        }
    }

    pub fn is_smooth(&self) -> bool {
        match self {
            ToricAmbient::GeneralSmoothComplete { fan, .. } => fan.is_smooth(),
            _ => true,
        }
    }

    /// Fan of the ambient.
    pub fn fan(&self) -> Fan {
        match self {
            ToricAmbient::ProjectiveSpace { m } => Fan::projective_space(*m),
            ToricAmbient::ProductOfProjectiveSpaces { dims } => Fan::product_of_projective_spaces(dims),
            ToricAmbient::GeneralSmoothComplete { fan, .. } => fan.clone(),
        }
    }

    /// Class-group degree of each Cox variable.
    pub fn variable_degrees(&self) -> Vec<Vec<i64>> {
        match self {
            ToricAmbient::ProjectiveSpace { m } => vec![vec![1]; m + 1],
            ToricAmbient::ProductOfProjectiveSpaces { dims } => {
                let k = dims.len();
                dims.iter()
                    .enumerate()
                    .flat_map(|(j, &d)| {
                        let mut v = vec![0; k];
                        v[j] = 1;
                        std::iter::repeat_n(v, d + 1)
                    })
                    .collect()
            }
            ToricAmbient::GeneralSmoothComplete { cox_degrees, .. } => cox_degrees.clone(),
        }
    }

    pub fn monomial_degree(&self, m: &Monomial) -> Vec<i64> {
        let degs = self.variable_degrees();
        let mut out = vec![0; degs[0].len()];
        for (e, d) in m.exponents().iter().zip(&degs) {
            for (o, x) in out.iter_mut().zip(d) {
                *o += *e as i64 * x;
            }
        }
        out
    }

    /// Class of `-K`: the sum of all variable degrees.
    pub fn anticanonical_degree(&self) -> Vec<i64> {
        self.monomial_degree(&Monomial::new(vec![1; self.cox_arity()]))
    }

    /// Degree class of a homogeneous polynomial.
    pub fn poly_degree(&self, f: &RationalPoly) -> Result<Vec<i64>> {
        if f.arity() != self.cox_arity() {
            return Err(Error::ArityMismatch { left: self.cox_arity(), right: f.arity() });
        }
        let mut deg: Option<Vec<i64>> = None;
        for (m, _) in f.terms() {
            if !m.is_nonnegative() {
                return Err(Error::Invalid(format!("negative exponent in Cox polynomial term {m}")));
            }
            let d = self.monomial_degree(m);
            match &deg {
                None => deg = Some(d),
                Some(d0) if *d0 != d => {
                    return Err(Error::HomogeneityViolation(format!("terms of degree {d0:?} and {d:?} in {f}")))
                }
                _ => {}
            }
        }
        deg.ok_or_else(|| Error::Invalid("branch polynomial is zero".into()))
    }

    fn require_complete_smooth(&self) -> Result<()> {
        self.validate()?;
        if !self.is_complete() {
            return Err(Error::NotComplete);
        }
        if !self.is_smooth() {
            return Err(Error::OutOfModel("singular toric ambients are not supported".into()));
        }
        Ok(())
    }

    fn assumptions(&self) -> Vec<String> {
        match self {
            ToricAmbient::GeneralSmoothComplete { .. } => vec!["complete".into(), "smooth".into()],
            _ => Vec::new(),
        }
    }
}

/// A boundary component `a * V(f)` of the pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchDatum {
    pub f: RationalPoly,
    pub a: BigRational,
    /// Cover order `n` when `a = (n - 1) / n`.
    pub n: Option<u32>,
}

impl BranchDatum {
    pub fn from_order(f: RationalPoly, n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Invalid(format!("cover order {n} must be at least 2")));
        }
        Ok(BranchDatum { f, a: boundary_coefficient(n), n: Some(n) })
    }

    pub fn with_coefficient(f: RationalPoly, a: BigRational) -> Result<Self> {
        if a.is_negative() || a >= BigRational::one() {
            return Err(Error::CoefficientOutOfRange(format_rational(&a)));
        }
        Ok(BranchDatum { f, a, n: None })
    }

    /// `ceil((p - 1) a)`.
    pub fn frobenius_exponent(&self, p: Prime) -> u64 {
        let prod = &self.a * BigRational::from_integer(BigInt::from(p.get() - 1));
        u64::try_from(prod.ceil().to_integer()).expect("nonnegative exponent")
    }
}

/// `a_i = (n_i - 1) / n_i` for each branch.
pub fn boundary_delta(branches: Vec<(RationalPoly, u32)>) -> Result<Vec<BranchDatum>> {
    branches.into_iter().map(|(f, n)| BranchDatum::from_order(f, n)).collect()
}

fn reduce_nonzero(f: &RationalPoly, p: Prime) -> Result<FpPoly> {
    let g = f.reduce_mod_p(p)?;
    if g.is_zero() {
        return Err(Error::BadReduction { p: p.get(), term: format!("every coefficient of {f} vanishes") });
    }
    Ok(g)
}

/// The criterion polynomial `prod f_i^{m_i}` with terms above `p - 1` dropped.
fn criterion_polynomial(x: &ToricAmbient, branches: &[BranchDatum], p: Prime) -> Result<FpPoly> {
    let bound = p.get() as i32 - 1;
    let mut g = FpPoly::one(x.cox_arity(), p);
    for b in branches {
        x.poly_degree(&b.f)?;
        let f = reduce_nonzero(&b.f, p)?;
        let fm = f.pow_truncated(b.frobenius_exponent(p), bound)?;
        g = g.mul_truncated(&fm, bound)?;
    }
    Ok(g)
}

fn cox_var_names(x: &ToricAmbient, branches: &[BranchDatum]) -> Vec<String> {
    branches
        .first()
        .map(|b| b.f.vars().to_vec())
        .unwrap_or_else(|| (0..x.cox_arity()).map(|i| format!("x{i}")).collect())
}

/// F-splitting of `(X, sum a_i V(f_i))` by the Cox-monomial criterion.
pub fn toric_pair_fsplit(x: &ToricAmbient, branches: &[BranchDatum], p: Prime) -> Result<Verdict> {
    x.require_complete_smooth()?;
    let vars = cox_var_names(x, branches);
    if branches.is_empty() {
        return Ok(Verdict::yes(RULE_TORIC, "toric varieties are F-split")
            .with_certificate(Certificate::monomial(
                &Monomial::one(x.cox_arity()),
                crate::fppoly::FpElem::one(p),
                &vars,
            ))
            .with_assumptions(x.assumptions()));
    }
    let g = criterion_polynomial(x, branches, p)?;
    let v = match g.bounded_witness(p.get() as i32 - 1, None) {
        Some((m, c)) => Verdict::yes(RULE_PAIR, "admissible monomial in prod f_i^m_i")
            .with_certificate(Certificate::monomial(&m, c, &vars)),
        None => {
            let mut v = Verdict::no(RULE_PAIR, "no admissible monomial");
            if let Some(cert) = degree_excess(x, branches, p)? {
                v = v.with_certificate(cert);
            }
            v
        }
    };
    Ok(v.with_assumptions(x.assumptions()))
}

/// Degree class of `prod f_i^{m_i}` compared with `(p - 1)(-K)`, when some coordinate exceeds.
fn degree_excess(x: &ToricAmbient, branches: &[BranchDatum], p: Prime) -> Result<Option<Certificate>> {
    if matches!(x, ToricAmbient::GeneralSmoothComplete { .. }) {
        return Ok(None);
    }
    let mut total = vec![0i64; x.anticanonical_degree().len()];
    for b in branches {
        let d = x.poly_degree(&b.f)?;
        let m = b.frobenius_exponent(p) as i64;
        for (t, di) in total.iter_mut().zip(d) {
            *t += m * di;
        }
    }
    let cap: Vec<i64> = x.anticanonical_degree().iter().map(|d| d * (p.get() as i64 - 1)).collect();
    if total.iter().zip(&cap).any(|(t, c)| t > c) {
        return Ok(Some(Certificate::DegreeObstruction {
            lhs: format!("{total:?}"),
            rhs: format!("{cap:?}"),
            relation: "exceeds".into(),
        }));
    }
    Ok(None)
}

/// `sum a_i deg(f_i) = deg(-K)`: the twisted anticanonical sheaf is trivial, so no splitting
/// survives along an extra effective divisor and the pair is not F-regular.
pub fn never_fregular_check(x: &ToricAmbient, branches: &[BranchDatum]) -> Result<bool> {
    let k = x.anticanonical_degree();
    let mut sum = vec![BigRational::zero(); k.len()];
    for b in branches {
        let d = x.poly_degree(&b.f)?;
        for (s, di) in sum.iter_mut().zip(d) {
            *s += &b.a * BigRational::from_integer(di.into());
        }
    }
    Ok(sum.iter().zip(&k).all(|(s, ki)| *s == BigRational::from_integer((*ki).into())))
}

/// F-regularity verdict for a toric pair when it is decidable from the available rules.
pub fn toric_pair_fregular(x: &ToricAmbient, branches: &[BranchDatum], fsplit: &Verdict) -> Result<Verdict> {
    if branches.is_empty() {
        return Ok(Verdict::yes(RULE_TORIC, "normal toric varieties are F-regular").with_assumptions(x.assumptions()));
    }
    if fsplit.is_no() {
        return Ok(Verdict::no(RULE_PAIR, "not F-split"));
    }
    if never_fregular_check(x, branches)? {
        return Ok(Verdict::no(RULE_NEVER_FREGULAR, "sum a_i deg f_i equals deg(-K)"));
    }
    Ok(Verdict::unknown(RULE_PAIR, "F-regularity of general toric pairs is not decided"))
}

/// User assertions a cyclic cover relies on.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverFlags {
    /// The branch divisor `V(f)` is reduced.
    pub reduced_branch: bool,
    /// `O((n - 1) D)` is isomorphic to `omega^{-n}`.
    pub anticanonical_matching: bool,
}

/// Cyclic `n`-fold cover of `X` branched along `V(f)`.
pub fn cyclic_cover_verdict(x: &ToricAmbient, f: &RationalPoly, n: u32, p: Prime, flags: CoverFlags) -> Result<SplitVerdicts> {
    if n % p.get() == 0 {
        return Err(Error::WildRamification { n, p: p.get() });
    }
    if !flags.reduced_branch {
        return Err(Error::Invalid("cyclic covers need the `reduced-branch` assertion".into()));
    }
    let branch = BranchDatum::from_order(f.clone(), n)?;
    let branches = std::slice::from_ref(&branch);
    let mut assumptions = vec!["reduced-branch".to_string()];
    if flags.anticanonical_matching {
        assumptions.push("anticanonical-matching".into());
    }
    let mut fsplit = toric_pair_fsplit(x, branches, p)?;
    let congruent = p.get() % n == 1;
    if flags.anticanonical_matching && !congruent {
        let mut forced = Verdict::no(RULE_CYCLIC, format!("p = {p} is not 1 mod {n}"));
        if fsplit.is_yes() {
            forced = forced.with_note("the monomial criterion found a witness; check the anticanonical-matching assertion");
        }
        fsplit = forced;
    }
    let fregular = if flags.anticanonical_matching {
        Verdict::no(RULE_CYCLIC, "cyclic covers with anticanonical branch data are never F-regular")
    } else {
        toric_pair_fregular(x, branches, &fsplit)?
    };
    Ok(SplitVerdicts {
        fsplit: fsplit.with_assumptions(assumptions.clone()),
        fregular: fregular.with_assumptions(assumptions),
    })
}

/// Fedder's criterion for a hypersurface `V(f)` in Cox coordinates.
pub fn fedder_cox(x: &ToricAmbient, f: &RationalPoly, p: Prime) -> Result<Verdict> {
    x.validate()?;
    x.poly_degree(f)?;
    let g = reduce_nonzero(f, p)?;
    let assumptions = ["normal"];
    if !fedder_hypersurface(&g)? {
        return Ok(Verdict::no(RULE_FEDDER, "f^(p-1) lies in the Frobenius power of the irrelevant variables")
            .with_assumptions(assumptions));
    }
    let bound = p.get() as i32 - 1;
    let (m, c) = g
        .pow_truncated(p.as_u64() - 1, bound)?
        .bounded_witness(bound, None)
        .expect("fedder test found a witness");
    Ok(Verdict::yes(RULE_FEDDER, "f^(p-1) has a term with all exponents at most p-1")
        .with_certificate(Certificate::monomial(&m, c, f.vars()))
        .with_assumptions(assumptions))
}

/// `(p - 1)(n - #rays) < 0`: Frobenius pullbacks of cotangent bundles of complete toric
/// varieties are not F-split.
pub fn frobenius_pullback_obstruction(n: usize, ray_count: usize, p: Prime) -> bool {
    (p.get() as i64 - 1) * (n as i64 - ray_count as i64) < 0
}
