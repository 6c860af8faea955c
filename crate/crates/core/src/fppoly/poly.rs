use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::field::{add_mod, format_rational, mul_mod, parse_rational, FpElem, Prime};
use crate::error::{Error, Result};

/// Upper bound on the number of terms any intermediate product may hold.
pub const DEFAULT_TERM_CAP: usize = 10_000_000;

/// Exponent vector of a (Laurent) monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn new(exponents: Vec<i32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    /// `x_var^exp` in `arity` variables.
    pub fn var(arity: usize, var: usize, exp: i32) -> Self {
        let mut e = vec![0; arity];
        e[var] = exp;
        Monomial(e)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Every exponent lies in `[0, bound]`, further capped per variable by `caps`.
    pub fn within(&self, bound: i32, caps: Option<&[Option<i32>]>) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| {
            let cap = caps.and_then(|c| c.get(i).copied().flatten()).map_or(bound, |c| c.min(bound));
            (0..=cap).contains(&e)
        })
    }

    fn exceeds(&self, bound: i32) -> bool {
        self.0.iter().any(|&e| e > bound)
    }

    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut e = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            e[perm[i]] = x;
        }
        Monomial(e)
    }

    pub fn display_with(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                let name = vars.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

/// Sparse polynomial over `F_p`. Terms are kept in lexicographic exponent order with no zero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpPoly {
    arity: usize,
    prime: Prime,
    terms: BTreeMap<Monomial, u32>,
}

impl FpPoly {
    pub fn zero(arity: usize, prime: Prime) -> Self {
        FpPoly { arity, prime, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize, prime: Prime) -> Self {
        Self::constant(1, arity, prime)
    }

    pub fn constant(c: i64, arity: usize, prime: Prime) -> Self {
        Self::from_terms(arity, prime, [(Monomial::one(arity), c)]).expect("arity is consistent")
    }

    pub fn var(var: usize, arity: usize, prime: Prime) -> Self {
        Self::from_terms(arity, prime, [(Monomial::var(arity, var, 1), 1)]).expect("arity is consistent")
    }

    /// Builds a polynomial from integer coefficients; repeated monomials are summed.
    pub fn from_terms<I>(arity: usize, prime: Prime, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let mut out = FpPoly::zero(arity, prime);
        for (m, c) in terms {
            if m.arity() != arity {
                return Err(Error::ArityMismatch { left: arity, right: m.arity() });
            }
            out.add_term(m, prime.reduce_i64(c));
        }
        Ok(out)
    }

    fn add_term(&mut self, m: Monomial, c: u32) {
        let p = self.prime.get();
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if c != 0 {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = add_mod(*o.get(), c, p);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FpElem)> + '_ {
        self.terms.iter().map(move |(m, &c)| (m, FpElem::from_residue(c, self.prime)))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.keys().all(Monomial::is_nonnegative)
    }

    /// Total degrees of the terms, or `None` for the zero polynomial.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    fn check_compatible(&self, other: &FpPoly) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: other.arity });
        }
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch { left: self.prime.get(), right: other.prime.get() });
        }
        Ok(())
    }

    pub fn add(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: FpElem) -> FpPoly {
        assert_eq!(c.prime(), self.prime, "mixed characteristics");
        if c.is_zero() {
            return FpPoly::zero(self.arity, self.prime);
        }
        let p = self.prime.get();
        let terms = self.terms.iter().map(|(m, &v)| (m.clone(), mul_mod(v, c.residue(), p))).collect();
        FpPoly { arity: self.arity, prime: self.prime, terms }
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> FpPoly {
        assert_eq!(perm.len(), self.arity);
        let terms = self.terms.iter().map(|(m, &c)| (m.permuted(perm), c)).collect();
        FpPoly { arity: self.arity, prime: self.prime, terms }
    }

    /// Distributive product.
    pub fn mul(&self, other: &FpPoly) -> Result<FpPoly> {
        self.mul_inner(other, None, DEFAULT_TERM_CAP)
    }

    /// Product with every term having an exponent above `bound` discarded.
    ///
    /// For polynomials with nonnegative exponents this is the exact image of `mul` under
    /// truncation, because exponents never decrease under multiplication.
    pub fn mul_truncated(&self, other: &FpPoly, bound: i32) -> Result<FpPoly> {
        if !self.is_nonnegative() || !other.is_nonnegative() {
            return Err(Error::Invalid("truncated product needs nonnegative exponents".into()));
        }
        self.mul_inner(other, Some(bound), DEFAULT_TERM_CAP)
    }

    fn mul_inner(&self, other: &FpPoly, bound: Option<i32>, cap: usize) -> Result<FpPoly> {
        self.check_compatible(other)?;
        let p = self.prime.get();
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let m = ma.mul(mb);
                if bound.is_some_and(|b| m.exceeds(b)) {
                    continue;
                }
                let c = mul_mod(ca, cb, p);
                let slot = acc.entry(m).or_insert(0);
                *slot = add_mod(*slot, c, p);
            }
            if acc.len() > cap {
                return Err(Error::ResourceExceeded { terms: acc.len(), cap });
            }
        }
        let terms = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        Ok(FpPoly { arity: self.arity, prime: self.prime, terms })
    }

    /// `self^e` by binary exponentiation; `f^0 = 1`.
    pub fn pow(&self, e: u64) -> Result<FpPoly> {
        self.pow_inner(e, None, DEFAULT_TERM_CAP)
    }

    pub fn pow_with_cap(&self, e: u64, cap: usize) -> Result<FpPoly> {
        self.pow_inner(e, None, cap)
    }

    /// `self^e` with all terms of some exponent above `bound` discarded (nonnegative input only).
    pub fn pow_truncated(&self, e: u64, bound: i32) -> Result<FpPoly> {
        if !self.is_nonnegative() {
            return Err(Error::Invalid("truncated power needs nonnegative exponents".into()));
        }
        self.pow_inner(e, Some(bound), DEFAULT_TERM_CAP)
    }

    fn pow_inner(&self, mut e: u64, bound: Option<i32>, cap: usize) -> Result<FpPoly> {
        let mut acc = FpPoly::one(self.arity, self.prime);
        let mut base = self.clone();
        if let Some(b) = bound {
            base.terms.retain(|m, _| !m.exceeds(b));
        }
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_inner(&base, bound, cap)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_inner(&base, bound, cap)?;
            }
        }
        Ok(acc)
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff(&self, m: &Monomial) -> Result<FpElem> {
        if m.arity() != self.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: m.arity() });
        }
        let c = self.terms.get(m).copied().unwrap_or(0);
        Ok(FpElem::from_residue(c, self.prime))
    }

    /// First term, in the lexicographic monomial order with `x0 > x1 > ...`, whose exponents all
    /// lie in `[0, bound]` (and below `caps[v]` where given).
    pub fn bounded_witness(&self, bound: i32, caps: Option<&[Option<i32>]>) -> Option<(Monomial, FpElem)> {
        self.terms
            .iter()
            .rev()
            .find(|(m, _)| m.within(bound, caps))
            .map(|(m, &c)| (m.clone(), FpElem::from_residue(c, self.prime)))
    }

    pub fn display_with(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, &c)| {
                let mon = m.display_with(vars);
                match (c, mon.as_str()) {
                    (_, "1") => c.to_string(),
                    (1, _) => mon,
                    _ => format!("{c}*{mon}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

/// Fedder-type test for a hypersurface: `f^(p-1)` has a term with all exponents at most `p - 1`,
/// i.e. `f^(p-1)` is not in the ideal generated by the `p`-th powers of the variables.
pub fn fedder_hypersurface(f: &FpPoly) -> Result<bool> {
    if !f.is_nonnegative() {
        return Err(Error::Invalid("Fedder test needs a polynomial (no negative exponents)".into()));
    }
    let bound = f.prime().get() as i32 - 1;
    let g = f.pow_truncated(f.prime().as_u64() - 1, bound)?;
    Ok(g.bounded_witness(bound, None).is_some())
}

/// Polynomial with exact rational coefficients, reduced per prime on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl RationalPoly {
    /// Variables are named `x0, x1, ...`.
    pub fn new(arity: usize) -> Self {
        RationalPoly { vars: (0..arity).map(|i| format!("x{i}")).collect(), terms: BTreeMap::new() }
    }

    pub fn with_vars(vars: Vec<String>) -> Self {
        RationalPoly { vars, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, BigRational)>,
    {
        let mut out = RationalPoly::with_vars(vars);
        for (e, c) in terms {
            out.add_term(Monomial::new(e), c)?;
        }
        Ok(out)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(arity: usize, terms: &[(&[i32], i64)]) -> Self {
        let mut out = RationalPoly::new(arity);
        for (e, c) in terms {
            out.add_term(Monomial::new(e.to_vec()), BigRational::from_integer((*c).into()))
                .expect("arity is consistent");
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) -> Result<()> {
        if m.arity() != self.vars.len() {
            return Err(Error::ArityMismatch { left: self.vars.len(), right: m.arity() });
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigRational) -> RationalPoly {
        let mut out = RationalPoly::with_vars(self.vars.clone());
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        }
        out
    }

    pub fn permute_vars(&self, perm: &[usize]) -> RationalPoly {
        let mut vars = self.vars.clone();
        for (i, v) in self.vars.iter().enumerate() {
            vars[perm[i]] = v.clone();
        }
        RationalPoly { vars, terms: self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())).collect() }
    }

    /// Coefficient-wise image in `F_p`.
    pub fn reduce_mod_p(&self, p: Prime) -> Result<FpPoly> {
        let mut out = FpPoly::zero(self.arity(), p);
        for (m, c) in &self.terms {
            let r = p.reduce_rational(c).ok_or_else(|| Error::BadReduction {
                p: p.get(),
                term: format!("{}*{}", format_rational(c), m.display_with(&self.vars)),
            })?;
            out.add_term(m.clone(), r);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson { e: m.exponents().to_vec(), c: format_rational(c) })
                .collect(),
        }
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mon = m.display_with(&self.vars);
                if mon == "1" {
                    format_rational(c)
                } else if c.is_one() {
                    mon
                } else {
                    format!("{}*{}", format_rational(c), mon)
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Wire form: `{"vars": ["x","y"], "terms": [{"e": [2,0], "c": "1"}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub e: Vec<i32>,
    pub c: String,
}

impl TryFrom<PolyJson> for RationalPoly {
    type Error = Error;
    fn try_from(j: PolyJson) -> Result<Self> {
        if j.vars.is_empty() {
            return Err(Error::Invalid("polynomial needs at least one variable".into()));
        }
        let mut out = RationalPoly::with_vars(j.vars);
        for t in j.terms {
            out.add_term(Monomial::new(t.e), parse_rational(&t.c)?)?;
        }
        Ok(out)
    }
}

impl Serialize for RationalPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        RationalPoly::try_from(j).map_err(serde::de::Error::custom)
    }
}
