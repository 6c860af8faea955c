use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime characteristic `2 <= p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u32")]
pub struct Prime(u32);

impl Prime {
    pub fn new(value: u64) -> Result<Self> {
        if value >= 1 << 31 || !is_prime(value) {
            return Err(Error::NotPrime(value));
        }
        Ok(Prime(value as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn as_u64(self) -> u64 {
        self.0 as u64
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    pub fn reduce_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    pub fn reduce_bigint(self, v: &BigInt) -> u32 {
        let p = BigInt::from(self.0);
        v.mod_floor(&p).to_u32().expect("residue fits in u32")
    }

    /// Image of a rational in `F_p`, or `None` when `p` divides the denominator.
    pub fn reduce_rational(self, q: &BigRational) -> Option<u32> {
        let den = self.reduce_bigint(q.denom());
        if den == 0 {
            return None;
        }
        let num = self.reduce_bigint(q.numer());
        Some(mul_mod(num, inv_mod(den, self.0), self.0))
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;
    fn try_from(v: u64) -> Result<Self> {
        Prime::new(v)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic trial division; the inputs are below 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// All primes in the closed range `[lo, hi]`, ascending.
pub fn primes_in(lo: u64, hi: u64) -> Vec<Prime> {
    (lo..=hi).filter(|&n| is_prime(n)).filter_map(|n| Prime::new(n).ok()).collect()
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (if s >= p as u64 { s - p as u64 } else { s }) as u32
}

pub(crate) fn pow_mod(mut base: u32, mut e: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue via Fermat.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a, p as u64 - 2, p)
}

/// Element of the prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElem {
    residue: u32,
    prime: Prime,
}

impl FpElem {
    pub fn new(value: i64, prime: Prime) -> Self {
        FpElem { residue: prime.reduce_i64(value), prime }
    }

    pub(crate) fn from_residue(residue: u32, prime: Prime) -> Self {
        debug_assert!(residue < prime.get());
        FpElem { residue, prime }
    }

    pub fn zero(prime: Prime) -> Self {
        FpElem { residue: 0, prime }
    }

    pub fn one(prime: Prime) -> Self {
        FpElem { residue: 1 % prime.get(), prime }
    }

    pub fn residue(self) -> u32 {
        self.residue
    }

    pub fn prime(self) -> Prime {
        self.prime
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    pub fn pow(self, e: u64) -> Self {
        FpElem { residue: pow_mod(self.residue, e, self.prime.get()), prime: self.prime }
    }

    /// `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(FpElem { residue: inv_mod(self.residue, self.prime.get()), prime: self.prime })
        }
    }

    /// Representative in `(-p/2, p/2]`, handy for printing certificates.
    pub fn centered(self) -> i64 {
        let p = self.prime.get() as i64;
        let r = self.residue as i64;
        if r > p / 2 {
            r - p
        } else {
            r
        }
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl Add for FpElem {
    type Output = FpElem;
    fn add(self, rhs: FpElem) -> FpElem {
        assert_eq!(self.prime, rhs.prime, "mixed characteristics");
        FpElem { residue: add_mod(self.residue, rhs.residue, self.prime.get()), prime: self.prime }
    }
}

impl Neg for FpElem {
    type Output = FpElem;
    fn neg(self) -> FpElem {
        let p = self.prime.get();
        FpElem { residue: (p - self.residue) % p, prime: self.prime }
    }
}

impl Sub for FpElem {
    type Output = FpElem;
    fn sub(self, rhs: FpElem) -> FpElem {
        self + (-rhs)
    }
}

impl Mul for FpElem {
    type Output = FpElem;
    fn mul(self, rhs: FpElem) -> FpElem {
        assert_eq!(self.prime, rhs.prime, "mixed characteristics");
        FpElem { residue: mul_mod(self.residue, rhs.residue, self.prime.get()), prime: self.prime }
    }
}

/// Parses `"3"`, `"-3/7"`, or a finite decimal such as `"0.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("cannot parse rational `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Invalid(format!("zero denominator in `{s}`")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.trim_start().starts_with('-');
        let int_part: BigInt = match int.trim() {
            "" | "-" | "+" => BigInt::zero(),
            t => t.parse().map_err(|_| bad())?,
        };
        let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = int_part.abs() * &scale + frac_part;
        let num = if negative { -mag } else { mag };
        return Ok(BigRational::new(num, scale));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

/// Canonical string form: `"n"` or `"n/d"`.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
