//! Fans, the weight polytopes `P_X` and `F_X = P_X ∩ -P_X`, lattice-point enumeration, and the
//! residue-class test deciding diagonal splitting of complete toric varieties.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fppoly::Prime;
use crate::linalg::{self, q, QVec};
use crate::verdict::{Certificate, Verdict};

/// Largest bounding box `enumerate_scaled` will scan.
pub const MAX_SCAN: u128 = 200_000_000;
/// Missing-class sets beyond this size are reported by count and one sample.
pub const MISSING_LIST_LIMIT: usize = 10_000;

/// Ray data of a fan. Completeness and smoothness are assertions made by the caller.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FanJson", into = "FanJson")]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    complete: bool,
    smooth: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FanJson {
    dim: usize,
    rays: Vec<Vec<i64>>,
    #[serde(default)]
    complete: bool,
    #[serde(default)]
    smooth: bool,
}

impl TryFrom<FanJson> for Fan {
    type Error = Error;
    fn try_from(j: FanJson) -> Result<Self> {
        Fan::new(j.dim, j.rays, j.complete, j.smooth)
    }
}

impl From<Fan> for FanJson {
    fn from(f: Fan) -> Self {
        FanJson { dim: f.dim, rays: f.rays, complete: f.complete, smooth: f.smooth }
    }
}

impl Fan {
    pub fn new(dim: usize, rays: Vec<Vec<i64>>, complete: bool, smooth: bool) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Invalid("fan dimension must be positive".into()));
        }
        for (i, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::Invalid(format!("ray {i} has length {} instead of {dim}", r.len())));
            }
            let g = r.iter().fold(0i64, |g, &x| g.gcd(&x));
            if g != 1 {
                return Err(Error::Invalid(format!("ray {i} = {r:?} is not a primitive nonzero vector")));
            }
            if rays[..i].contains(r) {
                return Err(Error::Invalid(format!("ray {i} = {r:?} is repeated")));
            }
        }
        Ok(Fan { dim, rays, complete, smooth })
    }

    /// Fan of `P^n`: `e_1, ..., e_n, -(e_1 + ... + e_n)`.
    pub fn projective_space(n: usize) -> Self {
        let mut rays: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i, 1)).collect();
        rays.push(vec![-1; n]);
        Fan { dim: n, rays, complete: true, smooth: true }
    }

    /// Fan of `P^{n_1} x ... x P^{n_k}`, rays grouped by factor.
    pub fn product_of_projective_spaces(dims: &[usize]) -> Self {
        let total: usize = dims.iter().sum();
        let mut rays = Vec::new();
        let mut offset = 0;
        for &n in dims {
            for i in 0..n {
                rays.push(unit(total, offset + i, 1));
            }
            let mut last = vec![0; total];
            for x in &mut last[offset..offset + n] {
                *x = -1;
            }
            rays.push(last);
            offset += n;
        }
        Fan { dim: total, rays, complete: true, smooth: true }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth
    }

    /// Applies `rays -> A * rays`.
    pub fn transformed(&self, a: &[Vec<i64>]) -> Fan {
        let rays = self
            .rays
            .iter()
            .map(|r| a.iter().map(|row| row.iter().zip(r).map(|(x, y)| x * y).sum()).collect())
            .collect();
        Fan { dim: self.dim, rays, complete: self.complete, smooth: self.smooth }
    }
}

fn unit(n: usize, i: usize, s: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = s;
    v
}

/// One half-space `<normal, u> <= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub normal: Vec<i64>,
    pub bound: BigRational,
}

/// Intersection of finitely many rational half-spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    inequalities: Vec<Inequality>,
}

impl HPolytope {
    pub fn new(dim: usize, inequalities: Vec<Inequality>) -> Result<Self> {
        if let Some(bad) = inequalities.iter().find(|h| h.normal.len() != dim) {
            return Err(Error::Invalid(format!("normal {:?} has wrong dimension", bad.normal)));
        }
        Ok(HPolytope { dim, inequalities })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    /// `u` satisfies every inequality of `k * self`.
    pub fn contains_scaled(&self, u: &[i64], k: u64) -> bool {
        fits(&self.scaled_caps(k), &self.inequalities, u)
    }

    /// `floor(k * bound)` per inequality; integer points only need `<normal, u> <= cap`.
    fn scaled_caps(&self, k: u64) -> Vec<BigInt> {
        let k = BigRational::from_integer(k.into());
        self.inequalities.iter().map(|h| (&k * &h.bound).floor().to_integer()).collect()
    }

    /// `u` makes some inequality of `k * self` tight.
    pub fn on_boundary_scaled(&self, u: &[i64], k: u64) -> bool {
        let k = BigRational::from_integer(k.into());
        self.inequalities.iter().any(|h| q(idot(&h.normal, u)) == &k * &h.bound)
    }

    fn rows(&self) -> Vec<QVec> {
        self.inequalities.iter().map(|h| h.normal.iter().map(|&x| q(x)).collect()).collect()
    }

    fn bounds(&self) -> Vec<BigRational> {
        self.inequalities.iter().map(|h| h.bound.clone()).collect()
    }

    /// The recession cone `{d : <normal, d> <= 0}` is `{0}`.
    pub fn is_bounded(&self) -> bool {
        let mut rows = self.rows();
        let mut bounds = vec![BigRational::zero(); rows.len()];
        for i in 0..self.dim {
            for s in [1, -1] {
                rows.push(unit(self.dim, i, s).into_iter().map(q).collect());
                bounds.push(BigRational::one());
            }
        }
        vertices_of(&rows, &bounds, self.dim).iter().all(|v| v.iter().all(Zero::is_zero))
    }

    /// Exact vertex list (sorted, deduplicated) of a bounded polytope.
    pub fn vertices(&self) -> Result<Vec<QVec>> {
        if !self.is_bounded() {
            return Err(Error::Unbounded);
        }
        Ok(vertices_of(&self.rows(), &self.bounds(), self.dim))
    }
}

fn fits(caps: &[BigInt], ineqs: &[Inequality], u: &[i64]) -> bool {
    ineqs.iter().zip(caps).all(|(h, c)| BigInt::from(idot(&h.normal, u)) <= *c)
}

fn idot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Feasible basic solutions of `rows . x <= bounds`.
fn vertices_of(rows: &[QVec], bounds: &[BigRational], dim: usize) -> Vec<QVec> {
    let mut out = BTreeSet::new();
    let m = rows.len();
    if m < dim {
        return Vec::new();
    }
    let mut idx: Vec<usize> = (0..dim).collect();
    loop {
        let a: Vec<QVec> = idx.iter().map(|&i| rows[i].clone()).collect();
        let b: Vec<BigRational> = idx.iter().map(|&i| bounds[i].clone()).collect();
        if let Some(x) = linalg::solve(&a, &b) {
            if rows.iter().zip(bounds).all(|(r, bd)| &linalg::dot(r, &x) <= bd) {
                out.insert(x);
            }
        }
        // next combination
        let mut i = dim;
        loop {
            if i == 0 {
                return out.into_iter().collect();
            }
            i -= 1;
            if idx[i] < m - dim + i {
                idx[i] += 1;
                for j in i + 1..dim {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `P_X = {u : <rho, u> <= 1 for every ray}`.
pub fn px_polytope(fan: &Fan) -> HPolytope {
    let ineqs = fan.rays.iter().map(|r| Inequality { normal: r.clone(), bound: BigRational::one() }).collect();
    HPolytope { dim: fan.dim, inequalities: ineqs }
}

/// `F_X = P_X ∩ -P_X`.
pub fn fx_polytope(fan: &Fan) -> HPolytope {
    let ineqs = fan
        .rays
        .iter()
        .flat_map(|r| {
            [
                Inequality { normal: r.clone(), bound: BigRational::one() },
                Inequality { normal: r.iter().map(|x| -x).collect(), bound: BigRational::one() },
            ]
        })
        .collect();
    HPolytope { dim: fan.dim, inequalities: ineqs }
}

/// Integer points of `k * poly` in lexicographic order.
pub fn enumerate_scaled(poly: &HPolytope, k: u64) -> Result<Vec<Vec<i64>>> {
    let verts = poly.vertices()?;
    if verts.is_empty() {
        return Ok(Vec::new());
    }
    let kq = BigRational::from_integer(k.into());
    let n = poly.dim;
    let mut lo = vec![i64::MAX; n];
    let mut hi = vec![i64::MIN; n];
    for v in &verts {
        for i in 0..n {
            let x = &v[i] * &kq;
            lo[i] = lo[i].min(x.floor().to_integer().to_i64().ok_or(Error::Unbounded)?);
            hi[i] = hi[i].max(x.ceil().to_integer().to_i64().ok_or(Error::Unbounded)?);
        }
    }
    let volume: u128 = lo.iter().zip(&hi).map(|(l, h)| (h - l + 1) as u128).product();
    if volume > MAX_SCAN {
        return Err(Error::ResourceExceeded { terms: volume.min(usize::MAX as u128) as usize, cap: MAX_SCAN as usize });
    }
    let caps = poly.scaled_caps(k);
    // small caps (the usual case) are compared in machine integers
    let small: Option<Vec<i64>> = caps.iter().map(|c| c.to_i64()).collect();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let inside = match &small {
            Some(c) => poly.inequalities.iter().zip(c).all(|(h, c)| idot(&h.normal, &cur) <= *c),
            None => fits(&caps, &poly.inequalities, &cur),
        };
        if inside {
            out.push(cur.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
        }
    }
}

/// Image of a point set in `(Z/p)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueCoverage {
    pub prime: Prime,
    pub dim: usize,
    pub covered: BTreeSet<Vec<i64>>,
    /// Missing classes in lexicographic order, truncated to `MISSING_LIST_LIMIT` entries.
    pub missing: Vec<Vec<i64>>,
    pub missing_count: u128,
}

impl ResidueCoverage {
    pub fn total(&self) -> u128 {
        (self.prime.get() as u128).pow(self.dim as u32)
    }

    pub fn is_complete(&self) -> bool {
        self.missing_count == 0
    }

    pub fn missing_truncated(&self) -> bool {
        (self.missing.len() as u128) < self.missing_count
    }
}

pub fn reduce_point(u: &[i64], p: Prime) -> Vec<i64> {
    u.iter().map(|&x| x.rem_euclid(p.get() as i64)).collect()
}

pub fn residue_coverage(points: &[Vec<i64>], dim: usize, p: Prime) -> Result<ResidueCoverage> {
    if let Some(bad) = points.iter().find(|u| u.len() != dim) {
        return Err(Error::Invalid(format!("point {bad:?} is not in dimension {dim}")));
    }
    let covered: BTreeSet<Vec<i64>> = points.iter().map(|u| reduce_point(u, p)).collect();
    let total = (p.get() as u128).pow(dim as u32);
    let missing_count = total - covered.len() as u128;
    let mut missing = Vec::new();
    if missing_count > 0 {
        let pm = p.get() as i64;
        let mut cur = vec![0i64; dim];
        'scan: loop {
            if !covered.contains(&cur) {
                missing.push(cur.clone());
                if missing.len() >= MISSING_LIST_LIMIT || missing.len() as u128 == missing_count {
                    break;
                }
            }
            let mut i = dim;
            loop {
                if i == 0 {
                    break 'scan;
                }
                i -= 1;
                if cur[i] + 1 < pm {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
            }
        }
    }
    Ok(ResidueCoverage { prime: p, dim, covered, missing, missing_count })
}

const RULE_DIAGONAL: &str = "toric-diagonal/residue-coverage";

/// Diagonal splitting of a complete toric variety: every class of `M / pM` has a
/// representative among the lattice points of `(p - 1) F_X`.
pub fn diag_split_toric(fan: &Fan, p: Prime) -> Result<Verdict> {
    if !fan.complete {
        return Err(Error::NotComplete);
    }
    let k = p.as_u64() - 1;
    let fx = fx_polytope(fan);
    let points = enumerate_scaled(&fx, k)?;
    let cov = residue_coverage(&points, fan.dim, p)?;
    let assumptions = ["complete"];
    if !cov.is_complete() {
        let v = Verdict::no(RULE_DIAGONAL, "some residue class has no representative in (p-1)F_X")
            .with_certificate(Certificate::MissingClass { class: cov.missing[0].clone() })
            .with_assumptions(assumptions);
        return Ok(if cov.missing_truncated() {
            v.with_note(format!("{} classes missing; listing truncated", cov.missing_count))
        } else {
            v
        });
    }
    // Per class: prefer interior points, then small l1 norm, then lexicographically largest.
    let mut best: BTreeMap<Vec<i64>, (bool, i64, Reverse<Vec<i64>>)> = BTreeMap::new();
    for u in points {
        let key = (fx.on_boundary_scaled(&u, k), u.iter().map(|x| x.abs()).sum::<i64>(), Reverse(u.clone()));
        let class = reduce_point(&u, p);
        match best.get(&class) {
            Some(cur) if *cur <= key => {}
            _ => {
                best.insert(class, key);
            }
        }
    }
    let boundary_only = best.values().filter(|(b, _, _)| *b).count();
    let reps: Vec<Vec<i64>> = best.into_values().map(|(_, _, Reverse(u))| u).collect();
    let mut v = Verdict::yes(RULE_DIAGONAL, "every residue class mod p has a representative in (p-1)F_X")
        .with_certificate(Certificate::Representatives { points: reps })
        .with_assumptions(assumptions);
    if boundary_only > 0 {
        v = v.with_note(format!(
            "boundary-witness: {boundary_only} class(es) are represented only on the boundary of (p-1)F_X"
        ));
    }
    Ok(v)
}

/// Lattice points of `(p - 1) P_X`: the weights of toric splitting sections; contains `0`
/// whenever `P_X` does.
pub fn splitting_weights(fan: &Fan, p: Prime) -> Result<Vec<Vec<i64>>> {
    enumerate_scaled(&px_polytope(fan), p.as_u64() - 1)
}
