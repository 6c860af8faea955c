use super::field::{add_mod, inv_mod, mul_mod, Prime};

/// Dense univariate polynomial over `F_p`, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    prime: Prime,
    coeffs: Vec<u32>,
}

impl UniPoly {
    pub fn new(prime: Prime, coeffs: Vec<i64>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| prime.reduce_i64(c)).collect();
        let mut out = UniPoly { prime, coeffs };
        out.trim();
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn derivative(&self) -> UniPoly {
        let p = self.prime.get();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64 % p as u64) as u32, p))
            .collect();
        let mut out = UniPoly { prime: self.prime, coeffs };
        out.trim();
        out
    }

    pub fn eval(&self, x: u32) -> u32 {
        let p = self.prime.get();
        self.coeffs.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
    }

    fn rem(&self, divisor: &UniPoly) -> UniPoly {
        let p = self.prime.get();
        let d = divisor.degree().expect("division by zero polynomial");
        let lead_inv = inv_mod(divisor.coeffs[d], p);
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let top = r.len() - 1;
            let q = mul_mod(r[top], lead_inv, p);
            if q != 0 {
                let shift = top - d;
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let sub = mul_mod(q, c, p);
                    r[shift + i] = add_mod(r[shift + i], p - sub, p) % p;
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        UniPoly { prime: self.prime, coeffs: r }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if let Some(d) = a.degree() {
            let p = self.prime.get();
            let inv = inv_mod(a.coeffs[d], p);
            for c in &mut a.coeffs {
                *c = mul_mod(*c, inv, p);
            }
        }
        a
    }
}

/// Hasse polynomial `H(t) = sum_i C(m, i)^2 t^i` with `m = (p - 1) / 2`; its roots are the
/// Legendre parameters of supersingular curves.
pub fn hasse_polynomial(p: Prime) -> UniPoly {
    let m = (p.get() as u64 - 1) / 2;
    let pm = p.get();
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    let mut binom = 1u32;
    for i in 0..=m {
        coeffs.push(mul_mod(binom, binom, pm));
        if i < m {
            // C(m, i+1) = C(m, i) * (m - i) / (i + 1); i + 1 <= m < p so the inverse exists
            binom = mul_mod(binom, ((m - i) % pm as u64) as u32, pm);
            binom = mul_mod(binom, inv_mod(((i + 1) % pm as u64) as u32, pm), pm);
        }
    }
    let mut out = UniPoly { prime: p, coeffs };
    out.trim();
    out
}
