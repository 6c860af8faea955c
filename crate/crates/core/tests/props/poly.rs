use std::collections::BTreeMap;

use fsplit_core::fppoly::fedder_hypersurface;
use fsplit_core::{FpElem, FpPoly, Monomial, Prime};
use proptest::prelude::*;
use proptest::test_runner::TestRunner;

use super::Property;

pub const PROPERTIES: &[(&str, Property)] = &[
    ("powers add exponents", power_exponents_add),
    ("frobenius is additive", frobenius_is_additive),
    ("coefficients match repeated multiplication", coefficients_match_repeated_multiplication),
    ("witness is a qualifying term", witness_is_a_qualifying_term),
    ("fedder ignores variable order and scaling", fedder_ignores_variable_order_and_scaling),
    ("truncated power keeps low terms", truncated_power_keeps_low_terms),
];

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(|p| Prime::new(p).unwrap())
}

type Terms = Vec<(Vec<i32>, i64)>;

fn terms(arity: usize, max_terms: usize, lo: i32, hi: i32) -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(lo..=hi, arity), -20i64..20), 0..=max_terms)
}

fn build(arity: usize, p: Prime, t: &[(Vec<i32>, i64)]) -> FpPoly {
    FpPoly::from_terms(arity, p, t.iter().map(|(e, c)| (Monomial::new(e.clone()), *c))).unwrap()
}

/// Schoolbook product on plain maps.
fn naive_pow(t: &[(Vec<i32>, i64)], e: u32, p: i64) -> BTreeMap<Vec<i32>, i64> {
    let arity = t.first().map_or(0, |x| x.0.len());
    let mut acc: BTreeMap<Vec<i32>, i64> = BTreeMap::from([(vec![0; arity], 1)]);
    for _ in 0..e {
        let mut next = BTreeMap::new();
        for (m1, c1) in &acc {
            for (m2, c2) in t {
                let m: Vec<i32> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                let slot = next.entry(m).or_insert(0);
                *slot = (*slot + c1 * c2).rem_euclid(p);
            }
        }
        acc = next;
    }
    acc.retain(|_, c| *c != 0);
    acc
}

pub fn power_exponents_add(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(prime(), terms(3, 4, -1, 2), 0u64..=8, 0u64..=8), |(p, t, a, b)| {
        let f = build(3, p, &t);
        let lhs = f.pow(a + b).unwrap();
        let rhs = f.pow(a).unwrap().mul(&f.pow(b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn frobenius_is_additive(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(prime(), terms(2, 5, 0, 4), terms(2, 5, 0, 4)), |(p, t, u)| {
        let f = build(2, p, &t);
        let g = build(2, p, &u);
        let e = p.as_u64();
        prop_assert_eq!(f.add(&g).unwrap().pow(e).unwrap(), f.pow(e).unwrap().add(&g.pow(e).unwrap()).unwrap());
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn coefficients_match_repeated_multiplication(r: &mut TestRunner) -> Result<(), String> {
    let nonempty = terms(3, 6, 0, 4).prop_filter("nonempty", |t| !t.is_empty());
    r.run(&(prime(), nonempty, 0u32..=6, prop::collection::vec(0i32..=24, 3)), |(p, t, e, probe)| {
        let pe = build(3, p, &t).pow(e as u64).unwrap();
        let oracle = naive_pow(&t, e, p.get() as i64);
        for (m, c) in &oracle {
            prop_assert_eq!(pe.coeff(&Monomial::new(m.clone())).unwrap().residue() as i64, *c);
        }
        prop_assert_eq!(pe.len(), oracle.len());
        let want = oracle.get(&probe).copied().unwrap_or(0);
        prop_assert_eq!(pe.coeff(&Monomial::new(probe)).unwrap().residue() as i64, want);
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn witness_is_a_qualifying_term(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(prime(), terms(4, 8, -1, 6), 0i32..=5), |(p, t, bound)| {
        let f = build(4, p, &t);
        let qualifying: Vec<&Monomial> = f
            .terms()
            .map(|(m, _)| m)
            .filter(|m| m.exponents().iter().all(|&x| (0..=bound).contains(&x)))
            .collect();
        match f.bounded_witness(bound, None) {
            Some((m, c)) => {
                prop_assert!(!c.is_zero());
                prop_assert_eq!(f.coeff(&m).unwrap(), c);
                prop_assert!(qualifying.contains(&&m));
            }
            None => prop_assert!(qualifying.is_empty()),
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn fedder_ignores_variable_order_and_scaling(r: &mut TestRunner) -> Result<(), String> {
    let perm = Just(vec![0usize, 1, 2]).prop_shuffle();
    r.run(&(prime(), terms(3, 5, 0, 3), perm, 1i64..50), |(p, t, perm, s)| {
        let f = build(3, p, &t);
        let c = FpElem::new(s, p);
        prop_assume!(!f.is_zero() && !c.is_zero());
        let base = fedder_hypersurface(&f).unwrap();
        prop_assert_eq!(fedder_hypersurface(&f.permute_vars(&perm)).unwrap(), base);
        prop_assert_eq!(fedder_hypersurface(&f.scale(c)).unwrap(), base);
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn truncated_power_keeps_low_terms(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(prime(), terms(3, 4, 0, 3), 0u64..=7, 0i32..=6), |(p, t, e, bound)| {
        let f = build(3, p, &t);
        let full = f.pow(e).unwrap();
        let cut = f.pow_truncated(e, bound).unwrap();
        let kept: Vec<_> = full.terms().filter(|(m, _)| m.exponents().iter().all(|&x| x <= bound)).collect();
        prop_assert_eq!(cut.terms().collect::<Vec<_>>(), kept);
        Ok(())
    })
    .map_err(|e| e.to_string())
}
