use fsplit_core::fppoly::primes_in;
use fsplit_core::toricpairs::{never_fregular_check, toric_pair_fregular, toric_pair_fsplit, BranchDatum, ToricAmbient};
use fsplit_core::{Decision, Prime, RationalPoly};
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::TestRunner;

use super::Property;

pub const PROPERTIES: &[(&str, Property)] = &[
    ("no boundary always splits", no_boundary_always_splits),
    ("cox variable order is irrelevant", cox_variable_order_is_irrelevant),
    ("rescaling a branch is irrelevant", rescaling_a_branch_is_irrelevant),
    ("more boundary never helps", more_boundary_never_helps),
    ("raising a coefficient never helps", raising_a_coefficient_never_helps),
    ("sextic double plane is split but never regular", sextic_double_plane_is_split_but_never_regular),
];

fn pr(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(pr)
}

/// Exponent vectors of total degree `d` in `n` variables.
fn degree_vectors(n: usize, d: i32) -> Vec<Vec<i32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .flat_map(|first| {
            degree_vectors(n - 1, d - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// A homogeneous form on `P^{n-1}` with a few random terms.
fn form(n: usize) -> impl Strategy<Value = RationalPoly> {
    (1i32..=4).prop_flat_map(move |d| {
        let monos = degree_vectors(n, d);
        prop::collection::vec((prop::sample::select(monos), (-6i64..=6).prop_filter("nonzero", |c| *c != 0)), 1..=4)
            .prop_map(move |terms| {
                let terms = terms.into_iter().map(|(e, c)| (e, BigRational::from_integer(c.into())));
                RationalPoly::from_terms((0..n).map(|i| format!("x{i}")).collect(), terms).unwrap()
            })
            .prop_filter("nonzero", |f| !f.is_zero())
    })
}

fn coefficient() -> impl Strategy<Value = BigRational> {
    (0i64..=5, 1i64..=6).prop_filter_map("coefficient below one", |(a, b)| (a < b).then(|| BigRational::new(a.into(), b.into())))
}

fn branches(n: usize, max: usize) -> impl Strategy<Value = Vec<BranchDatum>> {
    prop::collection::vec((form(n), coefficient()).prop_map(|(f, a)| BranchDatum::with_coefficient(f, a).unwrap()), 1..=max)
}

/// Instances whose branch vanishes mod `p` are skipped.
fn decide(x: &ToricAmbient, b: &[BranchDatum], p: Prime) -> Option<Decision> {
    toric_pair_fsplit(x, b, p).ok().map(|v| v.value)
}

pub fn no_boundary_always_splits(r: &mut TestRunner) -> Result<(), String> {
    let s = (prop::collection::vec(1usize..=3, 1..=3), prop::sample::select(primes_in(2, 50)), any::<bool>());
    r.run(&s, |(dims, p, product)| {
        let x = if product { ToricAmbient::product(&dims) } else { ToricAmbient::projective_space(dims[0]) };
        prop_assert!(toric_pair_fsplit(&x, &[], p).unwrap().is_yes());
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn cox_variable_order_is_irrelevant(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(branches(3, 3), Just(vec![0usize, 1, 2]).prop_shuffle(), prime()), |(b, perm, p)| {
        let x = ToricAmbient::projective_space(2);
        let Some(base) = decide(&x, &b, p) else { return Ok(()) };
        let permuted: Vec<BranchDatum> = b
            .iter()
            .map(|d| BranchDatum::with_coefficient(d.f.permute_vars(&perm), d.a.clone()).unwrap())
            .collect();
        prop_assert_eq!(decide(&x, &permuted, p), Some(base));
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn rescaling_a_branch_is_irrelevant(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(branches(3, 3), (1i64..=12, 1i64..=12), prime()), |(b, (num, den), p)| {
        prop_assume!(num % p.get() as i64 != 0 && den % p.get() as i64 != 0);
        let x = ToricAmbient::projective_space(2);
        let Some(base) = decide(&x, &b, p) else { return Ok(()) };
        let s = BigRational::new(num.into(), den.into());
        let mut scaled = b.clone();
        scaled[0] = BranchDatum::with_coefficient(b[0].f.scale(&s), b[0].a.clone()).unwrap();
        prop_assert_eq!(decide(&x, &scaled, p), Some(base));
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn more_boundary_never_helps(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(branches(3, 3), branches(3, 1), prime()), |(b, extra, p)| {
        let x = ToricAmbient::projective_space(2);
        let Some(before) = decide(&x, &b, p) else { return Ok(()) };
        let mut bigger = b.clone();
        bigger.extend(extra);
        if let Some(after) = decide(&x, &bigger, p) {
            prop_assert!(!(before == Decision::No && after == Decision::Yes));
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn raising_a_coefficient_never_helps(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(branches(2, 3), prime(), 0usize..3), |(b, p, which)| {
        let x = ToricAmbient::projective_space(1);
        let Some(before) = decide(&x, &b, p) else { return Ok(()) };
        let i = which % b.len();
        let mut raised = b.clone();
        let a = (&b[i].a + BigRational::from_integer(1.into())) / BigRational::from_integer(2.into());
        raised[i] = BranchDatum::with_coefficient(b[i].f.clone(), a).unwrap();
        let after = decide(&x, &raised, p).unwrap();
        prop_assert!(!(before == Decision::No && after == Decision::Yes));
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn sextic_double_plane_is_split_but_never_regular(_: &mut TestRunner) -> Result<(), String> {
    let f = RationalPoly::from_int_terms(3, &[(&[6, 0, 0], 1), (&[0, 6, 0], 1), (&[0, 0, 6], 1)]);
    let x = ToricAmbient::projective_space(2);
    let b = [BranchDatum::from_order(f, 2).map_err(|e| e.to_string())?];
    let split = toric_pair_fsplit(&x, &b, pr(7)).map_err(|e| e.to_string())?;
    let regular = toric_pair_fregular(&x, &b, &split).map_err(|e| e.to_string())?;
    match (never_fregular_check(&x, &b), split.is_yes(), regular.is_no()) {
        (Ok(true), true, true) => Ok(()),
        other => Err(format!("expected (true, split, not regular), got {other:?}")),
    }
}
