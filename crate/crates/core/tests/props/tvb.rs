use fsplit_core::tvb::{
    dual_bundle, hyperplane_case_verdict, mu_values, ranktwo_verdict, RayFiltration, Subspace, TwoStepBundle,
};
use fsplit_core::{Decision, Error, Fan, Prime};
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::TestRunner;

use super::Property;

pub const PROPERTIES: &[(&str, Property)] = &[
    ("multiplicities survive change of basis", multiplicities_survive_change_of_basis),
    ("dual is an involution preserving multiplicities", dual_is_an_involution_preserving_multiplicities),
    ("rank two regular implies split", rank_two_regular_implies_split),
    ("rank two routes agree", rank_two_routes_agree),
    ("rank two split is self dual", rank_two_split_is_self_dual),
];

pub fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![3u64, 5, 7]).prop_map(|p| Prime::new(p).unwrap())
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Rays `(1, k)`; only the count matters since compatibility is not checked.
fn fan_with(n: usize) -> Fan {
    Fan::new(2, (0..n as i64).map(|k| vec![1, k]).collect(), false, false).unwrap()
}

/// Random distinct subspaces of `Q^r` of the given dimensions, each on its own ray, plus a few
/// rays with one-step filtrations.
pub fn bundle(r: usize, dims: std::ops::RangeInclusive<usize>, max_subspaces: usize) -> impl Strategy<Value = TwoStepBundle> {
    let sub = dims.prop_flat_map(move |d| prop::collection::vec(prop::collection::vec(-3i64..=3, r), d));
    (prop::collection::vec((sub, -3i64..=3, 0i64..=6), 1..=max_subspaces), prop::collection::vec(-2i64..=2, 0..=2))
        .prop_filter_map("independent distinct subspaces", move |(specs, one_steps)| {
            let mut subspaces: Vec<Subspace> = Vec::new();
            let mut filtrations = Vec::new();
            for (basis, first, len) in specs {
                let s = Subspace::new(r, basis.into_iter().map(|v| v.into_iter().map(q).collect()).collect()).ok()?;
                if subspaces.contains(&s) {
                    return None;
                }
                filtrations.push(RayFiltration::two_step(subspaces.len(), first, subspaces.len(), first + len));
                subspaces.push(s);
            }
            for last in one_steps {
                filtrations.push(RayFiltration::one_step(filtrations.len(), last));
            }
            TwoStepBundle::new(r, fan_with(filtrations.len()), subspaces, filtrations, false).ok()
        })
}

/// Invertible integer matrices.
fn invertible(r: usize) -> impl Strategy<Value = Vec<Vec<BigRational>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, r), r).prop_filter_map("invertible", move |m| {
        let rows: Vec<Vec<BigRational>> = m.into_iter().map(|v| v.into_iter().map(q).collect()).collect();
        (fsplit_core::linalg::rank(&rows) == r).then_some(rows)
    })
}

/// Lines that collide after reduction mod `p` describe a different bundle; those are skipped.
pub fn split_value(r: Result<Decision, Error>) -> Option<Decision> {
    match r {
        Ok(v) => Some(v),
        Err(Error::DegeneratePoints(..)) | Err(Error::LambdaDegenerateModP { .. }) => None,
        Err(e) => panic!("unexpected error {e}"),
    }
}

fn nested(b: &TwoStepBundle) -> bool {
    let s = b.subspaces();
    s.iter().enumerate().any(|(i, e)| s.iter().enumerate().any(|(j, f)| i != j && e.is_contained_in(f)))
}

pub fn multiplicities_survive_change_of_basis(r: &mut TestRunner) -> Result<(), String> {
    let s = (2usize..=4).prop_flat_map(|r| (bundle(r, 1..=r - 1, 4), invertible(r)));
    r.run(&s, |(b, a)| {
        let moved = b.transformed(&a).unwrap();
        prop_assert_eq!(mu_values(&moved).unwrap(), mu_values(&b).unwrap());
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn dual_is_an_involution_preserving_multiplicities(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(2usize..=4).prop_flat_map(|r| bundle(r, 1..=r - 1, 4)), |b| {
        let d = dual_bundle(&b);
        prop_assert_eq!(&dual_bundle(&d), &b);
        for (e, f) in b.subspaces().iter().zip(d.subspaces()) {
            prop_assert_eq!(&e.perp(), f);
        }
        // containment flips under complements, so only unnested subspaces keep their multiplicity
        if !nested(&b) {
            prop_assert_eq!(mu_values(&d).unwrap(), mu_values(&b).unwrap());
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn rank_two_regular_implies_split(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(bundle(2, 1..=1, 5), prime()), |(b, p)| {
        if let Ok(v) = ranktwo_verdict(&b, p) {
            prop_assert!(v.fregular.value != Decision::Yes || v.fsplit.is_yes());
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn rank_two_routes_agree(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(bundle(2, 1..=1, 5), prime()), |(b, p)| {
        let via_points = split_value(ranktwo_verdict(&b, p).map(|v| v.fsplit.value));
        let via_hyperplanes = split_value(hyperplane_case_verdict(&b, p).map(|v| v.fsplit.value));
        if let (Some(x), Some(y)) = (via_points, via_hyperplanes) {
            prop_assert_eq!(x, y);
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn rank_two_split_is_self_dual(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(bundle(2, 1..=1, 5), prime()), |(b, p)| {
        let e = split_value(ranktwo_verdict(&b, p).map(|v| v.fsplit.value));
        let d = split_value(ranktwo_verdict(&dual_bundle(&b), p).map(|v| v.fsplit.value));
        prop_assert_eq!(e, d);
        Ok(())
    })
    .map_err(|e| e.to_string())
}
