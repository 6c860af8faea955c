use fsplit_core::fppoly::{hasse_polynomial, primes_in, UniPoly};
use fsplit_core::pairs::{
    complexity_one_verdict, fsplit_degree_bound, legendre_coefficient, ordinary_pair, ComplexityOneInstance, CurvePoint,
    QDivisor,
};
use fsplit_core::toricpairs::{toric_pair_fsplit, BranchDatum, ToricAmbient};
use fsplit_core::{Decision, Error, FpElem, Prime, RationalPoly};
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::TestRunner;

use super::Property;

pub const PROPERTIES: &[(&str, Property)] = &[
    ("fregular implies fsplit", fregular_implies_fsplit),
    ("ordinarity is mobius invariant", ordinarity_is_mobius_invariant),
    ("degree bound is necessary", degree_bound_is_necessary),
    ("stabilizer table agrees with cox criterion", stabilizer_table_agrees_with_cox_criterion),
    ("four half points agree with cox criterion", four_half_points_agree_with_cox_criterion),
    ("hasse polynomial is squarefree", hasse_polynomial_is_squarefree),
];

fn pr(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn small_prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 17, 19, 23]).prop_map(pr)
}

fn odd_prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13]).prop_map(pr)
}

fn point() -> impl Strategy<Value = CurvePoint> {
    prop_oneof![
        1 => Just(CurvePoint::Infinity),
        6 => (-12i64..=12, 1i64..=4).prop_map(|(a, b)| CurvePoint::finite(BigRational::new(a.into(), b.into()))),
    ]
}

/// Product of linear forms `y0 - c y1` (or `y1` for infinity), as a binary form.
pub fn binary_form(points: &[CurvePoint]) -> RationalPoly {
    let mut coeffs = vec![q(1)]; // coefficient of y0^(d - i) y1^i
    for c in points {
        let (a, b) = match c {
            CurvePoint::Infinity => (q(0), q(1)),
            CurvePoint::Finite(x) => (q(1), -x.clone()),
        };
        let mut next = vec![q(0); coeffs.len() + 1];
        for (i, k) in coeffs.iter().enumerate() {
            next[i] += k * &a;
            next[i + 1] += k * &b;
        }
        coeffs = next;
    }
    let d = coeffs.len() as i32 - 1;
    let terms = coeffs.into_iter().enumerate().map(|(i, c)| (vec![d - i as i32, i as i32], c));
    RationalPoly::from_terms(vec!["y0".into(), "y1".into()], terms).unwrap()
}

pub fn fregular_implies_fsplit(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(prop::collection::vec(2u32..=8, 0..=5), small_prime()), |(orders, p)| {
        let inst = ComplexityOneInstance::projective_line_orders(&orders).unwrap();
        match complexity_one_verdict(&inst, p) {
            Ok(v) => prop_assert!(v.fregular.value != Decision::Yes || v.fsplit.is_yes()),
            Err(e) => {
                let expected = matches!(e, Error::LambdaDegenerateModP { .. } | Error::EvenPrime);
                prop_assert!(expected, "unexpected error {}", e);
            }
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn ordinarity_is_mobius_invariant(r: &mut TestRunner) -> Result<(), String> {
    let coeffs = (-5i64..=5, -5i64..=5, -5i64..=5, -5i64..=5);
    r.run(&(prop::collection::vec(point(), 4), coeffs, odd_prime()), |(pts, (a, b, c, d), p)| {
        prop_assume!((a * d - b * c).rem_euclid(p.get() as i64) != 0);
        let before = ordinary_pair(&pts[0], &pts[1], &pts[2], &pts[3], p);
        prop_assume!(before.is_ok());
        let moved: Vec<CurvePoint> = pts.iter().map(|x| x.mobius(&q(a), &q(b), &q(c), &q(d)).unwrap()).collect();
        let after = ordinary_pair(&moved[0], &moved[1], &moved[2], &moved[3], p);
        prop_assert_eq!(after, before);
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn degree_bound_is_necessary(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(prop::collection::vec(2u32..=9, 0..=6), small_prime()), |(orders, p)| {
        let inst = ComplexityOneInstance::projective_line_orders(&orders).unwrap();
        let delta = QDivisor::from_stabilizers(inst.stabilizers()).unwrap();
        if !fsplit_degree_bound(0, &delta, p, 1) {
            if let Ok(v) = complexity_one_verdict(&inst, p) {
                prop_assert!(v.fsplit.is_no());
            }
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn stabilizer_table_agrees_with_cox_criterion(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(prop::collection::vec(2u32..=7, 0..=4), odd_prime()), |(orders, p)| {
        prop_assume!(orders.iter().all(|&n| n % p.get() != 0));
        let inst = ComplexityOneInstance::projective_line_orders(&orders).unwrap();
        let Ok(v) = complexity_one_verdict(&inst, p) else { return Ok(()) };
        let branches: Vec<BranchDatum> = inst
            .stabilizers()
            .iter()
            .map(|(c, n)| BranchDatum::from_order(binary_form(std::slice::from_ref(c)), *n).unwrap())
            .collect();
        let cox = toric_pair_fsplit(&ToricAmbient::projective_space(1), &branches, p).unwrap();
        prop_assert_eq!(v.fsplit.value, cox.value, "orders {:?}", orders);
        Ok(())
    })
    .map_err(|e| e.to_string())
}

/// Exhaustive over `lambda` for small primes.
pub fn four_half_points_agree_with_cox_criterion(_: &mut TestRunner) -> Result<(), String> {
    for p in [3u64, 5, 7, 11, 13] {
        let p = pr(p);
        for lambda in 2..p.get() as i64 {
            let pts = [CurvePoint::int(0), CurvePoint::int(1), CurvePoint::int(lambda), CurvePoint::Infinity];
            let inst = ComplexityOneInstance::projective_line(pts.iter().map(|c| (c.clone(), 2)).collect())
                .map_err(|e| e.to_string())?;
            let table = complexity_one_verdict(&inst, p).map_err(|e| e.to_string())?.fsplit;
            let branch = BranchDatum::from_order(binary_form(&pts), 2).map_err(|e| e.to_string())?;
            let cox = toric_pair_fsplit(&ToricAmbient::projective_space(1), &[branch], p).map_err(|e| e.to_string())?;
            let ord = ordinary_pair(&pts[0], &pts[1], &pts[2], &pts[3], p).map_err(|e| e.to_string())?;
            if table.is_yes() != ord || cox.is_yes() != ord {
                return Err(format!("p={p} lambda={lambda}: table {:?}, cox {:?}, ordinary {ord}", table.value, cox.value));
            }
        }
    }
    Ok(())
}

/// No repeated roots, and the roots are exactly the supersingular Legendre parameters.
pub fn hasse_polynomial_is_squarefree(_: &mut TestRunner) -> Result<(), String> {
    for p in primes_in(3, 50) {
        let h = hasse_polynomial(p);
        if h.gcd(&h.derivative()).degree() != Some(0) {
            return Err(format!("repeated root at p = {p}"));
        }
        let roots = (0..p.get()).filter(|&x| h.eval(x) == 0).count();
        let supersingular = (2..p.get())
            .filter(|&l| legendre_coefficient(FpElem::new(l as i64, p)).unwrap().is_zero())
            .count();
        if roots != supersingular {
            return Err(format!("p = {p}: {roots} roots but {supersingular} supersingular parameters"));
        }
        if UniPoly::new(p, vec![0, 1]).gcd(&h).degree() != Some(0) {
            return Err(format!("0 is a root at p = {p}"));
        }
    }
    Ok(())
}
