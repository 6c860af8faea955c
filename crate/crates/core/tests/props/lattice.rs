use fsplit_core::lattice::{diag_split_toric, enumerate_scaled, fx_polytope, px_polytope};
use fsplit_core::{Fan, Prime};
use proptest::prelude::*;
use proptest::test_runner::TestRunner;

use super::Property;

pub const PROPERTIES: &[(&str, Property)] = &[
    ("scaling up only adds points", scaling_up_only_adds_points),
    ("symmetrized polytope is centrally symmetric", symmetrized_polytope_is_centrally_symmetric),
    ("enumeration matches box scan", enumeration_matches_box_scan),
    ("diagonal verdict survives change of basis", diagonal_verdict_survives_change_of_basis),
    ("diagonal split implies split", diagonal_split_implies_split),
];

fn fan(dim: usize, rays: &[&[i64]]) -> Fan {
    Fan::new(dim, rays.iter().map(|r| r.to_vec()).collect(), true, true).unwrap()
}

fn hirzebruch(a: i64) -> Fan {
    fan(2, &[&[1, 0], &[0, 1], &[-1, a], &[0, -1]])
}

/// Smooth complete fans of dimension at most three, with a bound on `|u_i|` over `P_X`.
fn small_fans() -> Vec<(Fan, i64)> {
    vec![
        (Fan::projective_space(1), 1),
        (Fan::projective_space(2), 2),
        (Fan::product_of_projective_spaces(&[1, 1]), 1),
        (hirzebruch(1), 2),
        (hirzebruch(2), 3),
        (hirzebruch(3), 4),
        (Fan::projective_space(3), 3),
        (Fan::product_of_projective_spaces(&[1, 2]), 2),
        (Fan::product_of_projective_spaces(&[1, 1, 1]), 1),
    ]
}

fn any_fan() -> impl Strategy<Value = (Fan, i64)> {
    prop::sample::select(small_fans())
}

/// Product of elementary integer row operations; always unimodular.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 0..5).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, c, neg) in ops {
            if i != j {
                for k in 0..n {
                    m[i][k] += c * m[j][k];
                }
            }
            if neg {
                m[i].iter_mut().for_each(|x| *x = -*x);
            }
        }
        m
    })
}

/// Points of `k P_X` (or `k F_X`) found by testing every point of a box against the rays.
fn box_scan(f: &Fan, k: i64, radius: i64, symmetric: bool) -> Vec<Vec<i64>> {
    let n = f.dim();
    let mut out = Vec::new();
    let mut cur = vec![-radius; n];
    loop {
        let ok = f.rays().iter().all(|r| {
            let d: i64 = r.iter().zip(&cur).map(|(a, b)| a * b).sum();
            d <= k && (!symmetric || -d <= k)
        });
        if ok {
            out.push(cur.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < radius {
                cur[i] += 1;
                break;
            }
            cur[i] = -radius;
        }
    }
}

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5]).prop_map(|p| Prime::new(p).unwrap())
}

pub fn scaling_up_only_adds_points(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(any_fan(), 0u64..6, any::<bool>()), |((f, _), k, symmetric)| {
        let poly = if symmetric { fx_polytope(&f) } else { px_polytope(&f) };
        let small = enumerate_scaled(&poly, k).unwrap();
        let big = enumerate_scaled(&poly, k + 1).unwrap();
        for u in &small {
            prop_assert!(big.contains(u));
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn symmetrized_polytope_is_centrally_symmetric(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(any_fan(), 0u64..7), |((f, _), k)| {
        let pts = enumerate_scaled(&fx_polytope(&f), k).unwrap();
        for u in &pts {
            let neg: Vec<i64> = u.iter().map(|x| -x).collect();
            prop_assert!(pts.contains(&neg));
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn enumeration_matches_box_scan(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(any_fan(), 0u64..6, any::<bool>()), |((f, reach), k, symmetric)| {
        let radius = reach * k as i64 + 1;
        prop_assume!((2 * radius + 1).pow(f.dim() as u32) <= 100_000);
        let poly = if symmetric { fx_polytope(&f) } else { px_polytope(&f) };
        prop_assert_eq!(enumerate_scaled(&poly, k).unwrap(), box_scan(&f, k as i64, radius, symmetric));
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn diagonal_verdict_survives_change_of_basis(r: &mut TestRunner) -> Result<(), String> {
    let fan_and_matrix = any_fan().prop_flat_map(|(f, _)| {
        let n = f.dim();
        (Just(f), unimodular(n))
    });
    r.run(&(fan_and_matrix, prime()), |((f, a), p)| {
        let g = f.transformed(&a);
        prop_assert_eq!(diag_split_toric(&f, p).unwrap().value, diag_split_toric(&g, p).unwrap().value);
        Ok(())
    })
    .map_err(|e| e.to_string())
}

pub fn diagonal_split_implies_split(r: &mut TestRunner) -> Result<(), String> {
    r.run(&(any_fan(), prime()), |((f, _), p)| {
        if diag_split_toric(&f, p).unwrap().is_yes() {
            let pts = enumerate_scaled(&px_polytope(&f), p.as_u64() - 1).unwrap();
            prop_assert!(pts.contains(&vec![0; f.dim()]));
        }
        Ok(())
    })
    .map_err(|e| e.to_string())
}
