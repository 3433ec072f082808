use num_bigint::BigUint;
use proptest::prelude::*;

use plucker_core::chow::{chern_from_segre, segre_from_chern, BaseModel, BundleModel, FlagRing, GradedElement};
use plucker_core::degree::{fiber_degree_hook, oracle_degree, plucker_degree};
use plucker_core::laurent::{vandermonde, LaurentPoly};
use plucker_core::matrix::det;
use plucker_core::pushforward::{factorial_det_sides, phi, phi_eval_monomial, DenominatorVariant};
use plucker_core::ring::{int, Coeff, Rational};
use plucker_core::suite::schur_shift_check;
use plucker_core::symfunc::{antisymmetrize, bialternant, permutation_sign, schur_in_t, syt_count, Partition};

fn poly(d: usize, lo: i32, hi: i32, max_terms: usize) -> impl Strategy<Value = LaurentPoly<Rational>> {
    prop::collection::vec((prop::collection::vec(lo..=hi, d), -6i64..=6), 0..=max_terms)
        .prop_map(move |terms| LaurentPoly::from_terms(d, &int(0), terms.into_iter().map(|(e, c)| (e, int(c)))))
}

fn permutation(d: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..d).collect::<Vec<_>>()).prop_shuffle()
}

fn partition(d: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, d).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// Standard tableaux counted by removing the largest entry from each corner in turn.
fn syt_by_corners(shape: &mut Vec<u32>) -> u64 {
    while shape.last() == Some(&0) {
        shape.pop();
    }
    if shape.is_empty() {
        return 1;
    }
    let mut total = 0;
    for i in 0..shape.len() {
        let is_corner = i + 1 == shape.len() || shape[i + 1] < shape[i];
        if is_corner {
            shape[i] -= 1;
            let mut copy = shape.clone();
            total += syt_by_corners(&mut copy);
            shape[i] += 1;
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in poly(2, -2, 3, 4), b in poly(2, -2, 3, 4), c in poly(2, -2, 3, 4)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(2, 0, 3, 4), b in poly(2, 0, 2, 3)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn det_with_repeated_row_vanishes(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 5), 4), dup in 0usize..4) {
        let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        m.push(m[dup].clone());
        prop_assert!(det(&m).unwrap().is_zero());
    }

    #[test]
    fn det_changes_sign_under_row_swap(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 6), 6)) {
        let m: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let mut swapped = m.clone();
        swapped.swap(0, 5);
        prop_assert_eq!(det(&m).unwrap(), det(&swapped).unwrap().neg());
    }

    #[test]
    fn schur_times_vandermonde_is_bialternant(lambda in (1usize..=3).prop_flat_map(|d| partition(d, 3))) {
        let d = lambda.len();
        let s = schur_in_t(&lambda, d).unwrap();
        prop_assert_eq!(s.mul(&vandermonde(d)), bialternant(&lambda, d).unwrap());
        prop_assert!(s.is_homogeneous() && s.is_polynomial());
    }

    #[test]
    fn antisymmetrizer_is_idempotent_up_to_order(f in poly(3, -1, 3, 4)) {
        let block = [0, 1, 2];
        let once = antisymmetrize(&f, &block).unwrap();
        prop_assert_eq!(antisymmetrize(&once, &block).unwrap(), once.scale(&int(6)));
    }

    #[test]
    fn antisymmetrizer_factorization((r, d, f, g) in (2usize..=4).prop_flat_map(|r| (1..r).prop_flat_map(move |d| {
        (Just(r), Just(d), poly(d, 0, 3, 3), poly(r - d, 0, 3, 3))
    }))) {
        // 𝒜(𝒜'f · 𝒜''g) = d!(r-d)! 𝒜(fg) for f in the first d variables, g in the rest
        let pad = |p: &LaurentPoly<Rational>, offset: usize| {
            LaurentPoly::from_terms(r, &int(0), p.terms().map(|(e, c)| {
                let mut full = vec![0; r];
                full[offset..offset + e.len()].copy_from_slice(e);
                (full, c.clone())
            }))
        };
        let (fp, gp) = (pad(&f, 0), pad(&g, d));
        let first: Vec<usize> = (0..d).collect();
        let rest: Vec<usize> = (d..r).collect();
        let all: Vec<usize> = (0..r).collect();
        let lhs = antisymmetrize(
            &antisymmetrize(&fp, &first).unwrap().mul(&antisymmetrize(&gp, &rest).unwrap()),
            &all,
        ).unwrap();
        let blocks = (1..=d as i64).product::<i64>() * (1..=(r - d) as i64).product::<i64>();
        let rhs = antisymmetrize(&fp.mul(&gp), &all).unwrap().scale(&int(blocks));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_is_antisymmetric(f in poly(3, -2, 5, 5), sigma in permutation(3)) {
        let sign = int(permutation_sign(&sigma) as i64);
        prop_assert_eq!(phi(&f.permute(&sigma)), phi(&f).scale(&sign));
    }

    #[test]
    fn phi_matches_closed_form(k in prop::collection::vec(-3i64..=9, 1..=4)) {
        let exps: Vec<i32> = k.iter().map(|&x| x as i32).collect();
        prop_assert_eq!(phi(&LaurentPoly::monomial(exps, int(1))), phi_eval_monomial(&k));
    }

    #[test]
    fn schur_shift(seed in any::<u64>()) {
        let rep = schur_shift_check(3, seed).unwrap();
        prop_assert!(rep.passed(), "{}", rep);
    }

    #[test]
    fn factorial_determinant(x in prop::collection::vec(0i64..=12, 1..=5)) {
        let (lhs, rhs) = factorial_det_sides(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn flag_reduction_is_idempotent(exps in prop::collection::vec(0u32..=5, 2), h in 0u32..=2) {
        let base = BaseModel::projective(2);
        let e = BundleModel::from_chern_roots(&base, &[1, 0, 2, -1]).unwrap();
        let ring = FlagRing::new(&e, 2).unwrap();
        let a = ring.monomial(&exps).scale_by(&GradedElement::hyperplane_power(&base, h, int(3)));
        prop_assert!(a.is_normal());
        prop_assert_eq!(ring.reduce(a.terms()), a);
    }

    #[test]
    fn segre_chern_round_trip(coeffs in prop::collection::vec(-5i64..=5, 3), r in 1u32..=4) {
        let base = BaseModel::projective(3);
        let mut chern = vec![GradedElement::one(&base)];
        for (i, &c) in coeffs.iter().enumerate().take(r as usize) {
            chern.push(GradedElement::hyperplane_power(&base, i as u32 + 1, int(c)));
        }
        let segre = segre_from_chern(&chern, r, 3).unwrap();
        let back = chern_from_segre(&segre, 3).unwrap();
        for (i, got) in back.iter().enumerate().take(4) {
            let expected = chern.get(i).cloned().unwrap_or_else(|| GradedElement::zero(&base));
            prop_assert_eq!(got, &expected);
        }
    }

    #[test]
    fn degree_depends_only_on_segre_data(roots in prop::collection::vec(0i64..=3, 1..=4), d in 1usize..=4) {
        prop_assume!(d <= roots.len());
        let base = BaseModel::projective(2);
        let split = BundleModel::from_chern_roots(&base, &roots).unwrap();
        let by_segre = BundleModel::from_segre(&base, roots.len() as u32, split.segre_classes().to_vec()).unwrap();
        let a = plucker_degree(&split, d, DenominatorVariant::ProofConsistent).unwrap();
        let b = plucker_degree(&by_segre, d, DenominatorVariant::ProofConsistent).unwrap();
        prop_assert_eq!(&a.degree, &b.degree);
        prop_assert_eq!(&a.degree, &oracle_degree(&split, d).unwrap());
        prop_assert!(a.is_integer() && a.degree >= int(0));
    }
}

#[test]
fn syt_count_matches_corner_recursion() {
    for d in 1..=4 {
        for w in 0..=8 {
            for mu in plucker_core::symfunc::partitions_of(w, d) {
                let mut shape = mu.parts().to_vec();
                assert_eq!(syt_count(&mu), BigUint::from(syt_by_corners(&mut shape)), "{mu}");
            }
        }
    }
}

#[test]
fn point_degree_is_fiber_tableau_count() {
    let point = BaseModel::point();
    for r in 1..=7u32 {
        let e = BundleModel::trivial(&point, r).unwrap();
        for d in 1..=r {
            let deg = plucker_degree(&e, d as usize, DenominatorVariant::ProofConsistent).unwrap();
            let hook = fiber_degree_hook(r, d).unwrap();
            assert_eq!(deg.degree, Rational::from_integer(hook.into()), "r={r} d={d}");
        }
    }
}

#[test]
fn vandermonde_is_a_determinant() {
    for d in 1..=5 {
        let rows: Vec<Vec<LaurentPoly<Rational>>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut e = vec![0; d];
                        e[j] = (d - 1 - i) as i32;
                        LaurentPoly::monomial(e, int(1))
                    })
                    .collect()
            })
            .collect();
        assert_eq!(det(&rows).unwrap(), vandermonde(d));
    }
}

#[test]
fn unnormalized_factorization_overcounts() {
    // r = 3, d = 1: f = t0^2, g = t1; the nested form carries an extra (r-d)! = 2
    let f = LaurentPoly::monomial(vec![2, 0, 0], int(1));
    let g = LaurentPoly::monomial(vec![0, 1, 0], int(1));
    let all = [0, 1, 2];
    let nested = antisymmetrize(
        &antisymmetrize(&f, &[0]).unwrap().mul(&antisymmetrize(&g, &[1, 2]).unwrap()),
        &all,
    )
    .unwrap();
    let flat = antisymmetrize(&f.mul(&g), &all).unwrap();
    assert!(!flat.is_zero());
    assert_ne!(nested, flat);
    assert_eq!(nested, flat.scale(&int(2)));
}
