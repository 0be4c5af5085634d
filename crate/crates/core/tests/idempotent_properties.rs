use hopf_forge::idempotents::*;
use hopf_forge::pbw::{Algebra, AlgebraKind, Element};
use hopf_forge::qfield::Field;
use proptest::prelude::*;

#[test]
fn commutation_formula_generic_and_root() {
    let g = Field::generic();
    let u = Algebra::get(AlgebraKind::U, &g).unwrap();
    for m in 0..=4 {
        for s in 0..=4 {
            assert_eq!(fm_es_expanded(&u, m, s).unwrap(), fm_es_product(&u, m, s).unwrap(), "m={m} s={s}");
        }
    }
    let r = Field::root_of_unity(3).unwrap();
    for kind in [AlgebraKind::Small1, AlgebraKind::Small] {
        let a = Algebra::get(kind, &r).unwrap();
        for m in 0..=2 {
            for s in 0..=2 {
                assert_eq!(fm_es_expanded(&a, m, s).unwrap(), fm_es_product(&a, m, s).unwrap(), "{kind} m={m} s={s}");
            }
        }
    }
}

#[test]
fn product_rule_l5() {
    let f = Field::root_of_unity(5).unwrap();
    let u1 = Algebra::get(AlgebraKind::Small1, &f).unwrap();
    for i in 0..5 {
        for m in 0..5 {
            for s in 0..5 {
                let lhs = diagonal_element(&u1, i, m).unwrap().mul(&diagonal_element(&u1, i, s).unwrap());
                assert_eq!(lhs, product_identity_rhs(&u1, i, m, s).unwrap(), "i={i} m={m} s={s}");
            }
        }
    }
}

#[test]
fn group_idempotents_l5() {
    let f = Field::root_of_unity(5).unwrap();
    let es = group_idempotents(&f).unwrap();
    let u = es[0].1.algebra().clone();
    let mut total = Element::zero(&u);
    for (a, (_, x)) in es.iter().enumerate() {
        total = total.add(x);
        for (b, (_, y)) in es.iter().enumerate().skip(a) {
            let p = x.mul(y);
            if a == b {
                assert_eq!(&p, x);
            } else {
                assert!(p.is_zero());
            }
        }
    }
    assert_eq!(total, Element::one(&u));
}

#[test]
fn solver_output_is_closed_and_idempotent_in_u() {
    for l in [3u32, 5, 7] {
        let f = Field::root_of_unity(l).unwrap();
        let u = Algebra::get(AlgebraKind::Small, &f).unwrap();
        for i in 0..l as i64 {
            let out = solve_idempotents_capped(i, &f, DEFAULT_MAX_L).unwrap();
            assert_eq!(out.discarded, 0);
            let sys = build_system(i, &f).unwrap();
            let coeffs: Vec<_> = out.solutions.iter().map(|s| s.coeffs.clone()).collect();
            let mut trivial = vec![f.zero(); l as usize];
            assert!(coeffs.contains(&trivial));
            trivial[0] = f.one();
            assert!(coeffs.contains(&trivial));
            for s in &out.solutions {
                assert!(sys.is_solution(&s.coeffs).unwrap());
                assert!(coeffs.contains(&s.flip().unwrap().coeffs));
                let x = s.element.transport(&u).unwrap();
                assert_eq!(x.mul(&x), x);
            }
        }
    }
}

#[test]
fn decomposition_l5() {
    let d = decompose_regular_u1(&Field::root_of_unity(5).unwrap()).unwrap();
    assert!(d.verified(), "unsplit {:?}, heads {:?}", d.unsplit, d.head_counts());
    assert_eq!(d.summands.len(), 15);
    assert_eq!(d.total_dim(), 125);
}

#[test]
fn congruences_exhaustive() {
    for l in [5u32, 7, 11] {
        for m1 in 0..l as i64 {
            for m2 in 0..l as i64 {
                let s = congruence_solve(m1, m2, l).unwrap();
                assert!(s.verify());
                assert_eq!(s.image(), (m1, m2));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn structure_constant_rules(li in 0usize..3, m in 0u32..7, s in 0u32..7, j in 0u32..7, i in -10i64..10) {
        let l = [3u32, 5, 7][li];
        prop_assume!(m < l && s < l && j <= m.min(s));
        let f = Field::root_of_unity(l).unwrap();
        let c = structure_constant(&f, m, s, j, i).unwrap();
        prop_assert_eq!(&c, &structure_constant(&f, s, m, j, i).unwrap());
        prop_assert_eq!(c.is_zero(), (m as i64 + s as i64 + i).rem_euclid(l as i64) < j as i64);
    }

    #[test]
    fn congruence_targets(li in 0usize..4, m1 in -50i64..50, m2 in -50i64..50) {
        let l = [4u32, 5, 7, 13][li];
        prop_assert!(congruence_solve(m1, m2, l).unwrap().verify());
    }
}
