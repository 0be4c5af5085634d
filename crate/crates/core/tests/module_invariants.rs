use hopf_forge::hopf::CentralParameter;
use hopf_forge::modules::*;
use hopf_forge::pbw::Letter;
use hopf_forge::qfield::{Field, Scalar};
use proptest::prelude::*;

fn samples(g: &Field) -> Vec<Character> {
    let mut out = Vec::new();
    for a in 0..=3 {
        for b in 0..=3 {
            out.push(weight_character(g, a, b));
        }
    }
    out.push(Character::new(g.int(2), g.int(3)).unwrap());
    out.push(Character::new(g.int(3).mul(&g.q()), g.int(2)).unwrap());
    out
}

#[test]
fn vn_are_highest_weight() {
    let g = Field::generic();
    for lam in samples(&g) {
        for n in 0..=6 {
            let v = hw_vector_vn(&lam, n).unwrap();
            for e in [Letter::E1, Letter::E2] {
                assert!(verma_act(e, &v).unwrap().is_zero(), "{e} v_{n} for λ = {lam}");
            }
        }
    }
}

#[test]
fn weight_space_dimensions() {
    let g = Field::generic();
    let lam = Character::new(g.int(2), g.int(3).mul(&g.q())).unwrap();
    for i in 0..=4 {
        for j in 0..=4 {
            let (rank, count) = weight_space_rank(&lam, i, j).unwrap();
            assert_eq!((rank, count), ((i.min(j) + 1) as usize, (i.min(j) + 1) as usize), "({i}, {j})");
        }
    }
}

#[test]
fn clebsch_gordan_all_small() {
    let g = Field::generic();
    let (l2, m2) = (g.int(2), g.int(5).mul(&g.q_pow(-1)));
    for m in 0..=3 {
        for n in 0..=3 {
            for e1 in [1, -1] {
                for e2 in [1, -1] {
                    let lam = Character::new(g.int(e1).mul(&g.q_pow(m)), l2.clone()).unwrap();
                    let mu = Character::new(g.int(e2).mul(&g.q_pow(n)), m2.clone()).unwrap();
                    let rep = clebsch_gordan(&lam, &mu).unwrap();
                    assert!(rep.verified(), "m={m} n={n} ε=({e1},{e2}): {rep:?}");
                    assert_eq!(rep.factors.len() as i64, m.min(n) + 1);
                }
            }
        }
    }
}

#[test]
fn small_simples_have_one_highest_weight_line() {
    for l in [3, 5] {
        let r = Field::root_of_unity(l).unwrap();
        for m1 in 0..l as i64 {
            for m2 in 0..l as i64 {
                let v = build_v_u(m1, m2, &r).unwrap();
                assert!(module_axiom_check(&v).unwrap().is_empty());
                let hw = find_hw_vectors(&v).unwrap();
                assert_eq!(hw.len(), 1);
                assert_eq!(hw[0].vectors.len(), 1);
                assert_eq!(hw[0].weight, Character::new(r.q_pow(m1), r.q_pow(m2)).unwrap());
            }
        }
    }
}

#[test]
fn verma_modules_of_the_small_group() {
    let r = Field::root_of_unity(3).unwrap();
    for (m1, m2) in [(0, 0), (1, 2), (2, 1)] {
        let m = build_verma_u(m1, m2, &r).unwrap();
        assert_eq!(m.dim(), 27);
        assert!(module_axiom_check(&m).unwrap().is_empty());
        let v: Vec<Scalar> = (0..27).map(|i| if i == 0 { r.one() } else { r.zero() }).collect();
        assert_eq!(generated_submodule(&m, &[v]).unwrap().len(), 27);
    }
}

#[test]
fn filtration_strata() {
    let g = Field::generic();
    let lam = Character::new(g.int(2), g.int(3)).unwrap();
    for t2 in 0..=2 {
        for t3 in 0..=2 {
            let r = check_filtration_component(&lam, t2, t3, 3).unwrap();
            assert!(r.passed(), "({t2}, {t3}): {:?}", r.failures);
            assert_eq!(r.lambda_prime, lam.shift(t3 as i64 - t2 as i64, -(t2 as i64) - 2 * t3 as i64));
        }
    }
}

#[test]
fn distinct_characters_have_no_window_intertwiners() {
    let g = Field::generic();
    let base = samples(&g);
    for lam in base.iter().skip(14) {
        for mu in &base {
            let d = intertwiner_dimension(lam, mu, 4).unwrap();
            if lam == mu {
                assert!(d >= 1);
            } else {
                assert_eq!(d, 0, "λ = {lam}, μ = {mu}");
                assert_ne!(lam.values(), mu.values());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn twisting_matches_pullback(a in 0i64..5, b in 0i64..5, m1 in 0i64..5, m2 in 0i64..5) {
        let r = Field::root_of_unity(5).unwrap();
        let v = build_v_u(m1, m2, &r).unwrap();
        let z = CentralParameter::from_exponents(&r, a, b).unwrap();
        let mz = pullback_z(&v, &z).unwrap();
        prop_assert!(module_axiom_check(&mz).unwrap().is_empty());
        prop_assert!(twist_check(&v, &z).unwrap());
    }

    #[test]
    fn tensor_of_simples_is_a_module(m in 0i64..3, n in 0i64..3, a in 0i64..3, b in 0i64..3) {
        let r = Field::root_of_unity(3).unwrap();
        let t = tensor(&build_v_u(m, a, &r).unwrap(), &build_v_u(n, b, &r).unwrap()).unwrap();
        prop_assert_eq!(t.dim() as i64, (m + 1) * (n + 1));
        prop_assert!(module_axiom_check(&t).unwrap().is_empty());
        prop_assert!(!find_hw_vectors(&t).unwrap().is_empty());
    }

    #[test]
    fn json_round_trip(m in 0i64..4, e in prop::bool::ANY, c in 1i64..6) {
        let g = Field::generic();
        let s = if e { 1 } else { -1 };
        let l = build_l(&Character::new(g.int(s).mul(&g.q_pow(m)), g.int(c)).unwrap()).unwrap();
        prop_assert_eq!(MatrixModule::from_json(&l.to_json()).unwrap(), l);
    }
}
