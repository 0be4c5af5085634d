use std::sync::Arc;

use hopf_forge::pbw::{grade, random_element, random_monomial, Algebra, AlgebraKind, Element, Letter};
use hopf_forge::qfield::Field;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn alg(kind: AlgebraKind) -> Arc<Algebra> {
    let f = if kind == AlgebraKind::U { Field::generic() } else { Field::root_of_unity(3).unwrap() };
    Algebra::get(kind, &f).unwrap()
}

fn kinds() -> impl Strategy<Value = AlgebraKind> {
    prop::sample::select(AlgebraKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative(kind in kinds(), seed in any::<u64>()) {
        let a = alg(kind);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_element(&a, &mut rng, 3, 2);
        let y = random_element(&a, &mut rng, 3, 2);
        let z = random_element(&a, &mut rng, 3, 2);
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn monomials_are_fixed_points(kind in kinds(), seed in any::<u64>()) {
        let a = alg(kind);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_monomial(&a, &mut rng, 4);
        let x = Element::monomial(&a, m);
        prop_assert_eq!(x.len(), 1);
        prop_assert_eq!(x.mul(&Element::one(&a)), x.clone());
        prop_assert_eq!(Element::one(&a).mul(&x), x);
    }

    #[test]
    fn grades_add(seed in any::<u64>(), neg in any::<bool>()) {
        let kind = if neg { AlgebraKind::SmallLeq0 } else { AlgebraKind::SmallGeq0 };
        let a = alg(kind);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, n) = (random_monomial(&a, &mut rng, 3), random_monomial(&a, &mut rng, 3));
        let (gm, gn) = (grade(&m, kind).unwrap(), grade(&n, kind).unwrap());
        for p in Element::monomial(&a, m).mul(&Element::monomial(&a, n)).terms().keys() {
            prop_assert_eq!(grade(p, kind).unwrap(), (gm.0 + gn.0, gm.1 + gn.1));
        }
    }

    #[test]
    fn double_maps_onto_small(seed in any::<u64>()) {
        let d = alg(AlgebraKind::Double);
        let u = alg(AlgebraKind::Small);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_element(&d, &mut rng, 2, 2);
        let y = random_element(&d, &mut rng, 2, 2);
        let pi = |e: &Element| hopf_forge::hopf::project_pi(e).unwrap();
        prop_assert_eq!(pi(&x.mul(&y)), pi(&x).mul(&pi(&y)));
        prop_assert_eq!(pi(&x).algebra().kind(), u.kind());
    }
}

#[test]
fn derived_relations_hold() {
    let g = Field::generic();
    let u = Algebra::get(AlgebraKind::U, &g).unwrap();
    let l = |x| Element::letter(&u, x).unwrap();
    let (e1, e2, e12) = (l(Letter::E1), l(Letter::E2), l(Letter::E12));
    let (f1, f2, f12) = (l(Letter::F1), l(Letter::F2), l(Letter::F12));
    assert_eq!(e1.mul(&e2).sub(&e2.mul(&e1).scale(&g.q_pow(-1))), e12);
    assert_eq!(f2.mul(&f1).sub(&f1.mul(&f2).scale(&g.q())), f12);
    assert_eq!(e2.mul(&e12), e12.mul(&e2).scale(&g.q_pow(-1)));
    assert_eq!(e12.mul(&e1), e1.mul(&e12).scale(&g.q_pow(-1)));
    assert_eq!(f2.mul(&f12), f12.mul(&f2).scale(&g.q_pow(-1)));
    assert_eq!(f12.mul(&f1), f1.mul(&f12).scale(&g.q_pow(-1)));
    assert_eq!(e2.mul(&f1), f1.mul(&e2));
    assert_eq!(e2.mul(&f2), f2.mul(&e2));
}
