use std::sync::Arc;
use std::time::Instant;

use hopf_forge::hopf::axioms::{
    antipode_antimultiplicative, antipode_law, coassociative, coproduct_multiplicative, counit_law, double_associative,
    skew_pairing_axioms,
};
use hopf_forge::hopf::{PairingNorm, TensorElement};
use hopf_forge::pbw::{random_element, Algebra, AlgebraKind, Element};
use hopf_forge::qfield::Field;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn alg(kind: AlgebraKind) -> Arc<Algebra> {
    let f = if kind == AlgebraKind::U { Field::generic() } else { Field::root_of_unity(3).unwrap() };
    Algebra::get(kind, &f).unwrap()
}

fn sample(a: &Arc<Algebra>, seed: u64) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Element> =
        a.kind().generators().into_iter().map(|g| Element::letter(a, g).unwrap()).collect();
    out.extend((0..100).map(|_| random_element(a, &mut rng, 3, 3)));
    out
}

#[test]
fn hopf_axioms_on_samples() {
    for kind in AlgebraKind::ALL {
        let a = alg(kind);
        let xs = sample(&a, 11);
        for x in &xs {
            assert!(coassociative(x), "{kind}: coassociativity fails on {x}");
            assert!(counit_law(x), "{kind}: counit law fails on {x}");
            assert!(antipode_law(x), "{kind}: antipode law fails on {x}");
        }
        for pair in xs.chunks(2).filter(|c| c.len() == 2) {
            assert!(coproduct_multiplicative(&pair[0], &pair[1]), "{kind}: Δ({} · {})", pair[0], pair[1]);
            assert!(antipode_antimultiplicative(&pair[0], &pair[1]), "{kind}: S({} · {})", pair[0], pair[1]);
        }
    }
}

#[test]
fn skew_pairing_full_grid_at_three() {
    let r = Field::root_of_unity(3).unwrap();
    let t = Instant::now();
    let rep = skew_pairing_axioms(PairingNorm::Printed, &r, 2).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures);
    assert!(t.elapsed().as_secs() < 120);
}

#[test]
fn double_product_is_associative() {
    let r = Field::root_of_unity(3).unwrap();
    let p = Algebra::get(AlgebraKind::SmallGeq0, &r).unwrap();
    let n = Algebra::get(AlgebraKind::SmallLeq0, &r).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut pick = || {
        let a = random_element(&p, &mut rng, 2, 1);
        let x = random_element(&n, &mut rng, 2, 1);
        TensorElement::pure(&[&a, &x])
    };
    for _ in 0..100 {
        let (a, b, c) = (pick(), pick(), pick());
        assert!(double_associative(PairingNorm::Printed, &a, &b, &c).unwrap(), "({a})({b})({c})");
    }
}
