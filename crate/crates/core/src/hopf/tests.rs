use super::*;
use crate::pbw::{normal_form, Algebra, AlgebraKind, Element, FreeWord, Letter, Monomial};
use crate::qfield::Field;

fn gen(alg: &std::sync::Arc<Algebra>, g: Letter) -> Element {
    Element::letter(alg, g).unwrap()
}

fn word(alg: &std::sync::Arc<Algebra>, ls: &[Letter]) -> Element {
    normal_form(&FreeWord::new(alg.field().one(), ls.to_vec()), alg).unwrap()
}

#[test]
fn coproduct_examples() {
    let g = Field::generic();
    let u = Algebra::get(AlgebraKind::U, &g).unwrap();
    let k1 = gen(&u, Letter::K1);
    assert_eq!(comultiply(&k1), TensorElement::pure(&[&k1, &k1]));
    let one = Element::one(&u);
    assert_eq!(comultiply(&one), TensorElement::pure(&[&one, &one]));

    let e1 = gen(&u, Letter::E1);
    let e1sq = e1.mul(&e1);
    let k1e1 = k1.mul(&e1);
    let expect = TensorElement::pure(&[&k1.mul(&k1), &e1sq])
        .add(&TensorElement::pure(&[&k1e1, &e1]).scale(&g.one().add(&g.q_pow(-2))))
        .add(&TensorElement::pure(&[&e1sq, &one]));
    assert_eq!(comultiply(&e1sq), expect);
}

#[test]
fn counit_examples() {
    let g = Field::generic();
    let u = Algebra::get(AlgebraKind::U, &g).unwrap();
    assert!(counit(&word(&u, &[Letter::K1, Letter::K2])).is_one());
    assert!(counit(&word(&u, &[Letter::E1, Letter::F1])).is_zero());
    let x = Element::scalar(&u, g.int(3)).add(&gen(&u, Letter::E1));
    assert_eq!(counit(&x), g.int(3));
}

#[test]
fn antipode_examples() {
    let g = Field::generic();
    let u = Algebra::get(AlgebraKind::U, &g).unwrap();
    let e1 = gen(&u, Letter::E1);
    assert_eq!(antipode(&e1), word(&u, &[Letter::K1Inv, Letter::E1]).neg());
    assert_eq!(antipode(&gen(&u, Letter::K1)), gen(&u, Letter::K1Inv));
    let ef = word(&u, &[Letter::E1, Letter::F1]);
    assert_eq!(antipode(&ef), word(&u, &[Letter::F1, Letter::E1]));
}

#[test]
fn antipode_law_on_root_vectors() {
    let r = Field::root_of_unity(3).unwrap();
    for kind in [AlgebraKind::Small, AlgebraKind::Double] {
        let a = Algebra::get(kind, &r).unwrap();
        for g in [Letter::E12, Letter::F12, Letter::F1, Letter::Kt2] {
            if !kind.allows(g) {
                continue;
            }
            let x = gen(&a, g);
            let d = comultiply(&x);
            let left = d.map_leg(0, &a, |m| antipode(&Element::monomial(&a, *m))).multiply_legs().unwrap();
            let right = d.map_leg(1, &a, |m| antipode(&Element::monomial(&a, *m))).multiply_legs().unwrap();
            let eps = Element::scalar(&a, counit(&x));
            assert_eq!(left, eps, "{kind} {g}");
            assert_eq!(right, eps, "{kind} {g}");
        }
    }
}

fn borels(l: u32) -> (std::sync::Arc<Algebra>, std::sync::Arc<Algebra>, Field) {
    let r = Field::root_of_unity(l).unwrap();
    (Algebra::get(AlgebraKind::SmallGeq0, &r).unwrap(), Algebra::get(AlgebraKind::SmallLeq0, &r).unwrap(), r)
}

#[test]
fn pairing_examples() {
    let (p, n, r) = borels(3);
    let v = pairing(&gen(&p, Letter::E1), &gen(&n, Letter::F1)).unwrap();
    assert_eq!(v, r.q_pow(2).sub(&r.one()).inv().unwrap());
    assert!(pairing(&gen(&p, Letter::E2), &gen(&n, Letter::F2)).unwrap().is_zero());
    assert_eq!(pairing(&gen(&p, Letter::K1), &gen(&n, Letter::K2)).unwrap(), r.q_pow(-1));
    assert!(pairing(&Element::one(&p), &gen(&n, Letter::K1)).unwrap().is_one());
    assert!(pairing(&gen(&n, Letter::F1), &gen(&p, Letter::E1)).is_err());
}

#[test]
fn pairing_inverse_examples() {
    let (p, n, r) = borels(3);
    assert_eq!(pairing_inverse(&gen(&p, Letter::K1), &gen(&n, Letter::K2)).unwrap(), r.q());
    assert!(pairing_inverse(&Element::one(&p), &Element::one(&n)).unwrap().is_one());
    let c = PairingNorm::Printed.e1f1(&r);
    let e1 = gen(&p, Letter::E1);
    let f1 = gen(&n, Letter::F1);
    assert_eq!(pairing_inverse(&e1, &f1).unwrap(), c.neg());
    // convolution φ * φ^{-1} = ε ⊗ ε on (E1, F1)
    let mut acc = r.zero();
    for (a, ca) in comultiply(&e1).terms() {
        for (x, cx) in comultiply(&f1).terms() {
            let u = pairing(&Element::monomial(&p, a[0]), &Element::monomial(&n, x[0])).unwrap();
            let v = pairing_inverse(&Element::monomial(&p, a[1]), &Element::monomial(&n, x[1])).unwrap();
            acc = acc.add(&ca.mul(cx).mul(&u).mul(&v));
        }
    }
    assert!(acc.is_zero());
}

#[test]
fn pairing_on_root_vector_squares() {
    let (p, n, r) = borels(5);
    // every word in E12 contains E2, which pairs to zero
    assert!(pairing(&gen(&p, Letter::E12), &gen(&n, Letter::F12)).unwrap().is_zero());
    // φ(E1^2, F1^2) = c^2 (1 + q^{-2})
    let c = PairingNorm::Printed.e1f1(&r);
    let v = pairing(&gen(&p, Letter::E1).pow(2), &gen(&n, Letter::F1).pow(2)).unwrap();
    assert_eq!(v, c.mul(&c).mul(&r.one().add(&r.q_pow(-2))));
}

#[test]
fn double_product_examples() {
    let (p, n, r) = borels(3);
    let pair = vec![p.clone(), n.clone()];
    let unit = TensorElement::unit(pair.clone());
    let x = TensorElement::pure(&[&gen(&p, Letter::E12), &gen(&n, Letter::F1)]);
    assert_eq!(double_multiply(&unit, &x).unwrap(), x);
    assert_eq!(double_multiply(&x, &unit).unwrap(), x);
    let e1 = TensorElement::pure(&[&gen(&p, Letter::E1), &Element::one(&n)]);
    let f1 = TensorElement::pure(&[&Element::one(&p), &gen(&n, Letter::F1)]);
    assert_eq!(
        double_multiply(&e1, &f1).unwrap(),
        TensorElement::pure(&[&gen(&p, Letter::E1), &gen(&n, Letter::F1)])
    );
    let d = Algebra::get(AlgebraKind::Double, &r).unwrap();
    for norm in [PairingNorm::Printed, PairingNorm::Balanced] {
        let fe = double_multiply_with(norm, &f1, &e1).unwrap();
        let lhs = to_double_with(norm, &fe).unwrap();
        let rhs = to_double_with(norm, &f1).unwrap().mul(&to_double_with(norm, &e1).unwrap());
        assert_eq!(lhs, rhs, "{norm:?}");
    }
    // the balanced bridge is the literal identification a ⊗ x ↦ ax
    let fe = double_multiply_with(PairingNorm::Balanced, &f1, &e1).unwrap();
    assert_eq!(to_double_with(PairingNorm::Balanced, &fe).unwrap(), word(&d, &[Letter::F1, Letter::E1]));
}

#[test]
fn projection_examples() {
    let r = Field::root_of_unity(3).unwrap();
    let d = Algebra::get(AlgebraKind::Double, &r).unwrap();
    let u = Algebra::get(AlgebraKind::Small, &r).unwrap();
    assert_eq!(project_pi(&gen(&d, Letter::Kt1)).unwrap(), gen(&u, Letter::K1));
    assert!(project_pi(&gen(&d, Letter::K1).sub(&gen(&d, Letter::Kt1))).unwrap().is_zero());
    let ef = word(&d, &[Letter::F1, Letter::E1]);
    assert_eq!(project_pi(&ef).unwrap(), word(&u, &[Letter::F1, Letter::E1]));
}

#[test]
fn pi_z_examples() {
    let r = Field::root_of_unity(3).unwrap();
    let d = Algebra::get(AlgebraKind::Double, &r).unwrap();
    let u = Algebra::get(AlgebraKind::Small, &r).unwrap();
    let triv = CentralParameter::from_exponents(&r, 0, 0).unwrap();
    let x = word(&d, &[Letter::Kt2, Letter::E12, Letter::F1, Letter::Kt1, Letter::K1]);
    assert_eq!(pi_z(&x, &triv).unwrap(), project_pi(&x).unwrap());
    for z in CentralParameter::all(&r).unwrap() {
        let k = word(&d, &[Letter::K1, Letter::Kt1Inv]);
        assert_eq!(pi_z(&k, &z).unwrap(), Element::scalar(&u, z.z1().clone()));
    }
    let z = CentralParameter::from_exponents(&r, 1, 0).unwrap();
    assert_eq!(pi_z(&gen(&d, Letter::E1), &z).unwrap(), gen(&u, Letter::E1).scale(&r.q_pow(2)));
    assert!(CentralParameter::new(&r, r.int(2), r.one()).is_err());
}

#[test]
fn eps_z_examples() {
    let r = Field::root_of_unity(5).unwrap();
    let d = Algebra::get(AlgebraKind::Double, &r).unwrap();
    let triv = eps_z(&CentralParameter::from_exponents(&r, 0, 0).unwrap()).unwrap();
    let x = word(&d, &[Letter::K1, Letter::Kt2]).add(&gen(&d, Letter::E1)).add(&Element::scalar(&d, r.int(2)));
    assert_eq!(triv.eval(&x).unwrap(), counit(&x));
    let z = CentralParameter::from_exponents(&r, 2, 3).unwrap();
    let e = eps_z(&z).unwrap();
    assert!(e.letter(Letter::E1).unwrap().is_zero());
    assert!(e.letter(Letter::F2).unwrap().is_zero());
    assert_eq!(e.letter(Letter::Kt2).unwrap(), z.z2().inv().unwrap());
    assert!(eps_z_relation_failures(&z).unwrap().is_empty());
}

#[test]
fn relations_hold_in_double_and_under_pi_z() {
    let r = Field::root_of_unity(3).unwrap();
    for rel in double_relations(&r).unwrap() {
        assert!(relation_holds_in_double(&rel, &r).unwrap(), "{}", rel.name);
    }
    for z in CentralParameter::all(&r).unwrap() {
        assert!(pi_z_relation_failures(&z).unwrap().is_empty());
    }
}

#[test]
fn tensor_json_round_trip() {
    let r = Field::root_of_unity(3).unwrap();
    let u = Algebra::get(AlgebraKind::Small, &r).unwrap();
    let t = comultiply(&gen(&u, Letter::E12));
    let back = TensorElement::from_json(&t.to_json()).unwrap();
    assert_eq!(back, t);
    let t3 = comultiply_n(&gen(&u, Letter::F12), 3);
    assert_eq!(TensorElement::from_json(&t3.to_json()).unwrap(), t3);
    assert!(t.to_json()["terms"][0].get("left").is_some());
    let m = Monomial::one();
    assert!(t.coeff(&[m, m]).is_zero());
}

#[test]
fn skew_pairing_axioms_small_grid() {
    let r = Field::root_of_unity(3).unwrap();
    let rep = axioms::skew_pairing_axioms(PairingNorm::Printed, &r, 1).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures);
    assert!(rep.checked > 100);
}

#[test]
fn double_bridge_on_generators() {
    let r = Field::root_of_unity(3).unwrap();
    for norm in [PairingNorm::Printed, PairingNorm::Balanced] {
        let rep = axioms::double_bridge(norm, &r).unwrap();
        assert!(rep.passed(), "{norm:?}: {:?}", rep.failures);
    }
}
