use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::TensorElement;
use crate::pbw::{Algebra, AlgebraKind, Element, Letter, Memo, Monomial};
use crate::qfield::{FieldMode, Scalar};

type Key = (AlgebraKind, FieldMode);

struct Tables {
    delta: Memo<Monomial, TensorElement>,
    antipode: Memo<Monomial, Element>,
}

fn tables(alg: &Algebra) -> Arc<Tables> {
    static ALL: OnceLock<Mutex<HashMap<Key, Arc<Tables>>>> = OnceLock::new();
    let all = ALL.get_or_init(|| Mutex::new(HashMap::new()));
    all.lock()
        .unwrap()
        .entry((alg.kind(), alg.field().mode()))
        .or_insert_with(|| Arc::new(Tables { delta: Memo::new(), antipode: Memo::new() }))
        .clone()
}

fn letter(alg: &Arc<Algebra>, g: Letter) -> Element {
    Element::monomial(alg, g.monomial())
}

/// The grouplike paired with `F_i` in the coproduct: `Kt_i` in the double, `K_i` elsewhere.
fn f_group(alg: &Arc<Algebra>, i: usize) -> (Letter, Letter) {
    match (alg.kind().has_tilde(), i) {
        (true, 0) => (Letter::Kt1, Letter::Kt1Inv),
        (true, _) => (Letter::Kt2, Letter::Kt2Inv),
        (false, 0) => (Letter::K1, Letter::K1Inv),
        (false, _) => (Letter::K2, Letter::K2Inv),
    }
}

fn delta_letter(alg: &Arc<Algebra>, g: Letter) -> TensorElement {
    let pure = |a: Letter, b: Letter| TensorElement::pure(&[&letter(alg, a), &letter(alg, b)]);
    let one = Element::one(alg);
    match g {
        Letter::E1 | Letter::E2 => {
            let k = if g == Letter::E1 { Letter::K1 } else { Letter::K2 };
            pure(k, g).add(&TensorElement::pure(&[&letter(alg, g), &one]))
        }
        Letter::F1 | Letter::F2 => {
            let (_, kinv) = f_group(alg, if g == Letter::F1 { 0 } else { 1 });
            TensorElement::pure(&[&one, &letter(alg, g)]).add(&pure(g, kinv))
        }
        Letter::E12 => {
            let (a, b) = (delta_letter(alg, Letter::E1), delta_letter(alg, Letter::E2));
            a.mul(&b).sub(&b.mul(&a).scale(&alg.field().q_pow(-1)))
        }
        Letter::F12 => {
            let (a, b) = (delta_letter(alg, Letter::F1), delta_letter(alg, Letter::F2));
            b.mul(&a).sub(&a.mul(&b).scale(&alg.field().q()))
        }
        _ => pure(g, g),
    }
}

fn delta_monomial(alg: &Arc<Algebra>, m: &Monomial) -> Arc<TensorElement> {
    tables(alg).delta.get_or(*m, || {
        let mut out = TensorElement::unit(vec![alg.clone(), alg.clone()]);
        for g in m.letters() {
            out = out.mul(&delta_letter(alg, g));
        }
        out
    })
}

/// The coproduct, extended multiplicatively from the generators.
pub fn comultiply(a: &Element) -> TensorElement {
    let alg = a.algebra();
    let mut out = TensorElement::zero(vec![alg.clone(), alg.clone()]);
    for (m, c) in a.terms() {
        out = out.add(&delta_monomial(alg, m).scale(c));
    }
    out
}

/// The counit on a single monomial.
pub fn counit_monomial(m: &Monomial, one: &Scalar) -> Scalar {
    if m.is_group() {
        one.clone()
    } else {
        one.zero_like()
    }
}

pub fn counit(a: &Element) -> Scalar {
    a.terms().iter().filter(|(m, _)| m.is_group()).fold(a.field().zero(), |acc, (_, c)| acc.add(c))
}

fn antipode_letter(alg: &Arc<Algebra>, g: Letter) -> Element {
    let minus = alg.field().int(-1);
    match g {
        Letter::E1 => letter(alg, Letter::K1Inv).mul(&letter(alg, g)).scale(&minus),
        Letter::E2 => letter(alg, Letter::K2Inv).mul(&letter(alg, g)).scale(&minus),
        Letter::F1 | Letter::F2 => {
            let (k, _) = f_group(alg, if g == Letter::F1 { 0 } else { 1 });
            letter(alg, g).mul(&letter(alg, k)).scale(&minus)
        }
        Letter::E12 => {
            let (a, b) = (antipode_letter(alg, Letter::E1), antipode_letter(alg, Letter::E2));
            b.mul(&a).sub(&a.mul(&b).scale(&alg.field().q_pow(-1)))
        }
        Letter::F12 => {
            let (a, b) = (antipode_letter(alg, Letter::F1), antipode_letter(alg, Letter::F2));
            a.mul(&b).sub(&b.mul(&a).scale(&alg.field().q()))
        }
        Letter::K1 => letter(alg, Letter::K1Inv),
        Letter::K1Inv => letter(alg, Letter::K1),
        Letter::K2 => letter(alg, Letter::K2Inv),
        Letter::K2Inv => letter(alg, Letter::K2),
        Letter::Kt1 => letter(alg, Letter::Kt1Inv),
        Letter::Kt1Inv => letter(alg, Letter::Kt1),
        Letter::Kt2 => letter(alg, Letter::Kt2Inv),
        Letter::Kt2Inv => letter(alg, Letter::Kt2),
    }
}

fn antipode_monomial(alg: &Arc<Algebra>, m: &Monomial) -> Arc<Element> {
    tables(alg).antipode.get_or(*m, || {
        let mut out = Element::one(alg);
        for g in m.letters().into_iter().rev() {
            out = out.mul(&antipode_letter(alg, g));
        }
        out
    })
}

/// The antipode, extended anti-multiplicatively from the generators.
pub fn antipode(a: &Element) -> Element {
    let alg = a.algebra();
    let mut out = Element::zero(alg);
    for (m, c) in a.terms() {
        out = out.add(&antipode_monomial(alg, m).scale(c));
    }
    out
}

/// `Δ` applied to a tensor leg, producing two legs in its place.
pub fn comultiply_leg(t: &TensorElement, i: usize) -> TensorElement {
    let alg = t.algebras()[i].clone();
    t.expand_leg(i, &[alg.clone(), alg.clone()], |m| (*delta_monomial(&alg, m)).clone())
}

/// The iterated coproduct `Δ^(n-1)` with `n` legs, splitting the last leg each time.
pub fn comultiply_n(a: &Element, n: usize) -> TensorElement {
    assert!(n >= 1);
    let mut t = TensorElement::pure(&[a]);
    for k in 1..n {
        t = comultiply_leg(&t, k - 1);
    }
    t
}
