use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::coalgebra::{antipode, comultiply_n};
use super::pairing::{pairing_with, PairingNorm};
use super::TensorElement;
use crate::error::{Error, Result};
use crate::pbw::{Algebra, AlgebraKind, Element, Memo, Monomial};
use crate::qfield::FieldMode;

type MiddleMemo = Memo<(Monomial, Monomial), TensorElement>;

fn middle_table(norm: PairingNorm, mode: FieldMode) -> Arc<MiddleMemo> {
    static ALL: OnceLock<Mutex<HashMap<(PairingNorm, FieldMode), Arc<MiddleMemo>>>> = OnceLock::new();
    let all = ALL.get_or_init(|| Mutex::new(HashMap::new()));
    all.lock().unwrap().entry((norm, mode)).or_insert_with(|| Arc::new(Memo::new())).clone()
}

fn borels(p: &TensorElement) -> Result<()> {
    let kinds = p.kinds();
    if kinds != [AlgebraKind::SmallGeq0, AlgebraKind::SmallLeq0] {
        return Err(Error::AlgebraMismatch("uGeq0 ⊗ uLeq0".into(), format!("{kinds:?}")));
    }
    p.field().require_root()?;
    Ok(())
}

/// `(1 ⊗ x)(b ⊗ 1) = Σ φ(b1, x1) b2 ⊗ x2 φ^{-1}(b3, x3)` for monomials `b`, `x`.
fn middle(norm: PairingNorm, geq: &Arc<Algebra>, leq: &Arc<Algebra>, b: &Monomial, x: &Monomial) -> Arc<TensorElement> {
    middle_table(norm, geq.field().mode()).get_or((*b, *x), || {
        let db = comultiply_n(&Element::monomial(geq, *b), 3);
        let dx = comultiply_n(&Element::monomial(leq, *x), 3);
        let mut terms = Vec::new();
        for (bs, cb) in db.terms() {
            for (xs, cx) in dx.terms() {
                let left = pairing_with(norm, &Element::monomial(geq, bs[0]), &Element::monomial(leq, xs[0])).unwrap();
                if left.is_zero() {
                    continue;
                }
                let s3 = antipode(&Element::monomial(geq, bs[2]));
                let right = pairing_with(norm, &s3, &Element::monomial(leq, xs[2])).unwrap();
                if right.is_zero() {
                    continue;
                }
                terms.push((vec![bs[1], xs[1]], cb.mul(cx).mul(&left).mul(&right)));
            }
        }
        TensorElement::from_terms(vec![geq.clone(), leq.clone()], terms)
    })
}

/// The double crossproduct multiplication on `uGeq0 ⊗ uLeq0`.
pub fn double_multiply_with(norm: PairingNorm, p: &TensorElement, r: &TensorElement) -> Result<TensorElement> {
    borels(p)?;
    borels(r)?;
    if p.field() != r.field() {
        return Err(Error::ModeMismatch);
    }
    let geq = p.algebras()[0].clone();
    let leq = p.algebras()[1].clone();
    let pair = vec![geq.clone(), leq.clone()];
    let mut out = TensorElement::zero(pair.clone());
    for (ax, c) in p.terms() {
        let left = TensorElement::from_terms(pair.clone(), vec![(vec![ax[0], Monomial::one()], c.clone())]);
        for (by, d) in r.terms() {
            let right = TensorElement::from_terms(pair.clone(), vec![(vec![Monomial::one(), by[1]], d.clone())]);
            let mid = middle(norm, &geq, &leq, &by[0], &ax[1]);
            out = out.add(&left.mul(&mid).mul(&right));
        }
    }
    Ok(out)
}

pub fn double_multiply(p: &TensorElement, r: &TensorElement) -> Result<TensorElement> {
    double_multiply_with(PairingNorm::Printed, p, r)
}

/// The map `a ⊗ x ↦ a·θ(x)` into the presentation of the double, where the
/// grouplikes of `uLeq0` become `Kt1, Kt2` and `θ(F1) = (q - q^{-1})φ(E1,F1)·F1`.
pub fn to_double_with(norm: PairingNorm, p: &TensorElement) -> Result<Element> {
    borels(p)?;
    let field = p.field();
    let d = Algebra::get(AlgebraKind::Double, field)?;
    let lambda = field.q_minus_q_inv().mul(&norm.e1f1(field));
    let mut out = Element::zero(&d);
    for (ax, c) in p.terms() {
        let (a, x) = (ax[0], ax[1]);
        let scale = lambda.pow((x.f[0] + x.f[1]) as i64)?;
        let lifted = Monomial { f: x.f, k: [0, 0], kt: x.k, e: [0; 3] };
        let left = Element::monomial(&d, Monomial { k: a.k, e: a.e, ..Monomial::one() });
        out = out.add(&left.mul(&Element::monomial(&d, lifted)).scale(&c.mul(&scale)));
    }
    Ok(out)
}

pub fn to_double(p: &TensorElement) -> Result<Element> {
    to_double_with(PairingNorm::Printed, p)
}
