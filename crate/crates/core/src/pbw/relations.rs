use std::sync::Arc;

use super::{normal_form, Algebra, AlgebraKind, Element, FreeWord, Letter};
use crate::error::{Error, Result};
use crate::qfield::{q_binomial, Field, Scalar};

/// A defining relation, as a signed sum of words equal to zero.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub words: Vec<FreeWord>,
}

impl Relation {
    fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.words.iter().flat_map(|w| w.letters.iter().copied())
    }

    /// The PBW expansion of the left-hand side; zero when the relation holds.
    pub fn evaluate(&self, alg: &Arc<Algebra>) -> Result<Element> {
        let mut acc = Element::zero(alg);
        for w in &self.words {
            acc = acc.add(&normal_form(w, alg)?);
        }
        Ok(acc)
    }
}

fn cartan(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else {
        -1
    }
}

/// The defining relations of an algebra, restricted to its generators.
pub fn defining_relations(kind: AlgebraKind, field: &Field) -> Result<Vec<Relation>> {
    use Letter::*;
    let l = if kind.is_quotient() {
        Some(field.l().ok_or_else(|| Error::AlgebraNeedsRoot(kind.id().into()))? as usize)
    } else {
        None
    };
    let one = field.one();
    let minus = field.int(-1);
    let w = |c: &Scalar, ls: &[Letter]| FreeWord::new(c.clone(), ls.to_vec());
    let mut out = Vec::new();
    let groups = [(K1, K1Inv), (K2, K2Inv), (Kt1, Kt1Inv), (Kt2, Kt2Inv)];
    for (a, ai) in groups {
        out.push(Relation { name: format!("{a}*{ai} = 1"), words: vec![w(&one, &[a, ai]), w(&minus, &[])] });
        out.push(Relation { name: format!("{ai}*{a} = 1"), words: vec![w(&one, &[ai, a]), w(&minus, &[])] });
        if let Some(l) = l {
            out.push(Relation { name: format!("{a}^{l} = 1"), words: vec![w(&one, &vec![a; l]), w(&minus, &[])] });
        }
        for (b, _) in groups {
            if a < b {
                out.push(Relation { name: format!("{a}{b} = {b}{a}"), words: vec![w(&one, &[a, b]), w(&minus, &[b, a])] });
            }
        }
    }
    let es = [E1, E2];
    let fs = [F1, F2];
    for (gi, (k, kinv)) in groups.iter().enumerate() {
        let i = gi % 2;
        for j in 0..2 {
            let a = cartan(i, j);
            out.push(Relation {
                name: format!("{k} {e} {kinv} = q^{a} {e}", e = es[j]),
                words: vec![w(&one, &[*k, es[j], *kinv]), w(&field.q_pow(a).neg(), &[es[j]])],
            });
            out.push(Relation {
                name: format!("{k} {f} {kinv} = q^{} {f}", -a, f = fs[j]),
                words: vec![w(&one, &[*k, fs[j], *kinv]), w(&field.q_pow(-a).neg(), &[fs[j]])],
            });
        }
    }
    let c = field.q_minus_q_inv().inv().ok_or(Error::DivisionByZero)?;
    let g1inv = if kind.has_tilde() { Kt1Inv } else { K1Inv };
    for i in 0..2 {
        for j in 0..2 {
            let mut words = vec![w(&one, &[es[i], fs[j]]), w(&minus, &[fs[j], es[i]])];
            if i == 0 && j == 0 {
                words.push(w(&c.neg(), &[K1]));
                words.push(w(&c, &[g1inv]));
            }
            out.push(Relation { name: format!("[{}, {}]", es[i], fs[j]), words });
        }
    }
    for (x, y) in [(E1, E2), (E2, E1), (F1, F2), (F2, F1)] {
        let mut words = Vec::new();
        for s in 0..=2usize {
            let mut ls = vec![x; 2 - s];
            ls.push(y);
            ls.extend(std::iter::repeat_n(x, s));
            let sign = if s % 2 == 0 { one.clone() } else { minus.clone() };
            words.push(w(&sign.mul(&q_binomial(field, 2, s as i64)?), &ls));
        }
        out.push(Relation { name: format!("Serre {x}{y}"), words });
    }
    if let Some(l) = l {
        for g in [E1, E12, E2, F1, F12, F2] {
            out.push(Relation { name: format!("{g}^{l} = 0"), words: vec![w(&one, &vec![g; l])] });
        }
    }
    out.retain(|r| r.letters().all(|g| kind.allows(g)));
    Ok(out)
}

/// Names of the defining relations that fail in the algebra's own multiplication.
pub fn relation_failures(alg: &Arc<Algebra>) -> Result<Vec<String>> {
    let mut failed = Vec::new();
    for rel in defining_relations(alg.kind(), alg.field())? {
        if !rel.evaluate(alg)?.is_zero() {
            failed.push(rel.name);
        }
    }
    Ok(failed)
}
