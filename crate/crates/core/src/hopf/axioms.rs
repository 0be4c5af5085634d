//! Executable forms of the Hopf algebra, pairing and double axioms.

use std::collections::HashMap;
use std::sync::Arc;

use super::coalgebra::{antipode, comultiply, comultiply_leg, counit, counit_monomial};
use super::double::{double_multiply_with, to_double_with};
use super::pairing::{pairing_with, PairingNorm};
use super::TensorElement;
use crate::error::Result;
use crate::pbw::{enumerate_basis, grade, Algebra, AlgebraKind, Element, Letter, Monomial};
use crate::qfield::{Field, Scalar};

/// `(Δ ⊗ id)Δ(a) = (id ⊗ Δ)Δ(a)`.
pub fn coassociative(a: &Element) -> bool {
    let d = comultiply(a);
    comultiply_leg(&d, 0) == comultiply_leg(&d, 1)
}

/// `(ε ⊗ id)Δ(a) = a = (id ⊗ ε)Δ(a)`.
pub fn counit_law(a: &Element) -> bool {
    let d = comultiply(a);
    let one = a.field().one();
    (0..2).all(|i| {
        let t = d.contract_leg(i, |m| counit_monomial(m, &one)).expect("two legs");
        t.into_element().map(|x| &x == a).unwrap_or(false)
    })
}

/// `m(S ⊗ id)Δ(a) = ε(a)1 = m(id ⊗ S)Δ(a)`.
pub fn antipode_law(a: &Element) -> bool {
    let alg = a.algebra();
    let d = comultiply(a);
    let eps = Element::scalar(alg, counit(a));
    (0..2).all(|i| {
        let s = d.map_leg(i, alg, |m| antipode(&Element::monomial(alg, *m)));
        s.multiply_legs().map(|x| x == eps).unwrap_or(false)
    })
}

/// `Δ(ab) = Δ(a)Δ(b)`.
pub fn coproduct_multiplicative(a: &Element, b: &Element) -> bool {
    comultiply(&a.mul(b)) == comultiply(a).mul(&comultiply(b))
}

/// `S(ab) = S(b)S(a)`.
pub fn antipode_antimultiplicative(a: &Element, b: &Element) -> bool {
    antipode(&a.mul(b)) == antipode(b).mul(&antipode(a))
}

/// Outcome of an exhaustive check.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }
}

fn grid(alg: &Arc<Algebra>, max_exp: u32) -> Result<Vec<Monomial>> {
    Ok(enumerate_basis(alg, None)?
        .iter()
        .filter(|m| {
            m.e.iter().chain(m.f.iter()).all(|&x| x <= max_exp) && m.k.iter().all(|&r| r as i64 <= max_exp as i64)
        })
        .collect())
}

type PairTable = HashMap<(Monomial, Monomial), Scalar>;

fn table(norm: PairingNorm, pos: &Arc<Algebra>, neg: &Arc<Algebra>, ps: &[Monomial], ns: &[Monomial]) -> Result<PairTable> {
    let mut t = HashMap::new();
    for a in ps {
        for x in ns {
            let v = pairing_with(norm, &Element::monomial(pos, *a), &Element::monomial(neg, *x))?;
            if !v.is_zero() {
                t.insert((*a, *x), v);
            }
        }
    }
    Ok(t)
}

fn lookup(t: &PairTable, zero: &Scalar, a: &Monomial, x: &Monomial) -> Scalar {
    t.get(&(*a, *x)).cloned().unwrap_or_else(|| zero.clone())
}

fn pair_elem(t: &PairTable, zero: &Scalar, a: &Element, x: &Element) -> Scalar {
    let mut acc = zero.clone();
    for (m, c) in a.terms() {
        for (n, d) in x.terms() {
            let v = lookup(t, zero, m, n);
            if !v.is_zero() {
                acc = acc.add(&c.mul(d).mul(&v));
            }
        }
    }
    acc
}

/// The skew-pairing axioms and degree orthogonality on all monomials of the
/// Borels whose exponents are at most `max_exp`.
pub fn skew_pairing_axioms(norm: PairingNorm, field: &Field, max_exp: u32) -> Result<CheckReport> {
    let pos = Algebra::get(AlgebraKind::SmallGeq0, field)?;
    let neg = Algebra::get(AlgebraKind::SmallLeq0, field)?;
    let ps = grid(&pos, max_exp)?;
    let ns = grid(&neg, max_exp)?;
    // the table covers the whole basis, so products and coproduct legs stay inside it
    let full_p = grid(&pos, u32::MAX)?;
    let full_n = grid(&neg, u32::MAX)?;
    let t = table(norm, &pos, &neg, &full_p, &full_n)?;
    let mut rep = CheckReport::default();
    let one = field.one();
    let zero = field.zero();
    let gp = |m: &Monomial| grade(m, AlgebraKind::SmallGeq0).unwrap();
    let gn = |m: &Monomial| grade(m, AlgebraKind::SmallLeq0).unwrap();

    for a in &ps {
        let v = lookup(&t, &zero, a, &Monomial::one());
        rep.record(v == counit_monomial(a, &one), || format!("φ({a}, 1) != ε({a})"));
        for x in &ns {
            if gp(a) != gn(x) {
                rep.record(!t.contains_key(&(*a, *x)), || format!("φ({a}, {x}) != 0 across degrees"));
            }
        }
    }
    for x in &ns {
        let v = lookup(&t, &zero, &Monomial::one(), x);
        rep.record(v == counit_monomial(x, &one), || format!("φ(1, {x}) != ε({x})"));
    }

    let mut by_grade_n: HashMap<(u32, u32), Vec<Monomial>> = HashMap::new();
    for x in &full_n {
        by_grade_n.entry(gn(x)).or_default().push(*x);
    }
    let mut by_grade_p: HashMap<(u32, u32), Vec<Monomial>> = HashMap::new();
    for a in &full_p {
        by_grade_p.entry(gp(a)).or_default().push(*a);
    }
    let deltas_n: HashMap<Monomial, TensorElement> =
        full_n.iter().map(|x| (*x, comultiply(&Element::monomial(&neg, *x)))).collect();
    let deltas_p: HashMap<Monomial, TensorElement> =
        full_p.iter().map(|a| (*a, comultiply(&Element::monomial(&pos, *a)))).collect();

    // φ(ab, x) = Σ φ(a, x1) φ(b, x2)
    for a in &ps {
        for b in &ps {
            let (ga, gb) = (gp(a), gp(b));
            let Some(xs) = by_grade_n.get(&(ga.0 + gb.0, ga.1 + gb.1)) else { continue };
            let ab = Element::monomial(&pos, *a).mul(&Element::monomial(&pos, *b));
            for x in xs {
                let lhs = pair_elem(&t, &zero, &ab, &Element::monomial(&neg, *x));
                let mut rhs = field.zero();
                for (legs, c) in deltas_n[x].terms() {
                    if gn(&legs[0]) != ga {
                        continue;
                    }
                    let u = lookup(&t, &zero, a, &legs[0]);
                    if u.is_zero() {
                        continue;
                    }
                    let v = lookup(&t, &zero, b, &legs[1]);
                    rhs = rhs.add(&c.mul(&u).mul(&v));
                }
                rep.record(lhs == rhs, || format!("φ({a}·{b}, {x})"));
            }
        }
    }
    // φ(a, xy) = Σ φ(a1, y) φ(a2, x)
    for x in &ns {
        for y in &ns {
            let (gx, gy) = (gn(x), gn(y));
            let Some(as_) = by_grade_p.get(&(gx.0 + gy.0, gx.1 + gy.1)) else { continue };
            let xy = Element::monomial(&neg, *x).mul(&Element::monomial(&neg, *y));
            for a in as_ {
                let lhs = pair_elem(&t, &zero, &Element::monomial(&pos, *a), &xy);
                let mut rhs = field.zero();
                for (legs, c) in deltas_p[a].terms() {
                    if gp(&legs[0]) != gy {
                        continue;
                    }
                    let u = lookup(&t, &zero, &legs[0], y);
                    if u.is_zero() {
                        continue;
                    }
                    let v = lookup(&t, &zero, &legs[1], x);
                    rhs = rhs.add(&c.mul(&u).mul(&v));
                }
                rep.record(lhs == rhs, || format!("φ({a}, {x}·{y})"));
            }
        }
    }
    Ok(rep)
}

/// Generators of the two Borels, embedded as `g ⊗ 1` and `1 ⊗ g`.
pub fn double_generators(field: &Field) -> Result<Vec<TensorElement>> {
    let pos = Algebra::get(AlgebraKind::SmallGeq0, field)?;
    let neg = Algebra::get(AlgebraKind::SmallLeq0, field)?;
    let mut out = Vec::new();
    for g in [Letter::E1, Letter::E12, Letter::E2, Letter::K1, Letter::K2, Letter::K1Inv, Letter::K2Inv] {
        out.push(TensorElement::pure(&[&Element::letter(&pos, g)?, &Element::one(&neg)]));
    }
    for g in [Letter::F1, Letter::F12, Letter::F2, Letter::K1, Letter::K2, Letter::K1Inv, Letter::K2Inv] {
        out.push(TensorElement::pure(&[&Element::one(&pos), &Element::letter(&neg, g)?]));
    }
    Ok(out)
}

/// The double product against the presentation of the double on all generator pairs.
pub fn double_bridge(norm: PairingNorm, field: &Field) -> Result<CheckReport> {
    let gens = double_generators(field)?;
    let mut rep = CheckReport::default();
    for p in &gens {
        for r in &gens {
            let lhs = to_double_with(norm, &double_multiply_with(norm, p, r)?)?;
            let rhs = to_double_with(norm, p)?.mul(&to_double_with(norm, r)?);
            rep.record(lhs == rhs, || format!("({p})({r})"));
        }
    }
    Ok(rep)
}

/// `(pq)r = p(qr)` for the double product.
pub fn double_associative(norm: PairingNorm, p: &TensorElement, q: &TensorElement, r: &TensorElement) -> Result<bool> {
    let left = double_multiply_with(norm, &double_multiply_with(norm, p, q)?, r)?;
    let right = double_multiply_with(norm, p, &double_multiply_with(norm, q, r)?)?;
    Ok(left == right)
}
