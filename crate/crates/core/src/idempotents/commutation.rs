use std::sync::Arc;

use super::e_k1;
use crate::error::{Error, Result};
use crate::pbw::{Algebra, Element, Letter, Monomial};
use crate::qfield::{q_binomial, q_binomial_a, q_factorial, Field, Scalar};

fn require_sl2(alg: &Arc<Algebra>) -> Result<()> {
    for g in [Letter::E1, Letter::F1, Letter::K1] {
        if !alg.kind().allows(g) {
            return Err(Error::IllegalGenerator { generator: g.name().into(), algebra: alg.kind().id().into() });
        }
    }
    Ok(())
}

fn e_pow(alg: &Arc<Algebra>, n: u32) -> Element {
    Element::monomial(alg, Monomial::from_parts([0; 3], [0; 2], [0; 2], [n, 0, 0]))
}

fn f_pow(alg: &Arc<Algebra>, n: u32) -> Element {
    Element::monomial(alg, Monomial::from_parts([n, 0, 0], [0; 2], [0; 2], [0; 3]))
}

/// `[K^{-1}; r] = (q^r K^{-1} - q^{-r} K)/(q - q^{-1})` with `K = K1`.
pub fn k_inverse_bracket(alg: &Arc<Algebra>, r: i64) -> Element {
    let f = alg.field();
    let k = |e: i32| Element::monomial(alg, Monomial::from_parts([0; 3], [e, 0], [0; 2], [0; 3]));
    let d = f.q_minus_q_inv().inv().expect("q - q^-1 is invertible");
    k(-1).scale(&f.q_pow(r)).sub(&k(1).scale(&f.q_pow(-r))).scale(&d)
}

/// The right-hand side of the straightening formula for `F^m E^s` (`E = E1`,
/// `F = F1`, `K = K1`), evaluated by multiplying its factors in order.
pub fn fm_es_expanded(alg: &Arc<Algebra>, m: u32, s: u32) -> Result<Element> {
    require_sl2(alg)?;
    let f = alg.field();
    let (mi, si) = (m as i64, s as i64);
    let mut out = Element::zero(alg);
    for j in 0..=m.min(s) {
        let ji = j as i64;
        let c = q_factorial(f, ji)?.mul(&q_binomial(f, mi, ji)?).mul(&q_binomial(f, si, ji)?);
        if c.is_zero() {
            continue;
        }
        let mut term = e_pow(alg, s - j);
        for r in (ji - mi - si + 1)..=(2 * ji - mi - si) {
            term = term.mul(&k_inverse_bracket(alg, r));
        }
        out = out.add(&term.mul(&f_pow(alg, m - j)).scale(&c));
    }
    Ok(out)
}

/// `F^m E^s` straightened by the engine.
pub fn fm_es_product(alg: &Arc<Algebra>, m: u32, s: u32) -> Result<Element> {
    require_sl2(alg)?;
    Ok(f_pow(alg, m).mul(&e_pow(alg, s)))
}

/// `e_i E^p F^p`.
pub fn diagonal_element(alg: &Arc<Algebra>, i: i64, p: u32) -> Result<Element> {
    require_sl2(alg)?;
    Ok(e_k1(alg, i)?.mul(&e_pow(alg, p)).mul(&f_pow(alg, p)))
}

fn residue(n: i64, l: i64) -> i64 {
    n.rem_euclid(l)
}

/// `a_{m,s,j} = [j]!² [m, j] [s, j] [m+s+i, j]`.
pub fn structure_constant(field: &Field, m: u32, s: u32, j: u32, i: i64) -> Result<Scalar> {
    let l = field.require_root()? as i64;
    let (mi, si, ji) = (m as i64, s as i64, j as i64);
    if ji > mi.min(si) || mi.max(si) >= l {
        return Err(Error::Invalid(format!("need 0 <= j <= min(m, s) and m, s < {l}, got (m, s, j) = ({m}, {s}, {j})")));
    }
    let fac = q_factorial(field, ji)?;
    let third = q_binomial_a(field, &field.one(), mi + si + residue(i, l), ji)?;
    Ok(fac.mul(&fac).mul(&q_binomial(field, mi, ji)?).mul(&q_binomial(field, si, ji)?).mul(&third))
}

/// The right-hand side of the product rule for `e_i E^m F^m · e_i E^s F^s`.
pub fn product_identity_rhs(alg: &Arc<Algebra>, i: i64, m: u32, s: u32) -> Result<Element> {
    let f = alg.field();
    let mut out = Element::zero(alg);
    for j in 0..=m.min(s) {
        let c = structure_constant(f, m, s, j, i)?;
        if !c.is_zero() {
            out = out.add(&diagonal_element(alg, i, m + s - j)?.scale(&c));
        }
    }
    Ok(out)
}
