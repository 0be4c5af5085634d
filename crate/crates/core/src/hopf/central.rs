use std::sync::Arc;

use crate::error::{Error, Result};
use crate::pbw::{defining_relations, Algebra, AlgebraKind, Element, Letter, Monomial, Relation};
use crate::qfield::{zeta_sqrt, Field, Scalar};

/// A pair `(z1, z2)` of `l`-th roots of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralParameter {
    z: [Scalar; 2],
}

impl CentralParameter {
    pub fn new(field: &Field, z1: Scalar, z2: Scalar) -> Result<CentralParameter> {
        let l = field.require_root()?;
        for z in [&z1, &z2] {
            field.check(z)?;
            if !z.pow(l as i64)?.is_one() {
                return Err(Error::NotRootOfUnity);
            }
        }
        Ok(CentralParameter { z: [z1, z2] })
    }

    /// `(ζ^a, ζ^b)`.
    pub fn from_exponents(field: &Field, a: i64, b: i64) -> Result<CentralParameter> {
        field.require_root()?;
        CentralParameter::new(field, field.q_pow(a), field.q_pow(b))
    }

    /// The `l^2` parameters of the field.
    pub fn all(field: &Field) -> Result<Vec<CentralParameter>> {
        let l = field.require_root()? as i64;
        let mut out = Vec::new();
        for a in 0..l {
            for b in 0..l {
                out.push(CentralParameter::from_exponents(field, a, b)?);
            }
        }
        Ok(out)
    }

    pub fn z1(&self) -> &Scalar {
        &self.z[0]
    }

    pub fn z2(&self) -> &Scalar {
        &self.z[1]
    }

    fn field(&self) -> Field {
        Field::of(&self.z[0])
    }

    fn half(&self) -> Result<Scalar> {
        zeta_sqrt(&self.field(), &self.z[0])
    }
}

fn require_double(d: &Element) -> Result<()> {
    if d.kind() != AlgebraKind::Double {
        return Err(Error::AlgebraMismatch(AlgebraKind::Double.id().into(), d.kind().id().into()));
    }
    Ok(())
}

fn collapse(m: &Monomial) -> Monomial {
    Monomial { f: m.f, k: [m.k[0] + m.kt[0], m.k[1] + m.kt[1]], kt: [0, 0], e: m.e }
}

/// The quotient map of the double onto the small quantum group, `Kt_i ↦ K_i`.
pub fn project_pi(d: &Element) -> Result<Element> {
    require_double(d)?;
    let u = Algebra::get(AlgebraKind::Small, d.field())?;
    Ok(Element::from_terms(&u, d.terms().iter().map(|(m, c)| (collapse(m), c.clone()))))
}

/// The twisted quotient map `π_z` of the double onto the small quantum group.
pub fn pi_z(d: &Element, z: &CentralParameter) -> Result<Element> {
    require_double(d)?;
    d.field().require_odd()?;
    d.field().check(z.z1())?;
    let u = Algebra::get(AlgebraKind::Small, d.field())?;
    let h = z.half()?;
    let z2inv = z.z2().inv().ok_or(Error::DivisionByZero)?;
    let mut terms = Vec::new();
    for (m, c) in d.terms() {
        let eh = m.e[0] as i64 + m.e[1] as i64 + m.k[0] as i64 - m.kt[0] as i64;
        let s = h.pow(eh)?.mul(&z2inv.pow(m.kt[1] as i64)?);
        terms.push((collapse(m), c.mul(&s)));
    }
    Ok(Element::from_terms(&u, terms))
}

/// The image of a single letter of the double under `π_z`.
fn pi_z_letter(d: &Arc<Algebra>, g: Letter, z: &CentralParameter) -> Result<Element> {
    pi_z(&Element::monomial(d, g.monomial()), z)
}

/// The one-dimensional representation `ε_z` of the double.
#[derive(Clone, Debug)]
pub struct EpsZ {
    half: Scalar,
    z2: Scalar,
}

pub fn eps_z(z: &CentralParameter) -> Result<EpsZ> {
    z.field().require_odd()?;
    Ok(EpsZ { half: z.half()?, z2: z.z2().clone() })
}

impl EpsZ {
    /// The value on a monomial of the double.
    pub fn monomial(&self, m: &Monomial) -> Result<Scalar> {
        if !m.is_group() {
            return Ok(self.half.zero_like());
        }
        let h = self.half.pow(m.k[0] as i64 - m.kt[0] as i64)?;
        Ok(h.mul(&self.z2.pow(-(m.kt[1] as i64))?))
    }

    pub fn letter(&self, g: Letter) -> Result<Scalar> {
        self.monomial(&g.monomial())
    }

    pub fn eval(&self, d: &Element) -> Result<Scalar> {
        require_double(d)?;
        let mut acc = d.field().zero();
        for (m, c) in d.terms() {
            acc = acc.add(&c.mul(&self.monomial(m)?));
        }
        Ok(acc)
    }
}

/// The defining relations of the double at a root of unity.
pub fn double_relations(field: &Field) -> Result<Vec<Relation>> {
    field.require_root()?;
    defining_relations(AlgebraKind::Double, field)
}

/// Names of the relations whose `π_z` image is nonzero in the small quantum group.
pub fn pi_z_relation_failures(z: &CentralParameter) -> Result<Vec<String>> {
    let field = z.field();
    let u = Algebra::get(AlgebraKind::Small, &field)?;
    let d = Algebra::get(AlgebraKind::Double, &field)?;
    let mut failed = Vec::new();
    for rel in double_relations(&field)? {
        let mut acc = Element::zero(&u);
        for word in &rel.words {
            let mut x = Element::scalar(&u, word.coeff.clone());
            for g in &word.letters {
                x = x.mul(&pi_z_letter(&d, *g, z)?);
            }
            acc = acc.add(&x);
        }
        if !acc.is_zero() {
            failed.push(rel.name);
        }
    }
    Ok(failed)
}

/// Names of the relations on which `ε_z` is inconsistent.
pub fn eps_z_relation_failures(z: &CentralParameter) -> Result<Vec<String>> {
    let field = z.field();
    let eps = eps_z(z)?;
    let mut failed = Vec::new();
    for rel in double_relations(&field)? {
        let mut acc = field.zero();
        for word in &rel.words {
            let mut v = word.coeff.clone();
            for g in &word.letters {
                v = v.mul(&eps.letter(*g)?);
            }
            acc = acc.add(&v);
        }
        if !acc.is_zero() {
            failed.push(rel.name);
        }
    }
    Ok(failed)
}

/// Whether a relation holds in the double's own multiplication.
pub fn relation_holds_in_double(rel: &Relation, field: &Field) -> Result<bool> {
    let d = Algebra::get(AlgebraKind::Double, field)?;
    Ok(rel.evaluate(&d)?.is_zero())
}
