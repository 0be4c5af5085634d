use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use super::engine::Acc;
use super::{Algebra, AlgebraKind, Letter, Monomial};
use crate::error::{Error, Result};
use crate::qfield::{Field, FieldMode, Scalar};

/// A finite scalar-weighted sum of PBW monomials.
#[derive(Clone)]
pub struct Element {
    alg: Arc<Algebra>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, o: &Self) -> bool {
        self.alg.kind() == o.alg.kind() && self.field().mode() == o.field().mode() && self.terms == o.terms
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]({})", self.alg.kind(), self)
    }
}

impl Element {
    pub fn zero(alg: &Arc<Algebra>) -> Element {
        Element { alg: alg.clone(), terms: BTreeMap::new() }
    }

    pub fn one(alg: &Arc<Algebra>) -> Element {
        Element::monomial(alg, Monomial::one())
    }

    pub fn scalar(alg: &Arc<Algebra>, c: Scalar) -> Element {
        Element::from_terms(alg, vec![(Monomial::one(), c)])
    }

    /// The image of a (possibly unreduced) monomial.
    pub fn monomial(alg: &Arc<Algebra>, m: Monomial) -> Element {
        Element::from_terms(alg, vec![(m, alg.field().one())])
    }

    pub fn letter(alg: &Arc<Algebra>, g: Letter) -> Result<Element> {
        if !alg.kind().allows(g) {
            return Err(Error::IllegalGenerator { generator: g.name().into(), algebra: alg.kind().id().into() });
        }
        Ok(Element::monomial(alg, g.monomial()))
    }

    /// Sums the terms after projecting each monomial into the algebra.
    pub fn from_terms(alg: &Arc<Algebra>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Element {
        let mut acc = Acc::new();
        for (m, c) in terms {
            if let Some(p) = alg.project(&m) {
                acc.add(p, c);
            }
        }
        Element { alg: alg.clone(), terms: acc.into_sorted().into_iter().collect() }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn kind(&self) -> AlgebraKind {
        self.alg.kind()
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field().zero())
    }

    fn same_algebra(&self, o: &Element) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &o.alg) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(
                format!("{}[{}]", self.kind(), self.field().mode()),
                format!("{}[{}]", o.kind(), o.field().mode()),
            ))
        }
    }

    pub fn try_add(&self, o: &Element) -> Result<Element> {
        self.same_algebra(o)?;
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            let v = match terms.get(m) {
                Some(v) => v.add(c),
                None => c.clone(),
            };
            if v.is_zero() {
                terms.remove(m);
            } else {
                terms.insert(*m, v);
            }
        }
        Ok(Element { alg: self.alg.clone(), terms })
    }

    pub fn add(&self, o: &Element) -> Element {
        self.try_add(o).expect("element algebra mismatch")
    }

    pub fn neg(&self) -> Element {
        Element { alg: self.alg.clone(), terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn sub(&self, o: &Element) -> Element {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        if s.is_zero() {
            return Element::zero(&self.alg);
        }
        Element { alg: self.alg.clone(), terms: self.terms.iter().map(|(m, c)| (*m, c.mul(s))).collect() }
    }

    pub fn try_mul(&self, o: &Element) -> Result<Element> {
        self.same_algebra(o)?;
        let mut acc = Acc::new();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                let cd = c.mul(d);
                for (m, e) in self.alg.mul_mono(a, b).iter() {
                    acc.add(*m, cd.mul(e));
                }
            }
        }
        Ok(Element { alg: self.alg.clone(), terms: acc.into_sorted().into_iter().collect() })
    }

    pub fn mul(&self, o: &Element) -> Element {
        self.try_mul(o).expect("element algebra mismatch")
    }

    pub fn pow(&self, n: u32) -> Element {
        let mut acc = Element::one(&self.alg);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Re-reads the same exponent records in another algebra.
    pub fn transport(&self, target: &Arc<Algebra>) -> Result<Element> {
        if target.field() != self.field() {
            return Err(Error::ModeMismatch);
        }
        for m in self.terms.keys() {
            let p = target.project(m);
            if p.is_none_or(|p| !target.is_legal(&p)) {
                return Err(Error::Invalid(format!("monomial {m} is not legal in {}", target.kind())));
            }
        }
        Ok(Element::from_terms(target, self.terms.iter().map(|(m, c)| (*m, c.clone()))))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut t = json!({"F": m.f, "K": m.k, "E": m.e, "coeff": c.to_json()});
                if self.kind().has_tilde() {
                    t["Kt"] = json!(m.kt);
                }
                t
            })
            .collect();
        json!({"algebra": self.kind().id(), "mode": self.field().mode().to_json(), "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Element> {
        let bad = |m: &str| Error::Json(m.to_string());
        let kind = AlgebraKind::from_id(v.get("algebra").and_then(Value::as_str).ok_or_else(|| bad("missing algebra"))?)?;
        let mode = FieldMode::from_json(v.get("mode").ok_or_else(|| bad("missing mode"))?)?;
        let field = Field::new(mode)?;
        let alg = Algebra::get(kind, &field)?;
        let arr = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        let u3 = |x: Option<&Value>| -> Result<[u32; 3]> {
            let a = x.and_then(Value::as_array).filter(|a| a.len() == 3).ok_or_else(|| bad("expected 3 exponents"))?;
            let mut out = [0u32; 3];
            for (o, e) in out.iter_mut().zip(a) {
                *o = e.as_u64().ok_or_else(|| bad("exponent must be a nonnegative integer"))? as u32;
            }
            Ok(out)
        };
        let i2 = |x: Option<&Value>| -> Result<[i32; 2]> {
            let a = x.and_then(Value::as_array).filter(|a| a.len() == 2).ok_or_else(|| bad("expected 2 exponents"))?;
            let mut out = [0i32; 2];
            for (o, e) in out.iter_mut().zip(a) {
                *o = e.as_i64().ok_or_else(|| bad("exponent must be an integer"))? as i32;
            }
            Ok(out)
        };
        let mut terms = Vec::new();
        for t in arr {
            let kt = if t.get("Kt").is_some() { i2(t.get("Kt"))? } else { [0, 0] };
            let m = Monomial { f: u3(t.get("F"))?, k: i2(t.get("K"))?, kt, e: u3(t.get("E"))? };
            if !alg.is_legal(&m) {
                return Err(bad(&format!("monomial {m} is not legal in {kind}")));
            }
            let c = Scalar::from_json(t.get("coeff").ok_or_else(|| bad("missing coeff"))?)?;
            field.check(&c)?;
            terms.push((m, c));
        }
        Ok(Element::from_terms(&alg, terms))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter().map(|(m, c)| (if m.is_one() { None } else { Some(m.to_string()) }, c)))
    }
}

/// Writes `c1*b1 + c2*b2 ...`, where a `None` basis text stands for the unit.
pub(crate) fn write_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Option<String>, &'a Scalar)>,
) -> fmt::Result {
    let mut first = true;
    for (basis, c) in terms {
        let s = c.to_string();
        let compound = s[1..].contains(' ') || s.contains('/');
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) if !compound => (true, rest.to_string()),
            _ => (false, s.clone()),
        };
        let coeff = if compound { format!("({s})") } else { body };
        let text = match basis {
            None => coeff,
            Some(b) if coeff == "1" => b,
            Some(b) => format!("{coeff}*{b}"),
        };
        if first {
            write!(f, "{}{}", if neg { "-" } else { "" }, text)?;
        } else {
            write!(f, " {} {}", if neg { "-" } else { "+" }, text)?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
