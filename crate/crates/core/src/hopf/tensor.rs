use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::pbw::{write_sum, Acc, Algebra, AlgebraKind, Element, Monomial};
use crate::qfield::{Field, FieldMode, Scalar};

/// A finite sum of pure tensors of PBW monomials, one slot per leg.
#[derive(Clone)]
pub struct TensorElement {
    algs: Vec<Arc<Algebra>>,
    terms: BTreeMap<Vec<Monomial>, Scalar>,
}

impl PartialEq for TensorElement {
    fn eq(&self, o: &Self) -> bool {
        self.kinds() == o.kinds() && self.field().mode() == o.field().mode() && self.terms == o.terms
    }
}

impl Eq for TensorElement {}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kinds: Vec<&str> = self.algs.iter().map(|a| a.kind().id()).collect();
        write!(f, "Tensor[{}]({})", kinds.join(","), self)
    }
}

impl TensorElement {
    pub fn zero(algs: Vec<Arc<Algebra>>) -> TensorElement {
        assert!(!algs.is_empty(), "a tensor needs at least one leg");
        TensorElement { algs, terms: BTreeMap::new() }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn unit(algs: Vec<Arc<Algebra>>) -> TensorElement {
        let one = algs[0].field().one();
        let n = algs.len();
        TensorElement::from_terms(algs, vec![(vec![Monomial::one(); n], one)])
    }

    /// The pure tensor `x1 ⊗ x2 ⊗ ...`.
    pub fn pure(parts: &[&Element]) -> TensorElement {
        let algs: Vec<Arc<Algebra>> = parts.iter().map(|x| x.algebra().clone()).collect();
        let mut out = TensorElement::unit(algs.clone());
        for (i, x) in parts.iter().enumerate() {
            out = out.map_leg(i, &algs[i], |m| {
                debug_assert!(m.is_one());
                (*x).clone()
            });
        }
        out
    }

    /// Sums the terms after projecting each slot into its algebra.
    pub fn from_terms(
        algs: Vec<Arc<Algebra>>,
        terms: impl IntoIterator<Item = (Vec<Monomial>, Scalar)>,
    ) -> TensorElement {
        let mut acc = Acc::new();
        'outer: for (ms, c) in terms {
            assert_eq!(ms.len(), algs.len(), "slot count must match the legs");
            let mut proj = Vec::with_capacity(ms.len());
            for (m, a) in ms.iter().zip(&algs) {
                match a.project(m) {
                    Some(p) => proj.push(p),
                    None => continue 'outer,
                }
            }
            acc.add(proj, c);
        }
        TensorElement { algs, terms: acc.into_sorted().into_iter().collect() }
    }

    pub fn algebras(&self) -> &[Arc<Algebra>] {
        &self.algs
    }

    pub fn kinds(&self) -> Vec<AlgebraKind> {
        self.algs.iter().map(|a| a.kind()).collect()
    }

    pub fn rank(&self) -> usize {
        self.algs.len()
    }

    pub fn field(&self) -> &Field {
        self.algs[0].field()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Monomial>, Scalar> {
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

    pub fn coeff(&self, ms: &[Monomial]) -> Scalar {
        self.terms.get(ms).cloned().unwrap_or_else(|| self.field().zero())
    }

    fn same_shape(&self, o: &TensorElement) -> Result<()> {
        if self.kinds() != o.kinds() {
            return Err(Error::AlgebraMismatch(format!("{:?}", self.kinds()), format!("{:?}", o.kinds())));
        }
        if self.field() != o.field() {
            return Err(Error::ModeMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, o: &TensorElement) -> Result<TensorElement> {
        self.same_shape(o)?;
        let mut terms = self.terms.clone();
        for (k, c) in &o.terms {
            let v = match terms.get(k) {
                Some(a) => a.add(c),
                None => c.clone(),
            };
            if v.is_zero() {
                terms.remove(k);
            } else {
                terms.insert(k.clone(), v);
            }
        }
        Ok(TensorElement { algs: self.algs.clone(), terms })
    }

    pub fn add(&self, o: &TensorElement) -> TensorElement {
        self.try_add(o).expect("tensor sum of mismatched shapes")
    }

    pub fn neg(&self) -> TensorElement {
        self.scale(&self.field().int(-1))
    }

    pub fn sub(&self, o: &TensorElement) -> TensorElement {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        if s.is_zero() {
            return TensorElement::zero(self.algs.clone());
        }
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), c.mul(s))).collect();
        TensorElement { algs: self.algs.clone(), terms }
    }

    /// Leg-wise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn try_mul(&self, o: &TensorElement) -> Result<TensorElement> {
        self.same_shape(o)?;
        let mut acc = Acc::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                let mut partial: Vec<(Vec<Monomial>, Scalar)> = vec![(Vec::new(), ca.mul(cb))];
                for (i, alg) in self.algs.iter().enumerate() {
                    let prod = alg.mul_mono(&ka[i], &kb[i]);
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (ms, c) in &partial {
                        for (m, d) in prod.iter() {
                            let mut ms2 = ms.clone();
                            ms2.push(*m);
                            next.push((ms2, c.mul(d)));
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for (ms, c) in partial {
                    acc.add(ms, c);
                }
            }
        }
        Ok(TensorElement { algs: self.algs.clone(), terms: acc.into_sorted().into_iter().collect() })
    }

    pub fn mul(&self, o: &TensorElement) -> TensorElement {
        self.try_mul(o).expect("tensor product of mismatched shapes")
    }

    /// `self ⊗ o`, concatenating the legs.
    pub fn tensor(&self, o: &TensorElement) -> TensorElement {
        let mut algs = self.algs.clone();
        algs.extend(o.algs.iter().cloned());
        let mut terms = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                let mut k = ka.clone();
                k.extend(kb.iter().copied());
                terms.insert(k, ca.mul(cb));
            }
        }
        TensorElement { algs, terms }
    }

    /// Applies a linear map, given on monomials, to leg `i`.
    pub fn map_leg(
        &self,
        i: usize,
        target: &Arc<Algebra>,
        mut f: impl FnMut(&Monomial) -> Element,
    ) -> TensorElement {
        let mut algs = self.algs.clone();
        algs[i] = target.clone();
        let mut acc = Acc::new();
        for (ks, c) in &self.terms {
            let img = f(&ks[i]);
            for (m, d) in img.terms() {
                let mut k = ks.clone();
                k[i] = *m;
                acc.add(k, c.mul(d));
            }
        }
        TensorElement { algs, terms: acc.into_sorted().into_iter().collect() }
    }

    /// Replaces leg `i` by a map into a tensor of several legs (for example a coproduct).
    pub fn expand_leg(
        &self,
        i: usize,
        targets: &[Arc<Algebra>],
        mut f: impl FnMut(&Monomial) -> TensorElement,
    ) -> TensorElement {
        let mut algs: Vec<Arc<Algebra>> = self.algs[..i].to_vec();
        algs.extend(targets.iter().cloned());
        algs.extend(self.algs[i + 1..].iter().cloned());
        let mut acc = Acc::new();
        for (ks, c) in &self.terms {
            let img = f(&ks[i]);
            for (ms, d) in img.terms() {
                let mut k: Vec<Monomial> = ks[..i].to_vec();
                k.extend(ms.iter().copied());
                k.extend(ks[i + 1..].iter().copied());
                acc.add(k, c.mul(d));
            }
        }
        TensorElement { algs, terms: acc.into_sorted().into_iter().collect() }
    }

    /// Applies a linear functional to leg `i`, removing it.
    pub fn contract_leg(&self, i: usize, mut f: impl FnMut(&Monomial) -> Scalar) -> Result<TensorElement> {
        if self.rank() < 2 {
            return Err(Error::Invalid("cannot contract the only leg".into()));
        }
        let mut algs = self.algs.clone();
        algs.remove(i);
        let mut acc = Acc::new();
        for (ks, c) in &self.terms {
            let v = f(&ks[i]);
            if v.is_zero() {
                continue;
            }
            let mut k = ks.clone();
            k.remove(i);
            acc.add(k, c.mul(&v));
        }
        Ok(TensorElement { algs, terms: acc.into_sorted().into_iter().collect() })
    }

    /// The single leg of a rank-one tensor as an element.
    pub fn into_element(&self) -> Result<Element> {
        if self.rank() != 1 {
            return Err(Error::Invalid(format!("tensor has {} legs", self.rank())));
        }
        Ok(Element::from_terms(&self.algs[0], self.terms.iter().map(|(k, c)| (k[0], c.clone()))))
    }

    /// The multiplication map applied to all legs, which must share an algebra.
    pub fn multiply_legs(&self) -> Result<Element> {
        let alg = &self.algs[0];
        for a in &self.algs[1..] {
            if a.kind() != alg.kind() {
                return Err(Error::AlgebraMismatch(alg.kind().id().into(), a.kind().id().into()));
            }
        }
        let mut out = Element::zero(alg);
        for (ks, c) in &self.terms {
            let mut x = Element::scalar(alg, c.clone());
            for m in ks {
                x = x.mul(&Element::monomial(alg, *m));
            }
            out = out.add(&x);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let slot = |alg: &Arc<Algebra>, m: &Monomial| {
            let mut t = json!({"F": m.f, "K": m.k, "E": m.e});
            if alg.kind().has_tilde() {
                t["Kt"] = json!(m.kt);
            }
            t
        };
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(ks, c)| {
                if self.rank() == 2 {
                    json!({"left": slot(&self.algs[0], &ks[0]), "right": slot(&self.algs[1], &ks[1]), "coeff": c.to_json()})
                } else {
                    let legs: Vec<Value> = ks.iter().zip(&self.algs).map(|(m, a)| slot(a, m)).collect();
                    json!({"legs": legs, "coeff": c.to_json()})
                }
            })
            .collect();
        let algs: Vec<&str> = self.algs.iter().map(|a| a.kind().id()).collect();
        json!({"algebras": algs, "mode": self.field().mode().to_json(), "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<TensorElement> {
        let bad = |m: &str| Error::Json(m.to_string());
        let mode = FieldMode::from_json(v.get("mode").ok_or_else(|| bad("missing mode"))?)?;
        let field = Field::new(mode)?;
        let ids = v.get("algebras").and_then(Value::as_array).ok_or_else(|| bad("missing algebras"))?;
        let mut algs = Vec::new();
        for id in ids {
            let kind = AlgebraKind::from_id(id.as_str().ok_or_else(|| bad("algebra id must be a string"))?)?;
            algs.push(Algebra::get(kind, &field)?);
        }
        if algs.is_empty() {
            return Err(bad("a tensor needs at least one leg"));
        }
        let arr = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))?;
        let mut terms = Vec::new();
        for t in arr {
            let slots: Vec<&Value> = match (t.get("left"), t.get("right"), t.get("legs")) {
                (Some(l), Some(r), None) => vec![l, r],
                (None, None, Some(Value::Array(legs))) => legs.iter().collect(),
                _ => return Err(bad("term needs left/right or legs")),
            };
            if slots.len() != algs.len() {
                return Err(bad("slot count does not match the algebras"));
            }
            let mut ms = Vec::new();
            for (s, alg) in slots.iter().zip(&algs) {
                let mut obj = (*s).clone();
                obj["coeff"] = json!(1);
                let m = monomial_from_json(&obj)?;
                if !alg.is_legal(&m) {
                    return Err(bad(&format!("monomial {m} is not legal in {}", alg.kind())));
                }
                ms.push(m);
            }
            let c = Scalar::from_json(t.get("coeff").ok_or_else(|| bad("missing coeff"))?)?;
            field.check(&c)?;
            terms.push((ms, c));
        }
        Ok(TensorElement::from_terms(algs, terms))
    }
}

fn monomial_from_json(t: &Value) -> Result<Monomial> {
    let bad = |m: &str| Error::Json(m.to_string());
    let ints = |key: &str, n: usize| -> Result<Vec<i64>> {
        match t.get(key) {
            None if key == "Kt" => Ok(vec![0; n]),
            None => Err(bad(&format!("missing {key}"))),
            Some(x) => {
                let a = x.as_array().filter(|a| a.len() == n).ok_or_else(|| bad(&format!("{key} needs {n} entries")))?;
                a.iter().map(|e| e.as_i64().ok_or_else(|| bad("exponent must be an integer"))).collect()
            }
        }
    };
    let nonneg = |v: Vec<i64>| -> Result<[u32; 3]> {
        if v.iter().any(|&x| x < 0) {
            return Err(bad("E and F exponents must be nonnegative"));
        }
        Ok([v[0] as u32, v[1] as u32, v[2] as u32])
    };
    let f = nonneg(ints("F", 3)?)?;
    let e = nonneg(ints("E", 3)?)?;
    let k = ints("K", 2)?;
    let kt = ints("Kt", 2)?;
    Ok(Monomial { f, e, k: [k[0] as i32, k[1] as i32], kt: [kt[0] as i32, kt[1] as i32] })
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(
            f,
            self.terms.iter().map(|(ks, c)| {
                let legs: Vec<String> = ks.iter().map(|m| m.to_string()).collect();
                (Some(legs.join(" ⊗ ")), c)
            }),
        )
    }
}
