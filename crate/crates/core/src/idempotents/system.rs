use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Value};

use super::{diagonal_element, structure_constant};
use crate::error::{Error, Result};
use crate::pbw::{Algebra, AlgebraKind, Element};
use crate::qfield::{zeta_sqrt, Field, Scalar};

/// Default largest `l` accepted by the idempotent solver.
pub const DEFAULT_MAX_L: u32 = 7;

/// One summand `a_{m,s,j} a_m a_s` of an equation.
#[derive(Clone, Debug, PartialEq)]
pub struct Triple {
    pub m: u32,
    pub s: u32,
    pub j: u32,
    pub coeff: Scalar,
}

/// The equations `a_p = Σ_{m+s-j=p} a_{m,s,j} a_m a_s` for `0 <= p < l`.
#[derive(Clone, Debug)]
pub struct QuadraticSystem {
    pub i: i64,
    pub field: Field,
    pub equations: Vec<Vec<Triple>>,
}

pub fn build_system(i: i64, field: &Field) -> Result<QuadraticSystem> {
    let l = field.require_odd()?;
    let i = i.rem_euclid(l as i64);
    let mut equations = Vec::with_capacity(l as usize);
    for p in 0..l {
        let mut eq = Vec::new();
        for m in 0..=p {
            for s in 0..=p {
                if m + s < p || m + s - p > m.min(s) {
                    continue;
                }
                let j = m + s - p;
                eq.push(Triple { m, s, j, coeff: structure_constant(field, m, s, j, i)? });
            }
        }
        equations.push(eq);
    }
    Ok(QuadraticSystem { i, field: field.clone(), equations })
}

impl QuadraticSystem {
    pub fn l(&self) -> usize {
        self.equations.len()
    }

    pub fn coefficient(&self, m: u32, s: u32, j: u32) -> Option<&Scalar> {
        let p = (m + s).checked_sub(j)? as usize;
        self.equations.get(p)?.iter().find(|t| (t.m, t.s, t.j) == (m, s, j)).map(|t| &t.coeff)
    }

    /// `Σ a_{m,s,j} a_m a_s - a_p` for every `p`.
    pub fn residuals(&self, a: &[Scalar]) -> Result<Vec<Scalar>> {
        if a.len() != self.l() {
            return Err(Error::Invalid(format!("expected {} coefficients, got {}", self.l(), a.len())));
        }
        Ok(self
            .equations
            .iter()
            .enumerate()
            .map(|(p, eq)| {
                eq.iter()
                    .fold(self.field.zero(), |acc, t| acc.add(&t.coeff.mul(&a[t.m as usize]).mul(&a[t.s as usize])))
                    .sub(&a[p])
            })
            .collect())
    }

    pub fn is_solution(&self, a: &[Scalar]) -> Result<bool> {
        Ok(self.residuals(a)?.iter().all(Scalar::is_zero))
    }

    /// The quadratic `A x² + B x + C` satisfied by `a_p` once `a_0..a_{p-1}` are fixed.
    fn quadratic(&self, p: usize, a: &[Scalar]) -> (Scalar, Scalar, Scalar) {
        let f = &self.field;
        let (mut qa, mut qb, mut qc) = (f.zero(), f.int(-1), f.zero());
        for t in &self.equations[p] {
            let (m, s) = (t.m as usize, t.s as usize);
            match (m == p, s == p) {
                (true, true) => qa = qa.add(&t.coeff),
                (true, false) => qb = qb.add(&t.coeff.mul(&a[s])),
                (false, true) => qb = qb.add(&t.coeff.mul(&a[m])),
                (false, false) => qc = qc.add(&t.coeff.mul(&a[m]).mul(&a[s])),
            }
        }
        (qa, qb, qc)
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd): (BigInt, BigInt) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| BigRational::new(sn, sd))
}

/// A square root of `d` in the active field, searched among `ζ^k · r` with `r` rational.
pub fn field_sqrt(field: &Field, d: &Scalar) -> Result<Option<Scalar>> {
    let l = field.require_odd()? as i64;
    if d.is_zero() {
        return Ok(Some(field.zero()));
    }
    for k in 0..l {
        let Some(r) = d.mul(&field.q_pow(-k)).as_rational() else { continue };
        if let Some(root) = rational_sqrt(&r) {
            let y = zeta_sqrt(field, &field.q_pow(k))?.mul(&field.from_rational(&root));
            debug_assert_eq!(&y.mul(&y), d);
            return Ok(Some(y));
        }
    }
    Ok(None)
}

/// A coefficient vector `(a_0, …, a_{l-1})` whose element `Σ a_p e_i E^p F^p` in `u1` is idempotent.
#[derive(Clone, Debug, PartialEq)]
pub struct IdempotentSolution {
    pub i: i64,
    pub coeffs: Vec<Scalar>,
    pub element: Element,
}

impl IdempotentSolution {
    /// Builds the element and checks `x² = x` and `a_0 ∈ {0, 1}`.
    pub fn new(i: i64, coeffs: Vec<Scalar>, field: &Field) -> Result<IdempotentSolution> {
        let l = field.require_odd()?;
        if coeffs.len() != l as usize {
            return Err(Error::Invalid(format!("expected {l} coefficients, got {}", coeffs.len())));
        }
        let i = i.rem_euclid(l as i64);
        let element = solution_element(i, &coeffs, field)?;
        if !(coeffs[0].is_zero() || coeffs[0].is_one()) {
            return Err(Error::Invalid(format!("a_0 = {} is neither 0 nor 1", coeffs[0])));
        }
        if element.mul(&element) != element {
            return Err(Error::Invalid(format!("{element} is not idempotent")));
        }
        Ok(IdempotentSolution { i, coeffs, element })
    }

    /// The flipped solution `(1 - a_0, -a_1, …)`, whose element is `e_i - x`.
    pub fn flip(&self) -> Result<IdempotentSolution> {
        let f = self.element.field().clone();
        let mut c: Vec<Scalar> = self.coeffs.iter().map(Scalar::neg).collect();
        c[0] = f.one().sub(&self.coeffs[0]);
        IdempotentSolution::new(self.i, c, &f)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "i": self.i,
            "coeffs": self.coeffs.iter().map(Scalar::to_json).collect::<Vec<_>>(),
            "element": self.element.to_json(),
        })
    }

    pub fn from_json(v: &Value) -> Result<IdempotentSolution> {
        let bad = |m: &str| Error::Json(m.to_string());
        let i = v.get("i").and_then(Value::as_i64).ok_or_else(|| bad("missing integer i"))?;
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing coeffs"))?
            .iter()
            .map(Scalar::from_json)
            .collect::<Result<Vec<_>>>()?;
        let first = coeffs.first().ok_or_else(|| bad("empty coeffs"))?;
        let field = Field::of(first);
        let coeffs = coeffs.iter().map(|c| field.coerce(c)).collect::<Result<Vec<_>>>()?;
        let sol = IdempotentSolution::new(i, coeffs, &field)?;
        if let Some(e) = v.get("element") {
            if Element::from_json(e)? != sol.element {
                return Err(bad("element does not match the coefficients"));
            }
        }
        Ok(sol)
    }
}

/// `Σ a_p e_i E^p F^p` in `u1`.
pub fn solution_element(i: i64, coeffs: &[Scalar], field: &Field) -> Result<Element> {
    let alg: Arc<Algebra> = Algebra::get(AlgebraKind::Small1, field)?;
    let mut out = Element::zero(&alg);
    for (p, a) in coeffs.iter().enumerate() {
        if !a.is_zero() {
            out = out.add(&diagonal_element(&alg, i, p as u32)?.scale(&field.coerce(a)?));
        }
    }
    Ok(out)
}

/// All solutions of the system for `e_i`, found by fixing `a_0, a_1, …` in turn.
pub fn solve_idempotents(i: i64, field: &Field) -> Result<Vec<IdempotentSolution>> {
    Ok(solve_idempotents_capped(i, field, DEFAULT_MAX_L)?.solutions)
}

/// Solver output with the number of branches dropped because a discriminant
/// had no square root of the searched form.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub solutions: Vec<IdempotentSolution>,
    pub discarded: usize,
}

pub fn solve_idempotents_capped(i: i64, field: &Field, max_l: u32) -> Result<SolveOutcome> {
    let l = field.require_odd()?;
    if l > max_l {
        return Err(Error::CapExceeded(format!("idempotent solver limited to l <= {max_l}, got {l}")));
    }
    let sys = build_system(i, field)?;
    let mut partial: Vec<Vec<Scalar>> = vec![Vec::new()];
    let mut discarded = 0;
    for p in 0..l as usize {
        let mut next = Vec::new();
        for a in partial {
            let (qa, qb, qc) = sys.quadratic(p, &a);
            let mut roots = Vec::new();
            if qa.is_zero() {
                if qb.is_zero() {
                    if !qc.is_zero() {
                        continue;
                    }
                    return Err(Error::Invalid(format!("a_{p} is undetermined for i = {}", sys.i)));
                }
                roots.push(qc.neg().div(&qb)?);
            } else {
                let disc = qb.mul(&qb).sub(&field.int(4).mul(&qa).mul(&qc));
                let Some(r) = field_sqrt(field, &disc)? else {
                    discarded += 1;
                    continue;
                };
                let two_a = field.int(2).mul(&qa);
                roots.push(qb.neg().add(&r).div(&two_a)?);
                if !r.is_zero() {
                    roots.push(qb.neg().sub(&r).div(&two_a)?);
                }
            }
            for x in roots {
                let mut b = a.clone();
                b.push(x);
                next.push(b);
            }
        }
        partial = next;
    }
    let solutions = partial.into_iter().map(|a| IdempotentSolution::new(sys.i, a, field)).collect::<Result<_>>()?;
    Ok(SolveOutcome { solutions, discarded })
}
