use std::collections::HashMap;
use std::sync::Arc;

use super::{solve_idempotents_capped, IdempotentSolution};
use crate::error::{Error, Result};
use crate::modules::{build_v_u, MatrixModule};
use crate::pbw::{enumerate_basis, Algebra, AlgebraKind, Element, Letter, Monomial};
use crate::qfield::{Field, Matrix, Scalar};

/// Default largest dimension for the regular representation.
pub const DEFAULT_MAX_DIM: usize = 125;

/// Default largest `l` for the decomposition of `u1`.
pub const DEFAULT_DECOMPOSE_MAX_L: u32 = 5;

/// The left regular representation of `u1` on its PBW basis.
#[derive(Clone, Debug)]
pub struct RegularRepresentation {
    alg: Arc<Algebra>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

pub fn regular_representation(field: &Field) -> Result<RegularRepresentation> {
    regular_representation_capped(field, DEFAULT_MAX_DIM)
}

pub fn regular_representation_capped(field: &Field, max_dim: usize) -> Result<RegularRepresentation> {
    let alg = Algebra::get(AlgebraKind::Small1, field)?;
    let basis: Vec<Monomial> = {
        let en = enumerate_basis(&alg, None)?;
        if en.count() > max_dim {
            return Err(Error::CapExceeded(format!("u1 has dimension {} > {max_dim}", en.count())));
        }
        en.iter().collect()
    };
    let index = basis.iter().enumerate().map(|(n, m)| (*m, n)).collect();
    Ok(RegularRepresentation { alg, basis, index })
}

impl RegularRepresentation {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_element(&self, n: usize) -> Element {
        Element::monomial(&self.alg, self.basis[n])
    }

    pub fn coords(&self, x: &Element) -> Result<Vec<Scalar>> {
        if x.kind() != AlgebraKind::Small1 || x.field() != self.field() {
            return Err(Error::AlgebraMismatch("u1".into(), x.kind().id().into()));
        }
        let mut v = vec![self.field().zero(); self.dim()];
        for (m, c) in x.terms() {
            v[self.index[m]] = c.clone();
        }
        Ok(v)
    }

    pub fn element(&self, v: &[Scalar]) -> Element {
        Element::from_terms(&self.alg, self.basis.iter().zip(v).map(|(m, c)| (*m, c.clone())))
    }

    /// The matrix of `y ↦ x·y`.
    pub fn left_matrix(&self, x: &Element) -> Result<Matrix> {
        let cols = (0..self.dim()).map(|n| self.coords(&x.mul(&self.basis_element(n)))).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.field(), self.dim(), &cols))
    }

    /// The matrix of `y ↦ y·x`.
    pub fn right_matrix(&self, x: &Element) -> Result<Matrix> {
        let cols = (0..self.dim()).map(|n| self.coords(&self.basis_element(n).mul(x))).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.field(), self.dim(), &cols))
    }

    fn span_dim(&self, xs: &[Element]) -> Result<usize> {
        if xs.is_empty() {
            return Ok(0);
        }
        let cols = xs.iter().map(|x| self.coords(x)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.field(), self.dim(), &cols).rank())
    }

    /// `dim(u1 · e)`.
    pub fn left_ideal_dim(&self, e: &Element) -> Result<usize> {
        Ok(self.right_matrix(e)?.rank())
    }
}

/// A basis of the Jacobson radical: the kernel of `(x, y) ↦ tr(L_{xy})`.
pub fn radical_trace_form(reg: &RegularRepresentation) -> Result<Vec<Element>> {
    let f = reg.field();
    let n = reg.dim();
    let traces: Vec<Scalar> = (0..n)
        .map(|a| {
            let x = reg.basis_element(a);
            (0..n).fold(f.zero(), |acc, b| acc.add(&x.mul(&reg.basis_element(b)).coeff(&reg.basis[b])))
        })
        .collect();
    let mut gram = Matrix::zeros(f, n, n);
    for a in 0..n {
        for b in 0..n {
            let xy = reg.basis_element(a).mul(&reg.basis_element(b));
            let t = xy.terms().iter().fold(f.zero(), |acc, (m, c)| acc.add(&c.mul(&traces[reg.index[m]])));
            gram.set(a, b, t);
        }
    }
    Ok(gram.kernel().iter().map(|v| reg.element(v)).collect())
}

/// Whether the idempotent `e` is primitive: `e·u1·e` modulo `e·rad·e` is one-dimensional.
pub fn is_primitive(reg: &RegularRepresentation, radical: &[Element], e: &Element) -> Result<bool> {
    if e.mul(e) != *e {
        return Err(Error::Invalid(format!("{e} is not idempotent")));
    }
    let whole: Vec<Element> = (0..reg.dim()).map(|n| e.mul(&reg.basis_element(n)).mul(e)).collect();
    let rad: Vec<Element> = radical.iter().map(|r| e.mul(r).mul(e)).collect();
    Ok(reg.span_dim(&whole)? == reg.span_dim(&rad)? + 1)
}

/// The simple `u1`-module of dimension `k + 1`.
pub fn u1_simple(k: i64, field: &Field) -> Result<MatrixModule> {
    let v = build_v_u(k, 0, field)?;
    let action = [Letter::E1, Letter::F1, Letter::K1]
        .into_iter()
        .map(|g| Ok((g, v.matrix(g)?.clone())))
        .collect::<Result<_>>()?;
    MatrixModule::new(AlgebraKind::Small1, field, v.basis().to_vec(), action)
}

/// One summand `f` of the decomposition of `1`.
#[derive(Clone, Debug)]
pub struct Summand {
    pub solution: IdempotentSolution,
    pub left_ideal_dim: usize,
    pub primitive: bool,
    /// The `k` with `f·V(k) ≠ 0`, when exactly one simple is hit and with rank one.
    pub head: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct U1Decomposition {
    pub l: u32,
    pub summands: Vec<Summand>,
    /// Residues `i` for which no orthogonal primitive decomposition of `e_i` was found.
    pub unsplit: Vec<i64>,
    pub orthogonal: bool,
    pub sums_to_one: bool,
}

impl U1Decomposition {
    pub fn total_dim(&self) -> usize {
        self.summands.iter().map(|s| s.left_ideal_dim).sum()
    }

    /// How many summands have head `V(k)`, for each `k`.
    pub fn head_counts(&self) -> Vec<usize> {
        (0..self.l).map(|k| self.summands.iter().filter(|s| s.head == Some(k)).count()).collect()
    }

    pub fn verified(&self) -> bool {
        let l = self.l as usize;
        self.unsplit.is_empty()
            && self.orthogonal
            && self.sums_to_one
            && self.summands.len() == l * (l + 1) / 2
            && self.summands.iter().all(|s| s.primitive)
            && self.total_dim() == l * l * l
            && self.head_counts().iter().enumerate().all(|(k, &c)| c == k + 1)
    }
}

fn split(target: &[Scalar], cands: &[IdempotentSolution], chosen: &mut Vec<usize>, start: usize) -> bool {
    if target.iter().all(Scalar::is_zero) {
        return true;
    }
    for n in start..cands.len() {
        let c = &cands[n];
        let ortho = chosen.iter().all(|&o| cands[o].element.mul(&c.element).is_zero());
        if !ortho {
            continue;
        }
        let rest: Vec<Scalar> = target.iter().zip(&c.coeffs).map(|(a, b)| a.sub(b)).collect();
        chosen.push(n);
        if split(&rest, cands, chosen, n + 1) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// A decomposition of `1 ∈ u1` into orthogonal primitive idempotents assembled
/// from the solutions for each `e_i`.
pub fn decompose_regular_u1(field: &Field) -> Result<U1Decomposition> {
    decompose_regular_u1_capped(field, DEFAULT_DECOMPOSE_MAX_L)
}

pub fn decompose_regular_u1_capped(field: &Field, max_l: u32) -> Result<U1Decomposition> {
    let l = field.require_odd()?;
    if l > max_l {
        return Err(Error::CapExceeded(format!("u1 decomposition limited to l <= {max_l}, got {l}")));
    }
    let reg = regular_representation_capped(field, (l * l * l) as usize)?;
    let rad = radical_trace_form(&reg)?;
    let simples = (0..l as i64).map(|k| u1_simple(k, field)).collect::<Result<Vec<_>>>()?;
    let mut summands = Vec::new();
    let mut unsplit = Vec::new();
    for i in 0..l as i64 {
        let mut cands = Vec::new();
        for s in solve_idempotents_capped(i, field, max_l)?.solutions {
            if !s.element.is_zero() && is_primitive(&reg, &rad, &s.element)? {
                cands.push(s);
            }
        }
        let mut target = vec![field.zero(); l as usize];
        target[0] = field.one();
        let mut chosen = Vec::new();
        if !split(&target, &cands, &mut chosen, 0) {
            unsplit.push(i);
            continue;
        }
        for n in chosen {
            let s = cands[n].clone();
            let mut hits = Vec::new();
            for (k, v) in simples.iter().enumerate() {
                let r = v.element_matrix(&s.element)?.rank();
                if r > 0 {
                    hits.push((k as u32, r));
                }
            }
            let head = match hits.as_slice() {
                [(k, 1)] => Some(*k),
                _ => None,
            };
            summands.push(Summand { left_ideal_dim: reg.left_ideal_dim(&s.element)?, primitive: true, head, solution: s });
        }
    }
    let alg = reg.algebra();
    let mut orthogonal = true;
    let mut total = Element::zero(alg);
    for (a, x) in summands.iter().enumerate() {
        total = total.add(&x.solution.element);
        for (b, y) in summands.iter().enumerate() {
            let p = x.solution.element.mul(&y.solution.element);
            let expected = if a == b { x.solution.element.clone() } else { Element::zero(alg) };
            orthogonal &= p == expected;
        }
    }
    let sums_to_one = total == Element::one(alg);
    Ok(U1Decomposition { l, summands, unsplit, orthogonal, sums_to_one })
}
