use std::collections::BTreeMap;

use super::builders::build_l;
use super::character::{signed_q_power, Character};
use super::matrix_module::{module_generators, MatrixModule};
use crate::error::{Error, Result};
use crate::hopf::comultiply;
use crate::pbw::{Element, Letter};
use crate::qfield::{Matrix, Scalar};

/// A growing subspace kept in reduced echelon form.
struct Span {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Span {
    fn new() -> Span {
        Span { rows: Vec::new() }
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            let c = v[*p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.sub(&c.mul(r));
                }
            }
        }
        v
    }

    /// Adds `v`, returning whether the span grew.
    fn insert(&mut self, v: &[Scalar]) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[p].inv().expect("nonzero pivot");
        let v: Vec<Scalar> = v.iter().map(|x| x.mul(&inv)).collect();
        for (_, row) in self.rows.iter_mut() {
            let c = row[p].clone();
            if !c.is_zero() {
                for (x, r) in row.iter_mut().zip(&v) {
                    *x = x.sub(&c.mul(r));
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// The smallest submodule containing the given vectors, as a basis.
pub fn generated_submodule(m: &MatrixModule, vectors: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let gens: Vec<Matrix> = module_generators(m.kind()).into_iter().map(|g| m.letter_matrix(g)).collect::<Result<_>>()?;
    let mut span = Span::new();
    let mut found = Vec::new();
    let mut queue: Vec<Vec<Scalar>> = vectors.to_vec();
    while let Some(v) = queue.pop() {
        if v.len() != m.dim() {
            return Err(Error::Invalid(format!("vector of length {} in a module of dimension {}", v.len(), m.dim())));
        }
        if span.insert(&v) {
            for g in &gens {
                queue.push(g.apply(&v));
            }
            found.push(v);
        }
    }
    Ok(found)
}

/// A simultaneous eigenspace of `K1, K2`.
#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub weight: Character,
    pub basis: Vec<Vec<Scalar>>,
}

fn k_matrices(m: &MatrixModule) -> Result<[Matrix; 2]> {
    let k1 = m.matrix(Letter::K1)?.clone();
    let k2 = match m.matrix(Letter::K2) {
        Ok(k) => k.clone(),
        Err(_) => Matrix::identity(m.field(), m.dim()),
    };
    Ok([k1, k2])
}

/// The decomposition into simultaneous `K1, K2` eigenspaces.
///
/// Candidate eigenvalues are read off the diagonals, so the `K` matrices must
/// be diagonal or triangular; otherwise an error is returned. A missing `K2`
/// acts as the identity.
pub fn weight_spaces(m: &MatrixModule) -> Result<Vec<WeightSpace>> {
    let f = m.field();
    let n = m.dim();
    let ks = k_matrices(m)?;
    let mut seen: Vec<(Scalar, Scalar)> = Vec::new();
    let mut out = Vec::new();
    let mut total = 0;
    for i in 0..n {
        let pair = (ks[0].get(i, i).clone(), ks[1].get(i, i).clone());
        if seen.contains(&pair) {
            continue;
        }
        seen.push(pair.clone());
        let id = Matrix::identity(f, n);
        let stacked = ks[0].sub(&id.scale(&pair.0)).vstack(&ks[1].sub(&id.scale(&pair.1)));
        let basis = stacked.kernel();
        if basis.is_empty() {
            continue;
        }
        total += basis.len();
        out.push(WeightSpace { weight: Character::new(pair.0, pair.1)?, basis });
    }
    if total != n {
        return Err(Error::Invalid("K1, K2 are not simultaneously diagonalizable over their diagonals".into()));
    }
    Ok(out)
}

/// The highest weight vectors of one weight.
#[derive(Clone, Debug)]
pub struct HwSpace {
    pub weight: Character,
    pub vectors: Vec<Vec<Scalar>>,
}

/// For each weight, a basis of the weight vectors killed by the `E` generators.
pub fn find_hw_vectors(m: &MatrixModule) -> Result<Vec<HwSpace>> {
    let f = m.field();
    let es: Vec<Letter> = module_generators(m.kind()).into_iter().filter(Letter::is_e).collect();
    let mut out = Vec::new();
    for ws in weight_spaces(m)? {
        let b = Matrix::from_columns(f, m.dim(), &ws.basis);
        let mut stacked = Matrix::zeros(f, 0, ws.basis.len());
        for g in &es {
            stacked = stacked.vstack(&m.matrix(*g)?.mul(&b));
        }
        let vectors: Vec<Vec<Scalar>> = stacked.kernel().iter().map(|k| b.apply(k)).collect();
        if !vectors.is_empty() {
            out.push(HwSpace { weight: ws.weight, vectors });
        }
    }
    Ok(out)
}

/// Whether every vector of a weight basis generates the whole module.
pub fn is_simple(m: &MatrixModule) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(false);
    }
    for ws in weight_spaces(m)? {
        for v in &ws.basis {
            if generated_submodule(m, std::slice::from_ref(v))?.len() != m.dim() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// If `m` is generated by a unique highest weight line of weight `λ` with
/// `λ1 = ±q^{m1}` and has the dimension of the finite simple module of that
/// weight, returns `λ`.
pub fn classify_highest_weight(m: &MatrixModule) -> Result<Option<Character>> {
    let hw = find_hw_vectors(m)?;
    let [HwSpace { weight, vectors }] = hw.as_slice() else { return Ok(None) };
    if vectors.len() != 1 || generated_submodule(m, vectors)?.len() != m.dim() {
        return Ok(None);
    }
    match signed_q_power(weight.lambda1()) {
        Some((_, m1)) if m1 >= 0 && m.dim() as i64 == m1 + 1 => Ok(Some(weight.clone())),
        _ => Ok(None),
    }
}

/// The module structure on `M ⊗ N` through the coproduct.
pub fn tensor(m: &MatrixModule, n: &MatrixModule) -> Result<MatrixModule> {
    if m.kind() != n.kind() {
        return Err(Error::AlgebraMismatch(m.kind().id().into(), n.kind().id().into()));
    }
    if m.field() != n.field() {
        return Err(Error::ModeMismatch);
    }
    let f = m.field();
    let mut action = BTreeMap::new();
    for g in module_generators(m.kind()) {
        let d = comultiply(&Element::letter(m.algebra(), g)?);
        let mut acc = Matrix::zeros(f, m.dim() * n.dim(), m.dim() * n.dim());
        for (legs, c) in d.terms() {
            acc = acc.add(&m.monomial_matrix(&legs[0])?.kron(&n.monomial_matrix(&legs[1])?).scale(c));
        }
        action.insert(g, acc);
    }
    let mut basis = Vec::new();
    for a in m.basis() {
        for b in n.basis() {
            basis.push(format!("{a}⊗{b}"));
        }
    }
    MatrixModule::new(m.kind(), f, basis, action)
}

/// One summand of a decomposition.
#[derive(Clone, Debug)]
pub struct Factor {
    pub highest_weight: Character,
    pub multiplicity: usize,
    /// Dimension of the submodule generated by one highest weight vector.
    pub dimension: usize,
    /// Whether that submodule is simple.
    pub simple: bool,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub factors: Vec<Factor>,
    /// The highest weights predicted for the summands.
    pub expected: Vec<Character>,
    pub module_dim: usize,
    /// Whether the generated submodules form a direct sum.
    pub direct: bool,
}

impl DecompositionReport {
    pub fn complete(&self) -> bool {
        self.factors.iter().map(|f| f.multiplicity * f.dimension).sum::<usize>() == self.module_dim
    }

    pub fn matches_expected(&self) -> bool {
        self.factors.len() == self.expected.len()
            && self.factors.iter().all(|f| f.multiplicity == 1 && self.expected.contains(&f.highest_weight))
    }

    pub fn verified(&self) -> bool {
        self.complete() && self.direct && self.matches_expected() && self.factors.iter().all(|f| f.simple)
    }
}

fn require_sign_power(lambda: &Character) -> Result<(i64, i64)> {
    match signed_q_power(lambda.lambda1()) {
        Some((e, m)) if m >= 0 => Ok((e, m)),
        _ => Err(Error::Invalid(format!("λ1 = {} is not ±q^m with m >= 0", lambda.lambda1()))),
    }
}

/// Decomposes `L(λ) ⊗ L(μ)` and compares with the weights
/// `η^(i) = (ε1ε2 q^{m+n-2i}, q^i λ2 μ2)`.
pub fn clebsch_gordan(lambda: &Character, mu: &Character) -> Result<DecompositionReport> {
    let (e1, m) = require_sign_power(lambda)?;
    let (e2, n) = require_sign_power(mu)?;
    let f = lambda.field();
    let t = tensor(&build_l(lambda)?, &build_l(mu)?)?;
    let expected = (0..=m.min(n))
        .map(|i| Character::new(f.int(e1 * e2).mul(&f.q_pow(m + n - 2 * i)), f.q_pow(i).mul(lambda.lambda2()).mul(mu.lambda2())))
        .collect::<Result<Vec<_>>>()?;
    let mut factors = Vec::new();
    let mut all = Span::new();
    let mut sum = 0;
    for hw in find_hw_vectors(&t)? {
        let mut dimension = 0;
        let mut simple = true;
        for v in &hw.vectors {
            let sub = generated_submodule(&t, std::slice::from_ref(v))?;
            dimension = sub.len();
            sum += sub.len();
            for w in &sub {
                all.insert(w);
            }
            simple &= restricted_simple(&t, &sub)?;
        }
        factors.push(Factor { highest_weight: hw.weight, multiplicity: hw.vectors.len(), dimension, simple });
    }
    Ok(DecompositionReport { factors, expected, module_dim: t.dim(), direct: all.dim() == sum })
}

/// Whether every weight vector of the submodule spanned by `sub` generates it.
fn restricted_simple(m: &MatrixModule, sub: &[Vec<Scalar>]) -> Result<bool> {
    let f = m.field();
    let b = Matrix::from_columns(f, m.dim(), sub);
    let ks = k_matrices(m)?;
    for ws in weight_spaces(m)? {
        let id = Matrix::identity(f, m.dim());
        let (c1, c2) = (ws.weight.lambda1(), ws.weight.lambda2());
        let stacked = ks[0].sub(&id.scale(c1)).mul(&b).vstack(&ks[1].sub(&id.scale(c2)).mul(&b));
        for k in stacked.kernel() {
            if generated_submodule(m, &[b.apply(&k)])?.len() != sub.len() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
