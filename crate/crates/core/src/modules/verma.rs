use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::character::{signed_q_power, Character};
use crate::error::{Error, Result};
use crate::pbw::{Acc, Algebra, AlgebraKind, Element, Letter, Monomial};
use crate::qfield::{q_binomial, q_binomial_a, q_bracket_a, q_factorial, q_int, Matrix, Scalar};

/// A vector `Σ c_t F1^{t0} F12^{t1} F2^{t2} v` of the Verma module of `λ`.
#[derive(Clone, Debug)]
pub struct FreeVermaVector {
    alg: Arc<Algebra>,
    lambda: Character,
    terms: BTreeMap<[u32; 3], Scalar>,
}

impl PartialEq for FreeVermaVector {
    fn eq(&self, o: &Self) -> bool {
        self.alg.kind() == o.alg.kind() && self.lambda == o.lambda && self.terms == o.terms
    }
}

impl Eq for FreeVermaVector {}

fn f_mono(t: [u32; 3]) -> Monomial {
    Monomial { f: t, ..Monomial::one() }
}

impl FreeVermaVector {
    pub fn zero(alg: &Arc<Algebra>, lambda: &Character) -> FreeVermaVector {
        FreeVermaVector { alg: alg.clone(), lambda: lambda.clone(), terms: BTreeMap::new() }
    }

    /// The generating vector `v`.
    pub fn highest(alg: &Arc<Algebra>, lambda: &Character) -> FreeVermaVector {
        FreeVermaVector::basis(alg, lambda, [0; 3])
    }

    pub fn basis(alg: &Arc<Algebra>, lambda: &Character, t: [u32; 3]) -> FreeVermaVector {
        FreeVermaVector::from_terms(alg, lambda, [(t, alg.field().one())])
    }

    pub fn from_terms(
        alg: &Arc<Algebra>,
        lambda: &Character,
        terms: impl IntoIterator<Item = ([u32; 3], Scalar)>,
    ) -> FreeVermaVector {
        let mut acc = Acc::new();
        for (t, c) in terms {
            if alg.project(&f_mono(t)).is_some() {
                acc.add(t, c);
            }
        }
        FreeVermaVector { alg: alg.clone(), lambda: lambda.clone(), terms: acc.into_sorted().into_iter().collect() }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn lambda(&self) -> &Character {
        &self.lambda
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 3], Scalar> {
        &self.terms
    }

    pub fn coeff(&self, t: [u32; 3]) -> Scalar {
        self.terms.get(&t).cloned().unwrap_or_else(|| self.alg.field().zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &FreeVermaVector) -> FreeVermaVector {
        let all = self.terms.iter().chain(&o.terms).map(|(t, c)| (*t, c.clone()));
        FreeVermaVector::from_terms(&self.alg, &self.lambda, all)
    }

    pub fn sub(&self, o: &FreeVermaVector) -> FreeVermaVector {
        self.add(&o.scale(&self.alg.field().int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> FreeVermaVector {
        FreeVermaVector::from_terms(&self.alg, &self.lambda, self.terms.iter().map(|(t, c)| (*t, c.mul(s))))
    }

    /// Drops the terms with `t1 + t2 > n`, i.e. reduces modulo `M[λ, n+1]`.
    pub fn truncate_strata(&self, n: u32) -> FreeVermaVector {
        let kept = self.terms.iter().filter(|(t, _)| t[1] + t[2] <= n).map(|(t, c)| (*t, c.clone()));
        FreeVermaVector::from_terms(&self.alg, &self.lambda, kept)
    }

    /// The smallest `t1 + t2` among the terms.
    pub fn min_stratum(&self) -> Option<u32> {
        self.terms.keys().map(|t| t[1] + t[2]).min()
    }
}

impl fmt::Display for FreeVermaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(t, c)| {
            let m = f_mono(*t);
            (Some(if m.is_one() { "v".to_string() } else { format!("{m}*v") }), c)
        });
        crate::pbw::write_sum(f, terms)
    }
}

/// `x · w`, by straightening `x F^t` and evaluating on `v`.
pub fn verma_act_element(x: &Element, w: &FreeVermaVector) -> Result<FreeVermaVector> {
    if x.kind() != w.alg.kind() || x.field() != w.alg.field() {
        return Err(Error::AlgebraMismatch(w.alg.kind().id().into(), x.kind().id().into()));
    }
    let mut acc = Acc::new();
    for (t, c) in &w.terms {
        for (m, d) in x.terms() {
            for (n, e) in w.alg.mul_mono(m, &f_mono(*t)).iter() {
                if n.e != [0; 3] {
                    continue;
                }
                acc.add(n.f, c.mul(d).mul(e).mul(&w.lambda.eval(n.k)));
            }
        }
    }
    Ok(FreeVermaVector { alg: w.alg.clone(), lambda: w.lambda.clone(), terms: acc.into_sorted().into_iter().collect() })
}

pub fn verma_act(g: Letter, w: &FreeVermaVector) -> Result<FreeVermaVector> {
    verma_act_element(&Element::letter(&w.alg, g)?, w)
}

fn act_f_word(w: &FreeVermaVector, letters: &[(Letter, u32)]) -> Result<FreeVermaVector> {
    let mut out = w.clone();
    for (g, n) in letters.iter().rev() {
        for _ in 0..*n {
            out = verma_act(*g, &out)?;
        }
    }
    Ok(out)
}

/// The highest weight vector `v_n = Σ_i a_i F1^i F2^i F12^{n-i} v` of `M(λ)` over
/// the generic algebra.
pub fn hw_vector_vn(lambda: &Character, n: u32) -> Result<FreeVermaVector> {
    let field = lambda.field();
    field.require_generic()?;
    let u = Algebra::get(AlgebraKind::U, &field)?;
    let l1 = lambda.lambda1();
    let v = FreeVermaVector::highest(&u, lambda);
    let mut out = FreeVermaVector::zero(&u, lambda);
    let n = n as i64;
    for i in 0..=n {
        let k = n - i;
        let a = field
            .q_pow(-k)
            .mul(&l1.pow(-k)?)
            .mul(&q_factorial(&field, k)?)
            .mul(&q_binomial(&field, n, k)?)
            .mul(&q_binomial_a(&field, l1, 1, k)?);
        let term = act_f_word(&v, &[(Letter::F1, i as u32), (Letter::F2, i as u32), (Letter::F12, k as u32)])?;
        out = out.add(&term.scale(&a));
    }
    Ok(out)
}

/// Whether `w` is a nonzero weight vector killed by `E1` and `E2`.
pub fn check_highest_weight(w: &FreeVermaVector) -> Result<bool> {
    if w.is_zero() {
        return Err(Error::Invalid("zero vector".into()));
    }
    for g in [Letter::E1, Letter::E2] {
        if !verma_act(g, w)?.is_zero() {
            return Ok(false);
        }
    }
    is_weight_vector(w)
}

fn is_weight_vector(w: &FreeVermaVector) -> Result<bool> {
    let t = *w.terms.keys().next().expect("nonzero");
    for g in [Letter::K1, Letter::K2] {
        let kw = verma_act(g, w)?;
        let eig = verma_act(g, &FreeVermaVector::basis(&w.alg, &w.lambda, t))?.coeff(t);
        if kw != w.scale(&eig) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The PBW monomials `F1^{i-s} F12^s F2^{j-s}` spanning the weight space of
/// `M(λ)` with `K`-eigenvalues `(q^{-2i+j}λ1, q^{i-2j}λ2)`.
fn weight_monomials(i: u32, j: u32) -> Vec<[u32; 3]> {
    (0..=i.min(j)).map(|s| [i - s, s, j - s]).collect()
}

fn coords(w: &FreeVermaVector, basis: &[[u32; 3]]) -> Result<Vec<Scalar>> {
    if w.terms.keys().any(|t| !basis.contains(t)) {
        return Err(Error::Invalid(format!("{w} leaves the weight space")));
    }
    Ok(basis.iter().map(|t| w.coeff(*t)).collect())
}

/// The vectors `F1^{i-s} F2^{j-s} v_s`, `s = 0..=min(i, j)`.
fn vn_basis(lambda: &Character, i: u32, j: u32) -> Result<Vec<FreeVermaVector>> {
    (0..=i.min(j))
        .map(|s| act_f_word(&hw_vector_vn(lambda, s)?, &[(Letter::F1, i - s), (Letter::F2, j - s)]))
        .collect()
}

/// `(rank of {F1^{i-s} F2^{j-s} v_s}, number of PBW monomials)` in the weight
/// space indexed by `(i, j)`.
pub fn weight_space_rank(lambda: &Character, i: u32, j: u32) -> Result<(usize, usize)> {
    let field = lambda.field();
    let basis = weight_monomials(i, j);
    let cols = vn_basis(lambda, i, j)?.iter().map(|w| coords(w, &basis)).collect::<Result<Vec<_>>>()?;
    Ok((Matrix::from_columns(&field, basis.len(), &cols).rank(), basis.len()))
}

/// The kernel of `E1` on one weight space of `M(λ)`.
#[derive(Clone, Debug)]
pub struct KernelWeight {
    /// `(i, j)`: the weight is `(q^{-2i+j}λ1, q^{i-2j}λ2)`.
    pub index: (u32, u32),
    /// Kernel basis in the coordinates of `F1^{i-s} F2^{j-s} v_s`.
    pub kernel: Vec<Vec<Scalar>>,
    /// The `s` for which `F1^{i-s} F2^{j-s} v_s` lies in one of the two families.
    pub predicted: Vec<u32>,
    pub kernel_in_span: bool,
    pub predicted_in_kernel: bool,
}

impl KernelWeight {
    pub fn contains_basis_vector(&self, s: u32) -> bool {
        self.kernel.iter().any(|k| k.iter().enumerate().all(|(r, c)| (r as u32 == s) != c.is_zero()))
    }
}

/// Weight vectors of `M(λ)` killed by `E1`, for all weight spaces whose
/// monomials have total degree at most `cap`.
pub fn kernel_of_e1_in_verma(lambda: &Character, cap: u32) -> Result<Vec<KernelWeight>> {
    let field = lambda.field();
    field.require_generic()?;
    let u = Algebra::get(AlgebraKind::U, &field)?;
    let m1 = signed_q_power(lambda.lambda1()).map(|(_, m)| m);
    let mut out = Vec::new();
    for i in 0..=cap {
        for j in 0..=cap - i {
            let basis = weight_monomials(i, j);
            let bvecs = vn_basis(lambda, i, j)?;
            let bcols = bvecs.iter().map(|w| coords(w, &basis)).collect::<Result<Vec<_>>>()?;
            let bmat = Matrix::from_columns(&field, basis.len(), &bcols);
            let target = if i == 0 { Vec::new() } else { weight_monomials(i - 1, j) };
            let mut e1cols = Vec::new();
            for t in &basis {
                let img = verma_act(Letter::E1, &FreeVermaVector::basis(&u, lambda, *t))?;
                e1cols.push(coords(&img, &target)?);
            }
            let e1 = Matrix::from_columns(&field, target.len(), &e1cols);
            let kernel = e1.mul(&bmat).kernel();
            if bmat.rank() != basis.len() {
                return Err(Error::Invalid(format!("the v_s vectors are dependent at weight ({i}, {j})")));
            }
            let mut predicted = Vec::new();
            for s in 0..=i.min(j) {
                let fam1 = s == i;
                let fam2 = m1.is_some_and(|m| {
                    let t3 = (j - s) as i64;
                    let a = m + t3 - s as i64 + 1;
                    a >= 1 && a == (i - s) as i64
                });
                if fam1 || fam2 {
                    predicted.push(s);
                }
            }
            let kernel_in_span = kernel
                .iter()
                .all(|k| k.iter().enumerate().all(|(s, c)| c.is_zero() || predicted.contains(&(s as u32))));
            let mut predicted_in_kernel = true;
            for &s in &predicted {
                let img = e1.apply(&bcols[s as usize]);
                predicted_in_kernel &= img.iter().all(Scalar::is_zero);
            }
            out.push(KernelWeight { index: (i, j), kernel, predicted, kernel_in_span, predicted_in_kernel });
        }
    }
    Ok(out)
}

/// Outcome of comparing a stratum of the Verma filtration with `V(λ')`.
#[derive(Clone, Debug)]
pub struct FiltrationReport {
    pub lambda_prime: Character,
    pub window: u32,
    pub failures: Vec<String>,
}

impl FiltrationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `u_i ↦ F1^i F2^{t3} v_{t2}` intertwines `V(λ')` with
/// `M[λ, n] / M[λ, n+1]`, `n = t2 + t3`, for `i <= window`.
pub fn check_filtration_component(lambda: &Character, t2: u32, t3: u32, window: u32) -> Result<FiltrationReport> {
    let field = lambda.field();
    field.require_generic()?;
    let n = t2 + t3;
    let lp = Character::new(
        field.q_pow(t3 as i64 - t2 as i64).mul(lambda.lambda1()),
        field.q_pow(-(t2 as i64) - 2 * t3 as i64).mul(lambda.lambda2()),
    )?;
    let base = act_f_word(&hw_vector_vn(lambda, t2)?, &[(Letter::F2, t3)])?;
    let mut images = vec![base];
    for i in 0..window {
        let next = verma_act(Letter::F1, &images[i as usize])?;
        images.push(next);
    }
    let red = |w: &FreeVermaVector| w.truncate_strata(n);
    let mut failures = Vec::new();
    for i in 0..=window {
        let w = &images[i as usize];
        let wi = i as i64;
        if w.min_stratum().is_some_and(|s| s < n) {
            failures.push(format!("image of u_{i} is not in M[λ,{n}]"));
        }
        if red(w).is_zero() {
            failures.push(format!("image of u_{i} vanishes modulo M[λ,{}]", n + 1));
        }
        let k1 = lp.lambda1().mul(&field.q_pow(-2 * wi));
        if red(&verma_act(Letter::K1, w)?) != red(w).scale(&k1) {
            failures.push(format!("K1 on u_{i}"));
        }
        let k2 = lp.lambda2().mul(&field.q_pow(wi));
        if red(&verma_act(Letter::K2, w)?) != red(w).scale(&k2) {
            failures.push(format!("K2 on u_{i}"));
        }
        let e1 = if i == 0 {
            FreeVermaVector::zero(w.algebra(), lambda)
        } else {
            let c = q_int(&field, wi).mul(&q_bracket_a(&field, lp.lambda1(), 1 - wi)?);
            images[i as usize - 1].scale(&c)
        };
        if red(&verma_act(Letter::E1, w)?) != red(&e1) {
            failures.push(format!("E1 on u_{i}"));
        }
        for g in [Letter::E2, Letter::F2] {
            if !red(&verma_act(g, w)?).is_zero() {
                failures.push(format!("{g} on u_{i}"));
            }
        }
    }
    Ok(FiltrationReport { lambda_prime: lp, window, failures })
}
