use std::collections::BTreeMap;

use super::character::{signed_q_power, Character};
use super::matrix_module::MatrixModule;
use super::verma::{verma_act, FreeVermaVector};
use crate::error::{Error, Result};
use crate::pbw::{Algebra, AlgebraKind, Letter};
use crate::qfield::{q_bracket_a, q_int, Field, Matrix, Scalar};

/// The coefficient `[j]_q [λ1; 1-j]_q` of `E1 u_j = c u_{j-1}` in `V(λ)`.
pub fn v_lambda_e1_coeff(lambda1: &Scalar, j: i64) -> Result<Scalar> {
    let f = Field::of(lambda1);
    Ok(q_int(&f, j).mul(&q_bracket_a(&f, lambda1, 1 - j)?))
}

fn diag(f: &Field, d: Vec<Scalar>) -> Matrix {
    let mut m = Matrix::zeros(f, d.len(), d.len());
    for (i, x) in d.into_iter().enumerate() {
        m.set(i, i, x);
    }
    m
}

/// Matrices of `K1, K2, E1, F1` of `V(λ)` on `u_0, …, u_{n-1}`, with `F1 u_{n-1} = 0`.
fn v_lambda_block(lambda: &Character, n: usize) -> Result<[Matrix; 4]> {
    let f = lambda.field();
    let k1 = diag(&f, (0..n).map(|j| lambda.lambda1().mul(&f.q_pow(-2 * j as i64))).collect());
    let k2 = diag(&f, (0..n).map(|j| lambda.lambda2().mul(&f.q_pow(j as i64))).collect());
    let mut e1 = Matrix::zeros(&f, n, n);
    let mut f1 = Matrix::zeros(&f, n, n);
    for j in 1..n {
        e1.set(j - 1, j, v_lambda_e1_coeff(lambda.lambda1(), j as i64)?);
        f1.set(j, j - 1, f.one());
    }
    Ok([k1, k2, e1, f1])
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|j| format!("{prefix}{j}")).collect()
}

/// The finite simple module `L(λ) = V(λ)/J'(λ)` for `λ1 = ±q^{m1}`, `m1 >= 0`.
pub fn build_l(lambda: &Character) -> Result<MatrixModule> {
    let f = lambda.field();
    f.require_generic()?;
    let m1 = match signed_q_power(lambda.lambda1()) {
        Some((_, m)) if m >= 0 => m as usize,
        _ => return Err(Error::Invalid(format!("λ1 = {} is not ±q^m with m >= 0", lambda.lambda1()))),
    };
    let n = m1 + 1;
    let [k1, k2, e1, f1] = v_lambda_block(lambda, n)?;
    let zero = Matrix::zeros(&f, n, n);
    let action = BTreeMap::from([
        (Letter::E1, e1),
        (Letter::E2, zero.clone()),
        (Letter::F1, f1),
        (Letter::F2, zero),
        (Letter::K1, k1),
        (Letter::K2, k2),
    ]);
    MatrixModule::new(AlgebraKind::U, &f, labels("u", n), action)
}

/// The simple module `V(m1, m2)` of the small quantum group.
pub fn build_v_u(m1: i64, m2: i64, field: &Field) -> Result<MatrixModule> {
    let l = field.require_root()? as i64;
    for m in [m1, m2] {
        if !(0..l).contains(&m) {
            return Err(Error::Invalid(format!("index {m} outside [0, {l})")));
        }
    }
    let n = (m1 + 1) as usize;
    let k1 = diag(field, (0..n as i64).map(|j| field.q_pow(m1 - 2 * j)).collect());
    let k2 = diag(field, (0..n as i64).map(|j| field.q_pow(m2 + j)).collect());
    let mut e1 = Matrix::zeros(field, n, n);
    let mut f1 = Matrix::zeros(field, n, n);
    for j in 1..n {
        e1.set(j - 1, j, q_int(field, m1 + 1 - j as i64));
        f1.set(j, j - 1, q_int(field, j as i64));
    }
    let zero = Matrix::zeros(field, n, n);
    let action = BTreeMap::from([
        (Letter::E1, e1),
        (Letter::E2, zero.clone()),
        (Letter::F1, f1),
        (Letter::F2, zero),
        (Letter::K1, k1),
        (Letter::K2, k2),
    ]);
    MatrixModule::new(AlgebraKind::Small, field, labels("w", n), action)
}

/// The Verma module `M(m1, m2)` of the small quantum group on the basis
/// `F1^{t0} F12^{t1} F2^{t2} v`, `t_i < l`.
pub fn build_verma_u(m1: i64, m2: i64, field: &Field) -> Result<MatrixModule> {
    let l = field.require_root()?;
    let u = Algebra::get(AlgebraKind::Small, field)?;
    let lambda = Character::new(field.q_pow(m1), field.q_pow(m2))?;
    let mut basis = Vec::new();
    for a in 0..l {
        for b in 0..l {
            for c in 0..l {
                basis.push([a, b, c]);
            }
        }
    }
    let index: BTreeMap<[u32; 3], usize> = basis.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    let n = basis.len();
    let mut action = BTreeMap::new();
    for g in Letter::BASIC {
        let mut m = Matrix::zeros(field, n, n);
        for (col, t) in basis.iter().enumerate() {
            let img = verma_act(g, &FreeVermaVector::basis(&u, &lambda, *t))?;
            for (s, c) in img.terms() {
                m.set(index[s], col, c.clone());
            }
        }
        action.insert(g, m);
    }
    let names = basis
        .iter()
        .map(|t| {
            let m = crate::pbw::Monomial { f: *t, ..Default::default() };
            if m.is_one() {
                "v".to_string()
            } else {
                format!("{m}*v")
            }
        })
        .collect();
    MatrixModule::new(AlgebraKind::Small, field, names, action)
}

/// The two-dimensional module with `K1 v_i = ε_i v_i`, `K2 v_1 = a v_1`,
/// `K2 v_2 = aq^{-2} v_2`, `F2 v_1 = v_2` and all other generators zero.
///
/// No choice of signs satisfies `K1 F2 K1^{-1} = q F2` together with
/// `[E1, F1] = (K1 - K1^{-1})/(q - q^{-1})`; `module_axiom_check` names the
/// violated relation.
pub fn example_module_literal(f: &Field, eps1: i64, eps2: i64, a: &Scalar) -> Result<MatrixModule> {
    let mut f2 = Matrix::zeros(f, 2, 2);
    f2.set(1, 0, f.one());
    let zero = Matrix::zeros(f, 2, 2);
    let action = BTreeMap::from([
        (Letter::E1, zero.clone()),
        (Letter::E2, zero.clone()),
        (Letter::F1, zero),
        (Letter::F2, f2),
        (Letter::K1, diag(f, vec![f.int(eps1), f.int(eps2)])),
        (Letter::K2, diag(f, vec![a.clone(), a.mul(&f.q_pow(-2))])),
    ]);
    MatrixModule::new(AlgebraKind::U, f, vec!["v1".into(), "v2".into()], action)
}

/// Dimension of the space of maps `V(λ) → V(μ)` on `u_0, …, u_window` that
/// commute with `K1, K2, E1` and, away from the top of the window, with `F1`.
pub fn intertwiner_dimension(lambda: &Character, mu: &Character, window: usize) -> Result<usize> {
    let f = lambda.field();
    let n = window + 1;
    let a = v_lambda_block(lambda, n)?;
    let b = v_lambda_block(mu, n)?;
    let var = |r: usize, c: usize| r * n + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (g, (ag, bg)) in a.iter().zip(&b).enumerate() {
        let is_f1 = g == 3;
        for r in 0..n {
            for c in 0..n {
                if is_f1 && c == window {
                    continue;
                }
                // (X A)_{rc} - (B X)_{rc}
                let mut eq = vec![f.zero(); n * n];
                for k in 0..n {
                    eq[var(r, k)] = eq[var(r, k)].add(ag.get(k, c));
                    eq[var(k, c)] = eq[var(k, c)].sub(bg.get(r, k));
                }
                if eq.iter().any(|x| !x.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(n * n);
    }
    Ok(Matrix::from_rows(&f, rows).kernel().len())
}
