//! Quantum integers, factorials and binomials.

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// `[n]_q = (q^n - q^{-n}) / (q - q^{-1})`, expanded as `q^{n-1} + q^{n-3} + … + q^{1-n}`.
pub fn q_int(f: &Field, n: i64) -> Scalar {
    if n < 0 {
        return q_int(f, -n).neg();
    }
    let mut acc = f.zero();
    for k in 0..n {
        acc = acc.add(&f.q_pow(n - 1 - 2 * k));
    }
    acc
}

pub fn q_factorial(f: &Field, n: i64) -> Result<Scalar> {
    if n < 0 {
        return Err(Error::NegativeArgument(n));
    }
    let mut acc = f.one();
    for k in 1..=n {
        acc = acc.mul(&q_int(f, k));
    }
    Ok(acc)
}

/// Gaussian binomial via `[n,j] = q^{-j}[n-1,j] + q^{n-j}[n-1,j-1]`, which stays
/// division-free and therefore valid at roots of unity.
pub fn q_binomial(f: &Field, n: i64, j: i64) -> Result<Scalar> {
    if n < 0 || j < 0 || j > n {
        return Err(Error::BinomialRange { n, j });
    }
    let (n, j) = (n as usize, j as usize);
    let mut row = vec![f.one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let mut v = f.zero();
            if k < m {
                v = v.add(&f.q_pow(-(k as i64)).mul(&row[k]));
            }
            if k > 0 {
                v = v.add(&f.q_pow((m - k) as i64).mul(&row[k - 1]));
            }
            next.push(v);
        }
        row = next;
    }
    Ok(row[j].clone())
}

/// `[a;n]_q = (a q^n - a^{-1} q^{-n}) / (q - q^{-1})`.
pub fn q_bracket_a(f: &Field, a: &Scalar, n: i64) -> Result<Scalar> {
    f.check(a)?;
    let ainv = a.inv().ok_or(Error::ZeroArgument)?;
    let top = a.mul(&f.q_pow(n)).sub(&ainv.mul(&f.q_pow(-n)));
    top.div(&f.q_minus_q_inv())
}

/// `[a;n]_q! = [a;n][a;n-1]…[a;1]` for `n >= 0`.
fn q_factorial_a(f: &Field, a: &Scalar, n: i64) -> Result<Scalar> {
    let mut acc = f.one();
    for k in 1..=n {
        acc = acc.mul(&q_bracket_a(f, a, k)?);
    }
    Ok(acc)
}

/// The binomial `[a;n choose j]_q`, computed as `Π_{k<j} [a;n-k]_q / [j]_q!`.
///
/// This equals the factorial quotient for `n >= j` and the shifted value for
/// `n < j`, for every admissible shift.
pub fn q_binomial_a(f: &Field, a: &Scalar, n: i64, j: i64) -> Result<Scalar> {
    if j < 0 {
        return Err(Error::NegativeArgument(j));
    }
    if a.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut num = f.one();
    for k in 0..j {
        num = num.mul(&q_bracket_a(f, a, n - k)?);
    }
    num.div(&q_factorial(f, j)?)
}

/// The factorial-quotient definition, with `a ↦ a q^{-j-s}`, `n ↦ n+j+s` when `n < j`.
pub fn q_binomial_a_shifted(f: &Field, a: &Scalar, n: i64, j: i64, s: i64) -> Result<Scalar> {
    if j < 0 {
        return Err(Error::NegativeArgument(j));
    }
    if a.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let (a, n) = if n < j {
        if n + s < 0 {
            return Err(Error::Invalid(format!("shift s={s} needs n+s >= 0 (n={n})")));
        }
        (a.mul(&f.q_pow(-j - s)), n + j + s)
    } else {
        (a.clone(), n)
    };
    let top = q_factorial_a(f, &a, n)?;
    let bottom = q_factorial(f, j)?.mul(&q_factorial_a(f, &a, n - j)?);
    top.div(&bottom)
}

/// The square root `ζ^{k(l+1)/2}` of `z = ζ^k` for odd `l`.
pub fn zeta_sqrt(f: &Field, z: &Scalar) -> Result<Scalar> {
    let l = f.require_odd()?;
    f.check(z)?;
    let k = match z {
        Scalar::Cyc(c) => c.root_exponent().ok_or(Error::NotRootOfUnity)?,
        Scalar::Gen(_) => return Err(Error::NeedsRootOfUnity),
    };
    Ok(f.q_pow((k as i64) * ((l as i64 + 1) / 2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let g = Field::generic();
        assert!(q_int(&g, 0).is_zero());
        assert_eq!(q_int(&g, 2), g.q().add(&g.q_pow(-1)));
        assert_eq!(q_int(&g, -3), q_int(&g, 3).neg());
        let r = Field::root_of_unity(3).unwrap();
        assert!(q_int(&r, 3).is_zero());
    }

    #[test]
    fn q_int_matches_quotient() {
        let g = Field::generic();
        for n in -5..=7 {
            let quo = g.q_pow(n).sub(&g.q_pow(-n)).div(&g.q_minus_q_inv()).unwrap();
            assert_eq!(q_int(&g, n), quo);
        }
    }

    #[test]
    fn binomial_four_two() {
        let g = Field::generic();
        let expect = [4i64, 2, 0, -2, -4].iter().fold(g.zero(), |acc, &e| acc.add(&g.q_pow(e))).add(&g.one());
        assert_eq!(q_binomial(&g, 4, 2).unwrap(), expect);
        assert!(q_binomial(&g, 2, 3).is_err());
    }

    #[test]
    fn sqrt_examples() {
        let r3 = Field::root_of_unity(3).unwrap();
        assert_eq!(zeta_sqrt(&r3, &r3.q()).unwrap(), r3.q_pow(2));
        assert!(zeta_sqrt(&r3, &r3.one()).unwrap().is_one());
        let r5 = Field::root_of_unity(5).unwrap();
        assert_eq!(zeta_sqrt(&r5, &r5.q_pow(2)).unwrap(), r5.q());
        assert!(zeta_sqrt(&r5, &r5.int(2)).is_err());
        assert!(zeta_sqrt(&Field::root_of_unity(4).unwrap(), &r5.q()).is_err());
    }
}
