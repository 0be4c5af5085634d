use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::qfield::{Field, Scalar};

/// A character of the grouplikes, given by its values on `K1` and `K2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    values: [Scalar; 2],
}

impl Character {
    pub fn new(l1: Scalar, l2: Scalar) -> Result<Character> {
        if l1.is_zero() || l2.is_zero() {
            return Err(Error::ZeroArgument);
        }
        if !l1.same_mode(&l2) {
            return Err(Error::ModeMismatch);
        }
        Ok(Character { values: [l1, l2] })
    }

    pub fn lambda1(&self) -> &Scalar {
        &self.values[0]
    }

    pub fn lambda2(&self) -> &Scalar {
        &self.values[1]
    }

    pub fn values(&self) -> &[Scalar; 2] {
        &self.values
    }

    pub fn field(&self) -> Field {
        Field::of(&self.values[0])
    }

    /// `λ(K1^a K2^b)`.
    pub fn eval(&self, k: [i32; 2]) -> Scalar {
        let a = self.values[0].pow(k[0] as i64).expect("nonzero");
        a.mul(&self.values[1].pow(k[1] as i64).expect("nonzero"))
    }

    /// `(q^a λ1, q^b λ2)`.
    pub fn shift(&self, a: i64, b: i64) -> Character {
        let f = self.field();
        Character { values: [self.values[0].mul(&f.q_pow(a)), self.values[1].mul(&f.q_pow(b))] }
    }

    /// Pointwise product.
    pub fn mul(&self, o: &Character) -> Character {
        Character { values: [self.values[0].mul(&o.values[0]), self.values[1].mul(&o.values[1])] }
    }

    /// Whether both values are `l`-th roots of unity.
    pub fn is_root_character(&self) -> Result<bool> {
        let l = self.field().require_root()? as i64;
        Ok(self.values.iter().all(|v| v.pow(l).map(|x| x.is_one()).unwrap_or(false)))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.values[0], self.values[1])
    }
}

/// The character `(q^{2m1-m2}, q^{-m1+2m2})` of the integral weight `m1ϖ1 + m2ϖ2`.
pub fn weight_character(field: &Field, m1: i64, m2: i64) -> Character {
    Character { values: [field.q_pow(2 * m1 - m2), field.q_pow(-m1 + 2 * m2)] }
}

/// Writes `s = ε q^m` with `ε = ±1`, returning `(ε, m)`.
///
/// At a root of unity `m` is the representative in `[0, l)`.
pub fn signed_q_power(s: &Scalar) -> Option<(i64, i64)> {
    let field = Field::of(s);
    match s {
        Scalar::Gen(r) => {
            let terms = r.laurent_terms()?;
            let [(e, c)] = terms.as_slice() else { return None };
            if c.abs().is_one() {
                Some((if c.is_positive() { 1 } else { -1 }, *e))
            } else {
                None
            }
        }
        Scalar::Cyc(_) => {
            let l = field.l()? as i64;
            for m in 0..l {
                let p = field.q_pow(m);
                if &p == s {
                    return Some((1, m));
                }
                if p.neg() == *s {
                    return Some((-1, m));
                }
            }
            None
        }
    }
}
