//! The coefficient type shared by both field modes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::cyclo::{CycElem, CycloField};
use super::poly::QPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Gen(RatFunc),
    Cyc(CycElem),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Gen(r) => r.is_zero(),
            Scalar::Cyc(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Gen(r) => r.is_one(),
            Scalar::Cyc(c) => c.is_one(),
        }
    }

    pub fn zero_like(&self) -> Scalar {
        match self {
            Scalar::Gen(_) => Scalar::Gen(RatFunc::zero()),
            Scalar::Cyc(c) => Scalar::Cyc(CycElem::zero(c.field())),
        }
    }

    pub fn one_like(&self) -> Scalar {
        match self {
            Scalar::Gen(_) => Scalar::Gen(RatFunc::one()),
            Scalar::Cyc(c) => Scalar::Cyc(CycElem::zeta_pow(c.field(), 0)),
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Gen(a), Scalar::Gen(b)) => Scalar::Gen(a.add(b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(a.add(b)),
            _ => panic!("scalar field mode mismatch"),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Gen(a), Scalar::Gen(b)) => Scalar::Gen(a.sub(b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(a.sub(b)),
            _ => panic!("scalar field mode mismatch"),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Gen(a), Scalar::Gen(b)) => Scalar::Gen(a.mul(b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(a.mul(b)),
            _ => panic!("scalar field mode mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Gen(a) => Scalar::Gen(a.neg()),
            Scalar::Cyc(a) => Scalar::Cyc(a.neg()),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Gen(a) => a.inv().map(Scalar::Gen),
            Scalar::Cyc(a) => a.inv().map(Scalar::Cyc),
        }
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        let inv = o.inv().ok_or(Error::DivisionByZero)?;
        Ok(self.mul(&inv))
    }

    /// Integer power; negative exponents need an invertible base.
    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv().ok_or(Error::DivisionByZero)? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.one_like();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    pub fn same_mode(&self, o: &Scalar) -> bool {
        match (self, o) {
            (Scalar::Gen(_), Scalar::Gen(_)) => true,
            (Scalar::Cyc(a), Scalar::Cyc(b)) => a.l() == b.l(),
            _ => false,
        }
    }

    /// The rational value when the scalar lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Gen(r) => r.constant_value(),
            Scalar::Cyc(c) => {
                let co = c.coords();
                if co[1..].iter().all(|v| v.is_zero()) {
                    Some(co[0].clone())
                } else {
                    None
                }
            }
        }
    }

    pub fn to_json(&self) -> Value {
        fn terms(p: &QPoly) -> Value {
            Value::Array(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| json!([e, c.to_string()]))
                    .collect(),
            )
        }
        match self {
            Scalar::Gen(r) => json!({"num": terms(r.num()), "den": terms(r.den())}),
            Scalar::Cyc(c) => {
                json!({"l": c.l(), "zeta": c.coords().iter().map(|v| v.to_string()).collect::<Vec<_>>()})
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Scalar> {
        let bad = |m: &str| Error::Json(m.to_string());
        if let Some(l) = v.get("l") {
            let l = l.as_u64().ok_or_else(|| bad("l must be an integer"))? as u32;
            if l < 3 {
                return Err(Error::InvalidOrder(l));
            }
            let field = CycloField::get(l);
            let arr = v.get("zeta").and_then(Value::as_array).ok_or_else(|| bad("missing zeta"))?;
            if arr.len() != field.degree() {
                return Err(bad("zeta vector has wrong length"));
            }
            let coords = arr
                .iter()
                .map(|s| s.as_str().ok_or_else(|| bad("coordinate must be a string")).and_then(parse_rational))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Scalar::Cyc(CycElem::from_coords(&field, &coords)));
        }
        let laurent = |key: &str| -> Result<RatFunc> {
            let arr = v.get(key).and_then(Value::as_array).ok_or_else(|| bad(&format!("missing {key}")))?;
            let mut acc = RatFunc::zero();
            for t in arr {
                let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("term must be [e, \"p/q\"]"))?;
                let e = pair[0].as_i64().ok_or_else(|| bad("exponent must be an integer"))?;
                let c = parse_rational(pair[1].as_str().ok_or_else(|| bad("coefficient must be a string"))?)?;
                acc = acc.add(&RatFunc::from_rational(c).mul(&RatFunc::q_pow(e)));
            }
            Ok(acc)
        };
        let num = laurent("num")?;
        let den = laurent("den")?;
        let inv = den.inv().ok_or(Error::DivisionByZero)?;
        Ok(Scalar::Gen(num.mul(&inv)))
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let err = || Error::Json(format!("malformed rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| err())?)),
    }
}

/// Writes a polynomial in `q` with exponents offset by `shift`.
fn write_laurent(f: &mut fmt::Formatter<'_>, coeffs: &[BigRational], shift: i64) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let e = i as i64 - shift;
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let show = !a.is_one() || e == 0;
        if show {
            write!(f, "{}", a)?;
        }
        if e != 0 {
            if show {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "q")?;
            } else {
                write!(f, "q^{}", e)?;
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn term_count(coeffs: &[BigRational]) -> usize {
    coeffs.iter().filter(|c| !c.is_zero()).count()
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Gen(r) => {
                if r.is_laurent() {
                    // the denominator is exactly q^shift
                    write_laurent(f, r.num().coeffs(), r.den().degree().unwrap() as i64)
                } else {
                    let n = r.num().coeffs();
                    if term_count(n) > 1 {
                        write!(f, "(")?;
                        write_laurent(f, n, 0)?;
                        write!(f, ")")?;
                    } else {
                        write_laurent(f, n, 0)?;
                    }
                    write!(f, "/(")?;
                    write_laurent(f, r.den().coeffs(), 0)?;
                    write!(f, ")")
                }
            }
            Scalar::Cyc(c) => write_laurent(f, &c.coords(), 0),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::add(self, o)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::sub(self, o)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar::mul(self, o)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}
