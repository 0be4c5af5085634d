//! Exact coefficient fields: rational functions in `q`, or ℚ(ζ_l) with `q = ζ_l`.

mod cyclo;
mod matrix;
mod poly;
mod qnum;
mod ratfunc;
mod scalar;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

pub use cyclo::{cyclotomic_poly, CycElem, CycloField};
pub use matrix::Matrix;
pub use poly::QPoly;
pub use qnum::{
    q_binomial, q_binomial_a, q_binomial_a_shifted, q_bracket_a, q_factorial, q_int, zeta_sqrt,
};
pub use ratfunc::RatFunc;
pub use scalar::{parse_rational, Scalar};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldMode {
    Generic,
    RootOfUnity { l: u32 },
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Generic => write!(f, "generic"),
            FieldMode::RootOfUnity { l } => write!(f, "l={l}"),
        }
    }
}

impl FieldMode {
    pub fn to_json(&self) -> Value {
        match self {
            FieldMode::Generic => json!("generic"),
            FieldMode::RootOfUnity { l } => json!({ "l": l }),
        }
    }

    pub fn from_json(v: &Value) -> Result<FieldMode> {
        if v.as_str() == Some("generic") {
            return Ok(FieldMode::Generic);
        }
        match v.get("l").and_then(Value::as_u64) {
            Some(l) => Ok(FieldMode::RootOfUnity { l: l as u32 }),
            None => Err(Error::Json("mode must be \"generic\" or {\"l\": n}".into())),
        }
    }
}

/// A field context: hands out constants of the active mode.
#[derive(Clone)]
pub struct Field {
    mode: FieldMode,
    cyc: Option<Arc<CycloField>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.mode)
    }
}

impl PartialEq for Field {
    fn eq(&self, o: &Self) -> bool {
        self.mode == o.mode
    }
}

impl Eq for Field {}

impl Field {
    pub fn generic() -> Field {
        Field { mode: FieldMode::Generic, cyc: None }
    }

    pub fn root_of_unity(l: u32) -> Result<Field> {
        if l < 3 {
            return Err(Error::InvalidOrder(l));
        }
        Ok(Field { mode: FieldMode::RootOfUnity { l }, cyc: Some(CycloField::get(l)) })
    }

    pub fn new(mode: FieldMode) -> Result<Field> {
        match mode {
            FieldMode::Generic => Ok(Field::generic()),
            FieldMode::RootOfUnity { l } => Field::root_of_unity(l),
        }
    }

    /// The field a scalar lives in.
    pub fn of(s: &Scalar) -> Field {
        match s {
            Scalar::Gen(_) => Field::generic(),
            Scalar::Cyc(c) => Field { mode: FieldMode::RootOfUnity { l: c.l() }, cyc: Some(c.field().clone()) },
        }
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn l(&self) -> Option<u32> {
        match self.mode {
            FieldMode::Generic => None,
            FieldMode::RootOfUnity { l } => Some(l),
        }
    }

    pub fn is_root(&self) -> bool {
        self.cyc.is_some()
    }

    pub fn require_root(&self) -> Result<u32> {
        self.l().ok_or(Error::NeedsRootOfUnity)
    }

    pub fn require_odd(&self) -> Result<u32> {
        let l = self.require_root()?;
        if l % 2 == 0 {
            return Err(Error::EvenOrder(l));
        }
        Ok(l)
    }

    pub fn require_generic(&self) -> Result<()> {
        if self.is_root() {
            Err(Error::NeedsGeneric)
        } else {
            Ok(())
        }
    }

    pub fn zero(&self) -> Scalar {
        match &self.cyc {
            None => Scalar::Gen(RatFunc::zero()),
            Some(f) => Scalar::Cyc(CycElem::zero(f)),
        }
    }

    pub fn one(&self) -> Scalar {
        self.q_pow(0)
    }

    pub fn q(&self) -> Scalar {
        self.q_pow(1)
    }

    pub fn q_pow(&self, k: i64) -> Scalar {
        match &self.cyc {
            None => Scalar::Gen(RatFunc::q_pow(k)),
            Some(f) => Scalar::Cyc(CycElem::zeta_pow(f, k)),
        }
    }

    pub fn from_rational(&self, v: &BigRational) -> Scalar {
        match &self.cyc {
            None => Scalar::Gen(RatFunc::from_rational(v.clone())),
            Some(f) => Scalar::Cyc(CycElem::from_rational(f, v)),
        }
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(&self, p: i64, q: i64) -> Scalar {
        self.from_rational(&BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Evaluates a polynomial in `q` with rational coefficients.
    pub fn from_poly(&self, p: &QPoly) -> Scalar {
        let mut acc = self.zero();
        for (e, c) in p.coeffs().iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                acc = acc.add(&self.from_rational(c).mul(&self.q_pow(e as i64)));
            }
        }
        acc
    }

    /// Builds a scalar of this field from another mode's scalar; generic
    /// values are specialized at `q = ζ_l` when that is defined.
    pub fn coerce(&self, s: &Scalar) -> Result<Scalar> {
        match (s, &self.cyc) {
            (Scalar::Gen(r), None) => Ok(Scalar::Gen(r.clone())),
            (Scalar::Gen(r), Some(_)) => {
                let n = self.from_poly(r.num());
                let d = self.from_poly(r.den());
                n.div(&d)
            }
            (Scalar::Cyc(c), Some(f)) if c.l() == f.l() => Ok(s.clone()),
            _ => Err(Error::ModeMismatch),
        }
    }

    pub fn check(&self, s: &Scalar) -> Result<()> {
        if Field::of(s) == *self {
            Ok(())
        } else {
            Err(Error::ModeMismatch)
        }
    }

    /// `q - q^{-1}`, nonzero in every admissible mode.
    pub fn q_minus_q_inv(&self) -> Scalar {
        self.q().sub(&self.q_pow(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_orders() {
        assert_eq!(Field::root_of_unity(2).unwrap_err(), Error::InvalidOrder(2));
        assert!(Field::root_of_unity(4).unwrap().require_odd().is_err());
    }

    #[test]
    fn json_round_trip() {
        for f in [Field::generic(), Field::root_of_unity(5).unwrap()] {
            let x = f.q_pow(-3).add(&f.rational(2, 7)).div(&f.q().sub(&f.int(3))).unwrap();
            let j = x.to_json();
            assert_eq!(Scalar::from_json(&j).unwrap(), x);
            assert_eq!(Scalar::from_json(&j).unwrap().to_json(), j);
        }
    }

    #[test]
    fn coerce_generic_into_root() {
        let g = Field::generic();
        let r = Field::root_of_unity(3).unwrap();
        let x = g.q().add(&g.q_pow(-1));
        // ζ + ζ² = -1
        assert_eq!(r.coerce(&x).unwrap(), r.int(-1));
    }
}
