use std::fmt;
use std::sync::Arc;

use super::{Algebra, Element, Letter};
use crate::error::{Error, Result};
use crate::qfield::Scalar;

/// A scalar times a word in the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeWord {
    pub coeff: Scalar,
    pub letters: Vec<Letter>,
}

impl FreeWord {
    pub fn new(coeff: Scalar, letters: Vec<Letter>) -> FreeWord {
        FreeWord { coeff, letters }
    }

    pub fn check(&self, alg: &Algebra) -> Result<()> {
        alg.field().check(&self.coeff)?;
        for g in &self.letters {
            if !alg.kind().allows(*g) {
                return Err(Error::IllegalGenerator { generator: g.name().into(), algebra: alg.kind().id().into() });
            }
        }
        Ok(())
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.letters.iter().map(Letter::name).collect();
        if names.is_empty() {
            write!(f, "({})", self.coeff)
        } else {
            write!(f, "({})*{}", self.coeff, names.join("*"))
        }
    }
}

/// The PBW expansion of a word.
pub fn normal_form(w: &FreeWord, alg: &Arc<Algebra>) -> Result<Element> {
    w.check(alg)?;
    let mut acc = Element::scalar(alg, w.coeff.clone());
    for g in &w.letters {
        if acc.is_zero() {
            break;
        }
        acc = acc.mul(&Element::monomial(alg, g.monomial()));
    }
    Ok(acc)
}
