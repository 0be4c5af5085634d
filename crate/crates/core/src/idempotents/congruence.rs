use num_integer::Integer;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Residues `(t2, t3)` with `(-t2 + t3, -t2 - 2 t3) ≡ (m1, m2) (mod l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CongruenceSolution {
    pub l: u32,
    pub m1: i64,
    pub m2: i64,
    pub t2: i64,
    pub t3: i64,
    /// Bezout coefficients with `p l + 3 q = 1`.
    pub p: i64,
    pub q: i64,
}

impl CongruenceSolution {
    pub fn image(&self) -> (i64, i64) {
        let l = self.l as i64;
        ((-self.t2 + self.t3).rem_euclid(l), (-self.t2 - 2 * self.t3).rem_euclid(l))
    }

    pub fn verify(&self) -> bool {
        let l = self.l as i64;
        self.image() == (self.m1.rem_euclid(l), self.m2.rem_euclid(l)) && self.p * l + 3 * self.q == 1
    }

    pub fn to_json(&self) -> Value {
        json!({
            "l": self.l,
            "target": [self.m1, self.m2],
            "t2": self.t2,
            "t3": self.t3,
            "bezout": {"p": self.p, "q": self.q},
            "verified": self.verify(),
        })
    }
}

/// Solves the congruence from the particular solutions `(t2, t3) = (q - 1, q)`
/// for `(1, 0)` and `(-q, -q)` for `(0, 1)`, where `p l + 3 q = 1`.
pub fn congruence_solve(m1: i64, m2: i64, l: u32) -> Result<CongruenceSolution> {
    let li = l as i64;
    if l == 0 || li % 3 == 0 {
        return Err(Error::Invalid(format!("congruence needs gcd(l, 3) = 1, got l = {l}")));
    }
    let eg = li.extended_gcd(&3);
    debug_assert_eq!(eg.gcd, 1);
    let (p, q) = (eg.x, eg.y);
    let t2 = (m1 * (q - 1) - m2 * q).rem_euclid(li);
    let t3 = (m1 * q - m2 * q).rem_euclid(li);
    Ok(CongruenceSolution { l, m1, m2, t2, t3, p, q })
}
