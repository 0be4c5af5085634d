use std::sync::Arc;

use super::{Algebra, AlgebraKind, Element, Letter, Monomial};
use crate::error::{Error, Result};

/// Whether `x` commutes with every generator of its algebra.
pub fn central_check(x: &Element) -> bool {
    let alg = x.algebra();
    alg.kind().generators().into_iter().all(|g| {
        let g = Element::monomial(alg, g.monomial());
        x.mul(&g) == g.mul(x)
    })
}

/// The `Q`-degree `(coefficient of α1, coefficient of α2)` of a Borel monomial.
pub fn grade(m: &Monomial, kind: AlgebraKind) -> Result<(u32, u32)> {
    let x = match kind {
        AlgebraKind::SmallGeq0 => m.e,
        AlgebraKind::SmallLeq0 => m.f,
        _ => return Err(Error::Invalid(format!("grading is defined on the Borels, not {kind}"))),
    };
    Ok((x[0] + x[1], x[1] + x[2]))
}

/// Inclusive exponent ranges for `(f0,f1,f2,k0,k1,kt0,kt1,e0,e1,e2)`.
fn ranges(alg: &Algebra, cap: Option<u32>) -> Result<[(i64, i64); 10]> {
    let kind = alg.kind();
    let (top, klo, khi) = match alg.modulus() {
        Some(l) => (l as i64 - 1, 0, l as i64 - 1),
        None => {
            let c = cap.ok_or_else(|| Error::Unbounded(kind.id().into()))? as i64;
            (c, -c, c)
        }
    };
    let block = (0, top);
    let none = (0, 0);
    let group = (klo, khi);
    let r = match kind {
        AlgebraKind::U | AlgebraKind::Small => [block, block, block, group, group, none, none, block, block, block],
        AlgebraKind::SmallGeq0 => [none, none, none, group, group, none, none, block, block, block],
        AlgebraKind::SmallLeq0 => [block, block, block, group, group, none, none, none, none, none],
        AlgebraKind::Small1 => [block, none, none, group, none, none, none, block, none, none],
        AlgebraKind::Double => [block, block, block, group, group, group, group, block, block, block],
    };
    Ok(r)
}

/// All basis monomials of a finite algebra (or of `U` within an exponent cap).
pub struct BasisEnumeration {
    ranges: [(i64, i64); 10],
    count: usize,
}

impl BasisEnumeration {
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn iter(&self) -> impl Iterator<Item = Monomial> + '_ {
        let mut cur: Option<[i64; 10]> = Some(self.ranges.map(|r| r.0));
        std::iter::from_fn(move || {
            let v = cur?;
            let m = Monomial {
                f: [v[0] as u32, v[1] as u32, v[2] as u32],
                k: [v[3] as i32, v[4] as i32],
                kt: [v[5] as i32, v[6] as i32],
                e: [v[7] as u32, v[8] as u32, v[9] as u32],
            };
            let mut next = v;
            let mut i = 9;
            loop {
                if next[i] < self.ranges[i].1 {
                    next[i] += 1;
                    cur = Some(next);
                    break;
                }
                next[i] = self.ranges[i].0;
                if i == 0 {
                    cur = None;
                    break;
                }
                i -= 1;
            }
            Some(m)
        })
    }
}

pub fn enumerate_basis(alg: &Arc<Algebra>, cap: Option<u32>) -> Result<BasisEnumeration> {
    let ranges = ranges(alg, cap)?;
    let count = ranges.iter().map(|(lo, hi)| (hi - lo + 1) as usize).product();
    Ok(BasisEnumeration { ranges, count })
}

/// Root vectors of the two positive systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootVector {
    E1,
    E12,
    E2,
    F1,
    F12,
    F2,
}

impl RootVector {
    pub const ALL: [RootVector; 6] =
        [RootVector::E1, RootVector::E12, RootVector::E2, RootVector::F1, RootVector::F12, RootVector::F2];

    pub fn letter(&self) -> Letter {
        match self {
            RootVector::E1 => Letter::E1,
            RootVector::E12 => Letter::E12,
            RootVector::E2 => Letter::E2,
            RootVector::F1 => Letter::F1,
            RootVector::F12 => Letter::F12,
            RootVector::F2 => Letter::F2,
        }
    }

    pub fn from_name(s: &str) -> Result<RootVector> {
        RootVector::ALL
            .into_iter()
            .find(|r| r.letter().name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown root vector {s:?}")))
    }

    /// Exponents of the grouplike `g_α` in `(K1, K2)`.
    pub fn group(&self) -> [i64; 2] {
        match self {
            RootVector::E1 => [1, 0],
            RootVector::E2 => [0, 1],
            RootVector::E12 => [1, 1],
            RootVector::F1 => [-1, 0],
            RootVector::F2 => [0, -1],
            RootVector::F12 => [-1, -1],
        }
    }

    /// `χ_α(K_i) = q^{w_i}`.
    pub fn character(&self) -> [i64; 2] {
        self.letter().monomial().weight()
    }
}

/// Checks `x_α x_β^N = q_{αβ}^N x_β^N x_α` in `U` at the root of unity, with
/// `q_{αβ} = χ_β(g_α)`.
pub fn qcommutator_check(alpha: RootVector, beta: RootVector, u: &Arc<Algebra>, n: u32) -> Result<bool> {
    if u.kind() != AlgebraKind::U {
        return Err(Error::Invalid("q-commutation is checked in U".into()));
    }
    u.field().require_root()?;
    let xa = Element::monomial(u, alpha.letter().monomial());
    let xb = Element::monomial(u, beta.letter().monomial()).pow(n);
    let g = alpha.group();
    let w = beta.character();
    let qab = u.field().q_pow((g[0] * w[0] + g[1] * w[1]) * n as i64);
    let lhs = xa.mul(&xb);
    let rhs = xb.mul(&xa).scale(&qab);
    Ok(lhs == rhs)
}
