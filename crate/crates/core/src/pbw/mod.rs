//! PBW bases, the straightening engine and elements of the algebras.

mod checks;
mod element;
mod engine;
mod oracle;
mod relations;
mod sample;
mod word;

use std::fmt;

use crate::error::{Error, Result};

pub use checks::{central_check, enumerate_basis, grade, qcommutator_check, RootVector};
pub use element::Element;
pub use engine::Algebra;
pub(crate) use element::write_sum;
pub(crate) use engine::{Acc, Memo};
pub use oracle::oracle_normal_form;
pub use relations::{defining_relations, relation_failures, Relation};
pub use sample::{random_coefficient, random_element, random_monomial};
pub use word::{normal_form, FreeWord};

/// The algebras the engine knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    /// The infinite-dimensional algebra with free abelian group of grouplikes.
    U,
    /// The finite quotient by `l`-th powers.
    Small,
    /// The positive Borel of the quotient.
    SmallGeq0,
    /// The negative Borel of the quotient.
    SmallLeq0,
    /// The small quantum group generated by `E1, F1, K1`.
    Small1,
    /// The double with the extra grouplikes `Kt1, Kt2`.
    Double,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 6] = [
        AlgebraKind::U,
        AlgebraKind::Small,
        AlgebraKind::SmallGeq0,
        AlgebraKind::SmallLeq0,
        AlgebraKind::Small1,
        AlgebraKind::Double,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            AlgebraKind::U => "U",
            AlgebraKind::Small => "u",
            AlgebraKind::SmallGeq0 => "uGeq0",
            AlgebraKind::SmallLeq0 => "uLeq0",
            AlgebraKind::Small1 => "u1",
            AlgebraKind::Double => "Dphi",
        }
    }

    pub fn from_id(s: &str) -> Result<AlgebraKind> {
        AlgebraKind::ALL
            .into_iter()
            .find(|k| k.id() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown algebra {s:?}")))
    }

    /// Whether exponents are truncated at `l` and grouplikes reduced mod `l`.
    pub fn is_quotient(&self) -> bool {
        !matches!(self, AlgebraKind::U)
    }

    pub fn has_tilde(&self) -> bool {
        matches!(self, AlgebraKind::Double)
    }

    pub fn allows(&self, letter: Letter) -> bool {
        use Letter::*;
        match self {
            AlgebraKind::U | AlgebraKind::Small => !letter.is_tilde(),
            AlgebraKind::SmallGeq0 => letter.is_e() || letter.is_k(),
            AlgebraKind::SmallLeq0 => letter.is_f() || letter.is_k(),
            AlgebraKind::Small1 => matches!(letter, E1 | F1 | K1 | K1Inv),
            AlgebraKind::Double => true,
        }
    }

    /// The generators used for centrality and module checks.
    pub fn generators(&self) -> Vec<Letter> {
        Letter::ALL.into_iter().filter(|g| self.allows(*g)).collect()
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// Generator symbols of free words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    E1,
    E12,
    E2,
    F1,
    F12,
    F2,
    K1,
    K1Inv,
    K2,
    K2Inv,
    Kt1,
    Kt1Inv,
    Kt2,
    Kt2Inv,
}

impl Letter {
    pub const ALL: [Letter; 14] = [
        Letter::E1,
        Letter::E12,
        Letter::E2,
        Letter::F1,
        Letter::F12,
        Letter::F2,
        Letter::K1,
        Letter::K1Inv,
        Letter::K2,
        Letter::K2Inv,
        Letter::Kt1,
        Letter::Kt1Inv,
        Letter::Kt2,
        Letter::Kt2Inv,
    ];

    /// The six basic generators `E1, E2, F1, F2, K1, K2`.
    pub const BASIC: [Letter; 6] = [Letter::E1, Letter::E2, Letter::F1, Letter::F2, Letter::K1, Letter::K2];

    pub fn is_e(&self) -> bool {
        matches!(self, Letter::E1 | Letter::E12 | Letter::E2)
    }

    pub fn is_f(&self) -> bool {
        matches!(self, Letter::F1 | Letter::F12 | Letter::F2)
    }

    pub fn is_k(&self) -> bool {
        matches!(self, Letter::K1 | Letter::K1Inv | Letter::K2 | Letter::K2Inv)
    }

    pub fn is_tilde(&self) -> bool {
        matches!(self, Letter::Kt1 | Letter::Kt1Inv | Letter::Kt2 | Letter::Kt2Inv)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Letter::E1 => "E1",
            Letter::E12 => "E12",
            Letter::E2 => "E2",
            Letter::F1 => "F1",
            Letter::F12 => "F12",
            Letter::F2 => "F2",
            Letter::K1 => "K1",
            Letter::K1Inv => "K1^-1",
            Letter::K2 => "K2",
            Letter::K2Inv => "K2^-1",
            Letter::Kt1 => "Kt1",
            Letter::Kt1Inv => "Kt1^-1",
            Letter::Kt2 => "Kt2",
            Letter::Kt2Inv => "Kt2^-1",
        }
    }

    pub fn from_name(s: &str) -> Option<Letter> {
        Letter::ALL.into_iter().find(|g| g.name() == s)
    }

    /// The unreduced exponent record of the letter.
    pub fn monomial(&self) -> Monomial {
        let mut m = Monomial::one();
        match self {
            Letter::E1 => m.e[0] = 1,
            Letter::E12 => m.e[1] = 1,
            Letter::E2 => m.e[2] = 1,
            Letter::F1 => m.f[0] = 1,
            Letter::F12 => m.f[1] = 1,
            Letter::F2 => m.f[2] = 1,
            Letter::K1 => m.k[0] = 1,
            Letter::K1Inv => m.k[0] = -1,
            Letter::K2 => m.k[1] = 1,
            Letter::K2Inv => m.k[1] = -1,
            Letter::Kt1 => m.kt[0] = 1,
            Letter::Kt1Inv => m.kt[0] = -1,
            Letter::Kt2 => m.kt[1] = 1,
            Letter::Kt2Inv => m.kt[1] = -1,
        }
        m
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Exponents of `F1^f0 F12^f1 F2^f2 K1^k0 K2^k1 Kt1^kt0 Kt2^kt1 E1^e0 E12^e1 E2^e2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    pub f: [u32; 3],
    pub k: [i32; 2],
    pub kt: [i32; 2],
    pub e: [u32; 3],
}

/// `c[j][i]`: exponent of `q` in `K_i X_j K_i^{-1} = q^{c} X_j` for `X = E1, E12, E2`.
pub(crate) const E_WEIGHT: [[i64; 2]; 3] = [[2, -1], [1, 1], [-1, 2]];

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn from_parts(f: [u32; 3], k: [i32; 2], kt: [i32; 2], e: [u32; 3]) -> Monomial {
        Monomial { f, k, kt, e }
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::one()
    }

    pub fn is_group(&self) -> bool {
        self.f == [0; 3] && self.e == [0; 3]
    }

    pub fn degree(&self) -> u32 {
        self.f.iter().sum::<u32>() + self.e.iter().sum::<u32>()
    }

    /// The conjugation weight of the `E` part under `(K1, K2)`.
    pub fn e_weight(&self) -> [i64; 2] {
        block_weight(&self.e)
    }

    /// The conjugation weight of the `F` part under `(K1, K2)`.
    pub fn f_weight(&self) -> [i64; 2] {
        let w = block_weight(&self.f);
        [-w[0], -w[1]]
    }

    /// Total conjugation weight: `K_i m K_i^{-1} = q^{w_i} m`.
    pub fn weight(&self) -> [i64; 2] {
        let a = self.e_weight();
        let b = self.f_weight();
        [a[0] + b[0], a[1] + b[1]]
    }

    /// The generator letters of the monomial in PBW order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        let push = |out: &mut Vec<Letter>, l: Letter, n: u32| out.extend(std::iter::repeat_n(l, n as usize));
        push(&mut out, Letter::F1, self.f[0]);
        push(&mut out, Letter::F12, self.f[1]);
        push(&mut out, Letter::F2, self.f[2]);
        let pm = |out: &mut Vec<Letter>, p: Letter, m: Letter, n: i32| {
            if n >= 0 {
                out.extend(std::iter::repeat_n(p, n as usize))
            } else {
                out.extend(std::iter::repeat_n(m, (-n) as usize))
            }
        };
        pm(&mut out, Letter::K1, Letter::K1Inv, self.k[0]);
        pm(&mut out, Letter::K2, Letter::K2Inv, self.k[1]);
        pm(&mut out, Letter::Kt1, Letter::Kt1Inv, self.kt[0]);
        pm(&mut out, Letter::Kt2, Letter::Kt2Inv, self.kt[1]);
        push(&mut out, Letter::E1, self.e[0]);
        push(&mut out, Letter::E12, self.e[1]);
        push(&mut out, Letter::E2, self.e[2]);
        out
    }
}

pub(crate) fn block_weight(x: &[u32; 3]) -> [i64; 2] {
    let mut w = [0i64; 2];
    for j in 0..3 {
        for (i, wi) in w.iter_mut().enumerate() {
            *wi += x[j] as i64 * E_WEIGHT[j][i];
        }
    }
    w
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let names_f = ["F1", "F12", "F2"];
        let names_e = ["E1", "E12", "E2"];
        let mut pw = |name: &str, n: i64| {
            if n == 1 {
                parts.push(name.to_string());
            } else if n != 0 {
                parts.push(format!("{name}^{n}"));
            }
        };
        for j in 0..3 {
            pw(names_f[j], self.f[j] as i64);
        }
        pw("K1", self.k[0] as i64);
        pw("K2", self.k[1] as i64);
        pw("Kt1", self.kt[0] as i64);
        pw("Kt2", self.kt[1] as i64);
        for j in 0..3 {
            pw(names_e[j], self.e[j] as i64);
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}
