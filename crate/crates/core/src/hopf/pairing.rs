use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::coalgebra::{antipode, comultiply};
use crate::error::{Error, Result};
use crate::pbw::{grade, Algebra, AlgebraKind, Element, Memo, Monomial};
use crate::qfield::{Field, FieldMode, Scalar};

/// Normalization of `φ(E1, F1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum PairingNorm {
    /// `1/(q^2 - 1)`.
    #[default]
    Printed,
    /// `1/(q - q^{-1})`, the value matching the commutator of the double.
    Balanced,
}

impl PairingNorm {
    pub fn e1f1(&self, f: &Field) -> Scalar {
        match self {
            PairingNorm::Printed => f.q_pow(2).sub(&f.one()).inv().expect("q^2 != 1"),
            PairingNorm::Balanced => f.q_minus_q_inv().inv().expect("q != q^{-1}"),
        }
    }
}

const CARTAN: [[i64; 2]; 2] = [[2, -1], [-1, 2]];

/// Simple positive letters: 0 is `E1`, 1 is `E2`.
type Word = Vec<u8>;

struct Tables {
    words: Memo<(Word, Monomial), Scalar>,
    monos: Memo<(Monomial, Monomial), Scalar>,
}

fn tables(norm: PairingNorm, mode: FieldMode) -> Arc<Tables> {
    static ALL: OnceLock<Mutex<HashMap<(PairingNorm, FieldMode), Arc<Tables>>>> = OnceLock::new();
    let all = ALL.get_or_init(|| Mutex::new(HashMap::new()));
    all.lock()
        .unwrap()
        .entry((norm, mode))
        .or_insert_with(|| Arc::new(Tables { words: Memo::new(), monos: Memo::new() }))
        .clone()
}

struct Ctx<'a> {
    norm: PairingNorm,
    leq: &'a Arc<Algebra>,
    tables: Arc<Tables>,
}

impl Ctx<'_> {
    fn field(&self) -> &Field {
        self.leq.field()
    }

    /// `φ(K^r, K^s) = q^{Σ r_i a_ij s_j}`.
    fn group(&self, r: [i32; 2], s: [i32; 2]) -> Scalar {
        let mut e = 0i64;
        for i in 0..2 {
            for j in 0..2 {
                e += r[i] as i64 * CARTAN[i][j] * s[j] as i64;
            }
        }
        self.field().q_pow(e)
    }

    fn word(&self, w: &[u8], y: &Monomial) -> Scalar {
        let f = self.field();
        let n1 = w.iter().filter(|&&c| c == 0).count() as u32;
        if (n1, w.len() as u32 - n1) != grade(y, AlgebraKind::SmallLeq0).unwrap() {
            return f.zero();
        }
        if w.is_empty() {
            return f.one();
        }
        if w.len() == 1 {
            if w[0] != 0 {
                return f.zero();
            }
            return self.norm.e1f1(f).mul(&self.group([1, 0], y.k));
        }
        let key = (w.to_vec(), *y);
        let v = self.tables.words.get_or(key, || {
            let (head, last) = w.split_at(w.len() - 1);
            let mut acc = f.zero();
            for (legs, c) in comultiply(&Element::monomial(self.leq, *y)).terms() {
                let b = self.word(last, &legs[1]);
                if b.is_zero() {
                    continue;
                }
                let a = self.word(head, &legs[0]);
                acc = acc.add(&c.mul(&a).mul(&b));
            }
            acc
        });
        (*v).clone()
    }

    /// `E^s` as a combination of words in `E1, E2`.
    fn e_words(&self, s: [u32; 3]) -> Vec<(Scalar, Word)> {
        let f = self.field();
        let mut out: Vec<(Scalar, Word)> = vec![(f.one(), vec![0; s[0] as usize])];
        for _ in 0..s[1] {
            let mut next = Vec::new();
            for (c, w) in &out {
                let mut a = w.clone();
                a.extend([0, 1]);
                next.push((c.clone(), a));
                let mut b = w.clone();
                b.extend([1, 0]);
                next.push((c.mul(&f.q_pow(-1)).neg(), b));
            }
            out = next;
        }
        for (_, w) in out.iter_mut() {
            w.extend(std::iter::repeat_n(1, s[2] as usize));
        }
        out
    }

    fn monomial(&self, a: &Monomial, y: &Monomial) -> Scalar {
        let f = self.field();
        if grade(a, AlgebraKind::SmallGeq0).unwrap() != grade(y, AlgebraKind::SmallLeq0).unwrap() {
            return f.zero();
        }
        let v = self.tables.monos.get_or((*a, *y), || {
            let words = self.e_words(a.e);
            let pair_words = |z: &Monomial| {
                words.iter().fold(f.zero(), |acc, (c, w)| acc.add(&c.mul(&self.word(w, z))))
            };
            if a.k == [0, 0] {
                return pair_words(y);
            }
            let mut acc = f.zero();
            for (legs, c) in comultiply(&Element::monomial(self.leq, *y)).terms() {
                if !legs[0].is_group() {
                    continue;
                }
                let g = self.group(a.k, legs[0].k);
                acc = acc.add(&c.mul(&g).mul(&pair_words(&legs[1])));
            }
            acc
        });
        (*v).clone()
    }
}

fn check_args(x: &Element, y: &Element) -> Result<()> {
    if x.kind() != AlgebraKind::SmallGeq0 {
        return Err(Error::AlgebraMismatch(AlgebraKind::SmallGeq0.id().into(), x.kind().id().into()));
    }
    if y.kind() != AlgebraKind::SmallLeq0 {
        return Err(Error::AlgebraMismatch(AlgebraKind::SmallLeq0.id().into(), y.kind().id().into()));
    }
    if x.field() != y.field() {
        return Err(Error::ModeMismatch);
    }
    x.field().require_root()?;
    Ok(())
}

/// The skew pairing of the two Borels with the chosen normalization.
pub fn pairing_with(norm: PairingNorm, x: &Element, y: &Element) -> Result<Scalar> {
    check_args(x, y)?;
    let ctx = Ctx { norm, leq: y.algebra(), tables: tables(norm, x.field().mode()) };
    let mut acc = x.field().zero();
    for (a, c) in x.terms() {
        for (b, d) in y.terms() {
            let v = ctx.monomial(a, b);
            if !v.is_zero() {
                acc = acc.add(&c.mul(d).mul(&v));
            }
        }
    }
    Ok(acc)
}

pub fn pairing(x: &Element, y: &Element) -> Result<Scalar> {
    pairing_with(PairingNorm::Printed, x, y)
}

/// The convolution inverse `φ^{-1}(x, y) = φ(S(x), y)`.
pub fn pairing_inverse_with(norm: PairingNorm, x: &Element, y: &Element) -> Result<Scalar> {
    check_args(x, y)?;
    pairing_with(norm, &antipode(x), y)
}

pub fn pairing_inverse(x: &Element, y: &Element) -> Result<Scalar> {
    pairing_inverse_with(PairingNorm::Printed, x, y)
}
