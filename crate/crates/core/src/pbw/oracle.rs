//! A slow reference rewriter used to cross-check the engine.
//!
//! Words are brought to the shape `(F-word)(grouplikes)(E-word)` using only the
//! relations between simple generators and grouplikes. The remaining `E`- and
//! `F`-words are then written in the PBW basis by solving a linear system in
//! the free algebra modulo the Serre relations.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::engine::Acc;
use super::{Algebra, Element, FreeWord, Letter, Monomial};
use crate::error::{Error, Result};
use crate::qfield::{q_int, Field, FieldMode, Matrix, Scalar};

pub const ORACLE_MAX_LETTERS: usize = 12;

/// `(F-word, K exponents, Kt exponents, E-word)`, words over indices `0 = X1`, `1 = X2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Shaped {
    fw: Vec<u8>,
    k: [i32; 2],
    kt: [i32; 2],
    ew: Vec<u8>,
}

/// Simple-root conjugation exponents `K_i E_j K_i^{-1} = q^{A[j][i]} E_j`.
const CARTAN: [[i64; 2]; 2] = [[2, -1], [-1, 2]];

fn word_weight(w: &[u8]) -> [i64; 2] {
    let mut out = [0, 0];
    for &j in w {
        out[0] += CARTAN[j as usize][0];
        out[1] += CARTAN[j as usize][1];
    }
    out
}

struct Rewriter<'a> {
    field: &'a Field,
    tilde: bool,
    comm: Scalar,
}

impl Rewriter<'_> {
    fn append(&self, t: &Shaped, c: &Scalar, g: RawLetter, out: &mut Vec<(Shaped, Scalar)>) {
        match g {
            RawLetter::K { tilde, i, sign } => {
                // E-word · K_i^{±1} = q^{∓ c_i(E-word)} K_i^{±1} · E-word
                let w = word_weight(&t.ew)[i];
                let coef = c.mul(&self.field.q_pow(-(sign as i64) * w));
                let mut n = t.clone();
                if tilde {
                    n.kt[i] += sign;
                } else {
                    n.k[i] += sign;
                }
                out.push((n, coef));
            }
            RawLetter::E(j) => {
                let mut n = t.clone();
                n.ew.push(j);
                out.push((n, c.clone()));
            }
            RawLetter::F(j) => {
                if let Some((&last, rest)) = t.ew.split_last() {
                    let prefix = Shaped { ew: rest.to_vec(), ..t.clone() };
                    // w' E_i F_j = (w' F_j) E_i + w' [E_i, F_j]
                    let mut mid = Vec::new();
                    self.append(&prefix, c, RawLetter::F(j), &mut mid);
                    for (m, d) in mid {
                        self.append(&m, &d, RawLetter::E(last), out);
                    }
                    if last == 0 && j == 0 {
                        let c1 = c.mul(&self.comm);
                        self.append(&prefix, &c1, RawLetter::K { tilde: false, i: 0, sign: 1 }, out);
                        self.append(&prefix, &c1.neg(), RawLetter::K { tilde: self.tilde, i: 0, sign: -1 }, out);
                    }
                } else {
                    // K F_j = q^{-A_j · k} F_j K
                    let kk = [(t.k[0] + t.kt[0]) as i64, (t.k[1] + t.kt[1]) as i64];
                    let e = -(kk[0] * CARTAN[j as usize][0] + kk[1] * CARTAN[j as usize][1]);
                    let mut n = t.clone();
                    n.fw.push(j);
                    out.push((n, c.mul(&self.field.q_pow(e))));
                }
            }
        }
    }
}

#[derive(Clone, Copy)]
enum RawLetter {
    E(u8),
    F(u8),
    K { tilde: bool, i: usize, sign: i32 },
}

/// Expands `E12`, `F12` by their definitions into raw words.
fn expand_word(f: &Field, letters: &[Letter]) -> Vec<(Vec<RawLetter>, Scalar)> {
    let mut words: Vec<(Vec<RawLetter>, Scalar)> = vec![(Vec::new(), f.one())];
    for g in letters {
        let options: Vec<(Vec<RawLetter>, Scalar)> = match g {
            Letter::E1 => vec![(vec![RawLetter::E(0)], f.one())],
            Letter::E2 => vec![(vec![RawLetter::E(1)], f.one())],
            Letter::F1 => vec![(vec![RawLetter::F(0)], f.one())],
            Letter::F2 => vec![(vec![RawLetter::F(1)], f.one())],
            // E12 = E1 E2 - q^{-1} E2 E1
            Letter::E12 => vec![
                (vec![RawLetter::E(0), RawLetter::E(1)], f.one()),
                (vec![RawLetter::E(1), RawLetter::E(0)], f.q_pow(-1).neg()),
            ],
            // F12 = F2 F1 - q F1 F2
            Letter::F12 => vec![
                (vec![RawLetter::F(1), RawLetter::F(0)], f.one()),
                (vec![RawLetter::F(0), RawLetter::F(1)], f.q().neg()),
            ],
            Letter::K1 => vec![(vec![RawLetter::K { tilde: false, i: 0, sign: 1 }], f.one())],
            Letter::K1Inv => vec![(vec![RawLetter::K { tilde: false, i: 0, sign: -1 }], f.one())],
            Letter::K2 => vec![(vec![RawLetter::K { tilde: false, i: 1, sign: 1 }], f.one())],
            Letter::K2Inv => vec![(vec![RawLetter::K { tilde: false, i: 1, sign: -1 }], f.one())],
            Letter::Kt1 => vec![(vec![RawLetter::K { tilde: true, i: 0, sign: 1 }], f.one())],
            Letter::Kt1Inv => vec![(vec![RawLetter::K { tilde: true, i: 0, sign: -1 }], f.one())],
            Letter::Kt2 => vec![(vec![RawLetter::K { tilde: true, i: 1, sign: 1 }], f.one())],
            Letter::Kt2Inv => vec![(vec![RawLetter::K { tilde: true, i: 1, sign: -1 }], f.one())],
        };
        let mut next = Vec::new();
        for (w, c) in &words {
            for (o, d) in &options {
                let mut nw = w.clone();
                nw.extend(o.iter().copied());
                next.push((nw, c.mul(d)));
            }
        }
        words = next;
    }
    words
}

/// Block PBW exponents `[X1, X12, X2]` of a word in `X1, X2` (`block` 0 = F, 1 = E).
type BlockExpansion = Vec<([u32; 3], Scalar)>;

fn all_words(a: usize, b: usize) -> Vec<Vec<u8>> {
    let n = a + b;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == b {
            out.push((0..n).map(|i| ((mask >> i) & 1) as u8).collect());
        }
    }
    out
}

/// Expansion of a PBW block monomial as a combination of words.
fn pbw_as_words(f: &Field, block: usize, s: [u32; 3]) -> HashMap<Vec<u8>, Scalar> {
    // X12 = X1 X2 - q^{-1} X2 X1 (E) or X2 X1 - q X1 X2 (F)
    let x12: Vec<(Vec<u8>, Scalar)> = if block == 1 {
        vec![(vec![0, 1], f.one()), (vec![1, 0], f.q_pow(-1).neg())]
    } else {
        vec![(vec![1, 0], f.one()), (vec![0, 1], f.q().neg())]
    };
    let mut words: Vec<(Vec<u8>, Scalar)> = vec![(vec![0; s[0] as usize], f.one())];
    for _ in 0..s[1] {
        let mut next = Vec::new();
        for (w, c) in &words {
            for (o, d) in &x12 {
                let mut nw = w.clone();
                nw.extend(o);
                next.push((nw, c.mul(d)));
            }
        }
        words = next;
    }
    let mut out: HashMap<Vec<u8>, Scalar> = HashMap::new();
    for (mut w, c) in words {
        w.extend(std::iter::repeat_n(1u8, s[2] as usize));
        let v = out.remove(&w).map_or(c.clone(), |v| v.add(&c));
        if !v.is_zero() {
            out.insert(w, v);
        }
    }
    out
}

fn expand_block(f: &Field, block: usize, word: &[u8]) -> Arc<BlockExpansion> {
    type Cache = Mutex<HashMap<(FieldMode, usize, Vec<u8>), Arc<BlockExpansion>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (f.mode(), block, word.to_vec());
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let a = word.iter().filter(|&&x| x == 0).count();
    let b = word.len() - a;
    let result = Arc::new(solve_block(f, block, word, a, b));
    cache.lock().unwrap().insert(key, result.clone());
    result
}

fn solve_block(f: &Field, block: usize, word: &[u8], a: usize, b: usize) -> BlockExpansion {
    if a == 0 || b == 0 {
        return vec![([a as u32, 0, b as u32], f.one())];
    }
    let words = all_words(a, b);
    let index: HashMap<&Vec<u8>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    let mut pbw = Vec::new();
    for s2 in 0..=a.min(b) {
        let s = [(a - s2) as u32, s2 as u32, (b - s2) as u32];
        let mut col = vec![f.zero(); words.len()];
        for (w, c) in pbw_as_words(f, block, s) {
            col[index[&w]] = c;
        }
        columns.push(col);
        pbw.push(s);
    }
    // Serre relators X_i^2 X_j - [2] X_i X_j X_i + X_j X_i^2 placed inside longer words
    let two = q_int(f, 2);
    for (i, j) in [(0u8, 1u8), (1, 0)] {
        let rel: [(Vec<u8>, Scalar); 3] =
            [(vec![i, i, j], f.one()), (vec![i, j, i], two.neg()), (vec![j, i, i], f.one())];
        let (na, nb) = if i == 0 { (2, 1) } else { (1, 2) };
        if a < na || b < nb {
            continue;
        }
        for u in all_words(a - na, b - nb) {
            for cut in 0..=u.len() {
                let mut col = vec![f.zero(); words.len()];
                for (r, c) in &rel {
                    let mut w = u[..cut].to_vec();
                    w.extend(r);
                    w.extend(&u[cut..]);
                    let idx = index[&w];
                    col[idx] = col[idx].add(c);
                }
                columns.push(col);
            }
        }
    }
    let m = Matrix::from_columns(f, words.len(), &columns);
    let mut target = vec![f.zero(); words.len()];
    target[index[&word.to_vec()]] = f.one();
    let x = m.solve(&target).expect("word not in the span of PBW monomials and Serre relations");
    pbw.iter()
        .zip(x)
        .filter(|(_, c)| !c.is_zero())
        .map(|(s, c)| (*s, c))
        .collect()
}

/// Reference PBW expansion of a word of at most twelve letters.
pub fn oracle_normal_form(w: &FreeWord, alg: &Arc<Algebra>) -> Result<Element> {
    if w.letters.len() > ORACLE_MAX_LETTERS {
        return Err(Error::DegreeBound { len: w.letters.len(), max: ORACLE_MAX_LETTERS });
    }
    w.check(alg)?;
    let f = alg.field().clone();
    let rw = Rewriter { field: &f, tilde: alg.kind().has_tilde(), comm: f.q_minus_q_inv().inv().unwrap() };
    let mut shaped: Acc<Shaped> = Acc::new();
    for (raw, c) in expand_word(&f, &w.letters) {
        let mut cur = vec![(Shaped { fw: vec![], k: [0, 0], kt: [0, 0], ew: vec![] }, c.mul(&w.coeff))];
        for g in raw {
            let mut next = Vec::new();
            for (t, d) in &cur {
                rw.append(t, d, g, &mut next);
            }
            let mut acc = Acc::new();
            for (t, d) in next {
                acc.add(t, d);
            }
            cur = acc.into_sorted();
        }
        for (t, d) in cur {
            shaped.add(t, d);
        }
    }
    let mut terms = Vec::new();
    for (t, c) in shaped.into_sorted() {
        let fx = expand_block(&f, 0, &t.fw);
        let ex = expand_block(&f, 1, &t.ew);
        for (fs, a) in fx.iter() {
            for (es, b) in ex.iter() {
                let m = Monomial { f: *fs, k: t.k, kt: t.kt, e: *es };
                terms.push((m, c.mul(a).mul(b)));
            }
        }
    }
    Ok(Element::from_terms(alg, terms))
}
