//! The straightening engine.
//!
//! Products are computed with memoized building blocks:
//!
//! * `block_letter(s, j)`: `X^s · X_j` inside the `E`-block or the `F`-block,
//! * `cross_letter(s, j)`: `E^s · F_j`, recursing on the last `E` letter,
//! * `cross_full(s, t)`: `E^s · F^t`, recursing on the first `F` letter,
//! * `mul_mono(m, n)`: the product of two PBW monomials.
//!
//! Quotient algebras are handled by computing as in the big algebra and
//! projecting every intermediate monomial: monomials with an `E` or `F`
//! exponent `>= l` vanish and grouplike exponents are read mod `l`.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use super::{block_weight, AlgebraKind, Monomial};
use crate::error::{Error, Result};
use crate::qfield::{Field, FieldMode, Scalar};

pub(crate) type Terms = Vec<(Monomial, Scalar)>;
type BlockTerms = Vec<([u32; 3], Scalar)>;

pub(crate) struct Memo<K, V>(Mutex<HashMap<K, Arc<V>>>);

impl<K: Eq + Hash, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo(Mutex::new(HashMap::new()))
    }

    pub(crate) fn get_or(&self, key: K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.0.lock().unwrap().get(&key) {
            return v.clone();
        }
        // computed without the lock: the recursion re-enters the memo
        let v = Arc::new(compute());
        self.0.lock().unwrap().entry(key).or_insert(v).clone()
    }

    pub(crate) fn len(&self) -> usize {
        self.0.lock().unwrap().len()
    }
}

/// Accumulates scalar-weighted keys, dropping zero coefficients.
pub(crate) struct Acc<K> {
    map: HashMap<K, Scalar>,
}

impl<K: Eq + Hash + Ord + Clone> Acc<K> {
    pub(crate) fn new() -> Self {
        Acc { map: HashMap::new() }
    }

    pub(crate) fn add(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&k) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.map.remove(&k);
                }
            }
            None => {
                self.map.insert(k, c);
            }
        }
    }

    pub(crate) fn into_sorted(self) -> Vec<(K, Scalar)> {
        let mut v: Vec<(K, Scalar)> = self.map.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

/// An algebra together with its field and product caches.
pub struct Algebra {
    kind: AlgebraKind,
    field: Field,
    modulus: Option<u32>,
    comm: Scalar,
    block_letter_memo: [Memo<([u32; 3], usize), BlockTerms>; 2],
    block_mul_memo: [Memo<([u32; 3], [u32; 3]), BlockTerms>; 2],
    cross_letter_memo: Memo<([u32; 3], usize), Terms>,
    cross_full_memo: Memo<([u32; 3], [u32; 3]), Terms>,
    mul_memo: Memo<(Monomial, Monomial), Terms>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra({}, {})", self.kind, self.field.mode())
    }
}

const F_BLOCK: usize = 0;
const E_BLOCK: usize = 1;

impl Algebra {
    /// The shared instance for `(kind, mode)`.
    pub fn get(kind: AlgebraKind, field: &Field) -> Result<Arc<Algebra>> {
        static REGISTRY: OnceLock<Mutex<HashMap<(AlgebraKind, FieldMode), Arc<Algebra>>>> = OnceLock::new();
        if kind.is_quotient() && !field.is_root() {
            return Err(Error::AlgebraNeedsRoot(kind.id().to_string()));
        }
        let reg = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = reg.lock().unwrap();
        let alg = guard
            .entry((kind, field.mode()))
            .or_insert_with(|| Arc::new(Algebra::build(kind, field)))
            .clone();
        Ok(alg)
    }

    fn build(kind: AlgebraKind, field: &Field) -> Algebra {
        let modulus = if kind.is_quotient() { field.l() } else { None };
        Algebra {
            kind,
            field: field.clone(),
            modulus,
            comm: field.q_minus_q_inv().inv().unwrap(),
            block_letter_memo: [Memo::new(), Memo::new()],
            block_mul_memo: [Memo::new(), Memo::new()],
            cross_letter_memo: Memo::new(),
            cross_full_memo: Memo::new(),
            mul_memo: Memo::new(),
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The truncation order of a quotient algebra.
    pub fn modulus(&self) -> Option<u32> {
        self.modulus
    }

    /// Number of cached monomial products (diagnostics).
    pub fn cache_size(&self) -> usize {
        self.mul_memo.len()
    }

    fn qp(&self, e: i64) -> Scalar {
        self.field.q_pow(e)
    }

    fn block_ok(&self, x: &[u32; 3]) -> bool {
        match self.modulus {
            Some(l) => x.iter().all(|&v| v < l),
            None => true,
        }
    }

    /// Image of a monomial of the big algebra in this algebra, or `None` when it vanishes.
    pub fn project(&self, m: &Monomial) -> Option<Monomial> {
        match self.modulus {
            None => Some(*m),
            Some(l) => {
                if !self.block_ok(&m.f) || !self.block_ok(&m.e) {
                    return None;
                }
                let l = l as i32;
                Some(Monomial {
                    f: m.f,
                    e: m.e,
                    k: [m.k[0].rem_euclid(l), m.k[1].rem_euclid(l)],
                    kt: [m.kt[0].rem_euclid(l), m.kt[1].rem_euclid(l)],
                })
            }
        }
    }

    /// Whether a monomial is a stored basis element of this algebra.
    pub fn is_legal(&self, m: &Monomial) -> bool {
        if let Some(l) = self.modulus {
            let li = l as i32;
            if !self.block_ok(&m.f) || !self.block_ok(&m.e) {
                return false;
            }
            if m.k.iter().chain(m.kt.iter()).any(|&r| r < 0 || r >= li) {
                return false;
            }
        }
        let no_f = m.f == [0; 3];
        let no_e = m.e == [0; 3];
        let no_kt = m.kt == [0; 2];
        match self.kind {
            AlgebraKind::U | AlgebraKind::Small => no_kt,
            AlgebraKind::SmallGeq0 => no_kt && no_f,
            AlgebraKind::SmallLeq0 => no_kt && no_e,
            AlgebraKind::Small1 => no_kt && m.f[1..] == [0, 0] && m.e[1..] == [0, 0] && m.k[1] == 0,
            AlgebraKind::Double => true,
        }
    }

    /// `X^s · X_j` in the `F`-block (`block = 0`) or the `E`-block (`block = 1`).
    ///
    /// Both blocks use the order `X1 < X12 < X2` with
    /// `X2 X12 = q^{-1} X12 X2`, `X12 X1 = q^{-1} X1 X12` and
    /// `X2 X1 = q X1 X2 + b X12`, where `b = -q` for `E` and `b = 1` for `F`.
    fn block_letter(&self, block: usize, s: [u32; 3], j: usize) -> Arc<BlockTerms> {
        self.block_letter_memo[block].get_or((s, j), || {
            let mut out = Vec::new();
            match j {
                2 => {
                    let t = [s[0], s[1], s[2] + 1];
                    if self.block_ok(&t) {
                        out.push((t, self.field.one()));
                    }
                }
                1 => {
                    let t = [s[0], s[1] + 1, s[2]];
                    if self.block_ok(&t) {
                        out.push((t, self.qp(-(s[2] as i64))));
                    }
                }
                _ => {
                    if s[2] == 0 {
                        let t = [s[0] + 1, s[1], 0];
                        if self.block_ok(&t) {
                            out.push((t, self.qp(-(s[1] as i64))));
                        }
                    } else {
                        let sp = [s[0], s[1], s[2] - 1];
                        let b = if block == E_BLOCK { self.qp(1).neg() } else { self.field.one() };
                        let a = self.qp(1);
                        let mut acc = Acc::new();
                        for (u, c) in self.block_letter(block, sp, 0).iter() {
                            let t = [u[0], u[1], u[2] + 1];
                            if self.block_ok(&t) {
                                acc.add(t, c.mul(&a));
                            }
                        }
                        for (u, c) in self.block_letter(block, sp, 1).iter() {
                            acc.add(*u, c.mul(&b));
                        }
                        out = acc.into_sorted();
                    }
                }
            }
            out
        })
    }

    /// `X^s · X^t` inside one block.
    fn block_mul(&self, block: usize, s: [u32; 3], t: [u32; 3]) -> Arc<BlockTerms> {
        if t == [0; 3] {
            return Arc::new(if self.block_ok(&s) { vec![(s, self.field.one())] } else { vec![] });
        }
        if s == [0; 3] {
            return Arc::new(if self.block_ok(&t) { vec![(t, self.field.one())] } else { vec![] });
        }
        self.block_mul_memo[block].get_or((s, t), || {
            // peel the last letter of X^t
            let j = if t[2] > 0 { 2 } else if t[1] > 0 { 1 } else { 0 };
            let mut tp = t;
            tp[j] -= 1;
            let mut acc = Acc::new();
            for (u, c) in self.block_mul(block, s, tp).iter() {
                for (w, d) in self.block_letter(block, *u, j).iter() {
                    acc.add(*w, c.mul(d));
                }
            }
            acc.into_sorted()
        })
    }

    /// The commutator `[E_a, F_b]` as PBW terms.
    fn commutator(&self, a: usize, b: usize) -> Terms {
        let tilde = self.kind.has_tilde();
        let mut g1inv = Monomial::one();
        if tilde {
            g1inv.kt[0] = -1;
        } else {
            g1inv.k[0] = -1;
        }
        match (a, b) {
            (0, 0) => {
                let mut k1 = Monomial::one();
                k1.k[0] = 1;
                vec![(k1, self.comm.clone()), (g1inv, self.comm.neg())]
            }
            (1, 0) => {
                // [E12, F1] = -E2 G1^{-1} = -q^{-1} G1^{-1} E2
                let mut m = g1inv;
                m.e[2] = 1;
                vec![(m, self.qp(-1).neg())]
            }
            (0, 1) => {
                // [E1, F12] = -K1 F2 = -q F2 K1
                let mut m = Monomial::one();
                m.f[2] = 1;
                m.k[0] = 1;
                vec![(m, self.qp(1).neg())]
            }
            _ => Vec::new(),
        }
    }

    fn push_projected(&self, acc: &mut Acc<Monomial>, m: Monomial, c: Scalar) {
        if let Some(p) = self.project(&m) {
            acc.add(p, c);
        }
    }

    /// `E^s · F_j`.
    fn cross_letter(&self, s: [u32; 3], j: usize) -> Arc<Terms> {
        self.cross_letter_memo.get_or((s, j), || {
            let mut fj = Monomial::one();
            fj.f[j] = 1;
            if s == [0; 3] {
                let mut acc = Acc::new();
                self.push_projected(&mut acc, fj, self.field.one());
                return acc.into_sorted();
            }
            let last = if s[2] > 0 { 2 } else if s[1] > 0 { 1 } else { 0 };
            let mut sp = s;
            sp[last] -= 1;
            let mut acc = Acc::new();
            // (E^{s'} F_j) E_last
            for (m, c) in self.cross_letter(sp, j).iter() {
                for (e, d) in self.block_letter(E_BLOCK, m.e, last).iter() {
                    let mut n = *m;
                    n.e = *e;
                    acc.add(n, c.mul(d));
                }
            }
            // E^{s'} [E_last, F_j]
            let head = Monomial { e: sp, ..Monomial::one() };
            for (cm, c) in self.commutator(last, j) {
                for (m, d) in self.mul_mono(&head, &cm).iter() {
                    acc.add(*m, c.mul(d));
                }
            }
            acc.into_sorted()
        })
    }

    /// `E^s · F^t`.
    fn cross_full(&self, s: [u32; 3], t: [u32; 3]) -> Arc<Terms> {
        if s == [0; 3] || t == [0; 3] {
            let m = Monomial { f: t, e: s, ..Monomial::one() };
            let mut acc = Acc::new();
            self.push_projected(&mut acc, m, self.field.one());
            return Arc::new(acc.into_sorted());
        }
        self.cross_full_memo.get_or((s, t), || {
            let j = if t[0] > 0 { 0 } else if t[1] > 0 { 1 } else { 2 };
            let mut tp = t;
            tp[j] -= 1;
            let mut acc = Acc::new();
            for (y, c) in self.cross_letter(s, j).iter() {
                for (z, d) in self.cross_full(y.e, tp).iter() {
                    // F^a K^b G^g · F^{a'} K^{b'} G^{g'} E^{d'}
                    let wz = block_weight(&z.f);
                    let kg = [(y.k[0] + y.kt[0]) as i64, (y.k[1] + y.kt[1]) as i64];
                    let e = -(kg[0] * wz[0] + kg[1] * wz[1]);
                    let coef = c.mul(d).mul(&self.qp(e));
                    for (ff, h) in self.block_mul(F_BLOCK, y.f, z.f).iter() {
                        let m = Monomial {
                            f: *ff,
                            k: [y.k[0] + z.k[0], y.k[1] + z.k[1]],
                            kt: [y.kt[0] + z.kt[0], y.kt[1] + z.kt[1]],
                            e: z.e,
                        };
                        self.push_projected(&mut acc, m, coef.mul(h));
                    }
                }
            }
            acc.into_sorted()
        })
    }

    /// The product of two monomials as sorted PBW terms.
    pub fn mul_mono(&self, a: &Monomial, b: &Monomial) -> Arc<Terms> {
        self.mul_memo.get_or((*a, *b), || {
            let mut acc = Acc::new();
            let ka = [(a.k[0] + a.kt[0]) as i64, (a.k[1] + a.kt[1]) as i64];
            let kb = [(b.k[0] + b.kt[0]) as i64, (b.k[1] + b.kt[1]) as i64];
            for (x, c) in self.cross_full(a.e, b.f).iter() {
                // K^{ka} F^{x.f} = q^{ka·w(F)} F K ; E^{x.e} K^{kb} = q^{-kb·w(E)} K E
                let wf = block_weight(&x.f);
                let we = block_weight(&x.e);
                let e = -(ka[0] * wf[0] + ka[1] * wf[1]) - (kb[0] * we[0] + kb[1] * we[1]);
                let coef = c.mul(&self.qp(e));
                let fs = self.block_mul(F_BLOCK, a.f, x.f);
                let es = self.block_mul(E_BLOCK, x.e, b.e);
                for (ff, h1) in fs.iter() {
                    let c1 = coef.mul(h1);
                    for (ee, h2) in es.iter() {
                        let m = Monomial {
                            f: *ff,
                            k: [a.k[0] + x.k[0] + b.k[0], a.k[1] + x.k[1] + b.k[1]],
                            kt: [a.kt[0] + x.kt[0] + b.kt[0], a.kt[1] + x.kt[1] + b.kt[1]],
                            e: *ee,
                        };
                        self.push_projected(&mut acc, m, c1.mul(h2));
                    }
                }
            }
            acc.into_sorted()
        })
    }
}
