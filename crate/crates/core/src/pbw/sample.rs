use std::sync::Arc;

use rand::Rng;

use super::{Algebra, AlgebraKind, Element, Monomial};
use crate::qfield::Scalar;

/// Indices into `(f0, f1, f2, e0, e1, e2)` that may be nonzero.
fn root_slots(kind: AlgebraKind) -> Vec<usize> {
    match kind {
        AlgebraKind::U | AlgebraKind::Small | AlgebraKind::Double => (0..6).collect(),
        AlgebraKind::SmallGeq0 => vec![3, 4, 5],
        AlgebraKind::SmallLeq0 => vec![0, 1, 2],
        AlgebraKind::Small1 => vec![0, 3],
    }
}

/// A uniformly chosen basis monomial with `E`/`F` degree at most `max_degree`.
pub fn random_monomial<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R, max_degree: u32) -> Monomial {
    let kind = alg.kind();
    let slots = root_slots(kind);
    loop {
        let mut m = Monomial::one();
        let d = rng.gen_range(0..=max_degree);
        for _ in 0..d {
            let s = slots[rng.gen_range(0..slots.len())];
            if s < 3 {
                m.f[s] += 1;
            } else {
                m.e[s - 3] += 1;
            }
        }
        let mut group = |r: &mut i32| {
            *r = match alg.modulus() {
                Some(l) => rng.gen_range(0..l as i32),
                None => rng.gen_range(-2..=2),
            }
        };
        group(&mut m.k[0]);
        if kind != AlgebraKind::Small1 {
            group(&mut m.k[1]);
        }
        if kind.has_tilde() {
            group(&mut m.kt[0]);
            group(&mut m.kt[1]);
        }
        if alg.is_legal(&m) {
            return m;
        }
    }
}

/// A small nonzero coefficient of the form `±c q^k`.
pub fn random_coefficient<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Scalar {
    let f = alg.field();
    let mut c = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        c = -c;
    }
    f.int(c).mul(&f.q_pow(rng.gen_range(-1..=1)))
}

/// A random element with up to `max_terms` terms of degree at most `max_degree`.
pub fn random_element<R: Rng + ?Sized>(alg: &Arc<Algebra>, rng: &mut R, max_degree: u32, max_terms: usize) -> Element {
    let n = rng.gen_range(1..=max_terms.max(1));
    let terms: Vec<(Monomial, Scalar)> =
        (0..n).map(|_| (random_monomial(alg, rng, max_degree), random_coefficient(alg, rng))).collect();
    Element::from_terms(alg, terms)
}
