//! Arithmetic in ℚ(ζ_l) = ℚ[x]/Φ_l(x).

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::QPoly;

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The `n`-th cyclotomic polynomial, by dividing `x^n - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_poly(n: u32) -> QPoly {
    assert!(n > 0, "cyclotomic_poly: n must be positive");
    let mut c = vec![0i64; n as usize + 1];
    c[0] = -1;
    c[n as usize] = 1;
    let mut result = QPoly::from_i64(&c);
    for d in divisors(n) {
        if d < n {
            result = result.exact_div(&cyclotomic_poly(d));
        }
    }
    result
}

/// Context for one cyclotomic field: `Φ_l` and the reductions of `x^k`.
#[derive(Debug)]
pub struct CycloField {
    l: u32,
    deg: usize,
    phi: QPoly,
    // pow[k] = x^k mod Φ_l, for 0 <= k < max(l, 2 deg - 1)
    pow: Vec<Vec<BigInt>>,
}

impl CycloField {
    fn build(l: u32) -> CycloField {
        let phi = cyclotomic_poly(l);
        let deg = phi.degree().unwrap();
        let top = (l as usize).max(2 * deg);
        let phi_int: Vec<BigInt> = phi.coeffs().iter().map(|c| c.to_integer()).collect();
        let mut pow = Vec::with_capacity(top);
        let mut cur = vec![BigInt::zero(); deg];
        cur[0] = BigInt::one();
        for _ in 0..top {
            pow.push(cur.clone());
            // multiply by x and reduce with the monic Φ
            let carry = cur[deg - 1].clone();
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !carry.is_zero() {
                for (i, slot) in cur.iter_mut().enumerate() {
                    *slot -= &carry * &phi_int[i];
                }
            }
        }
        CycloField { l, deg, phi, pow }
    }

    /// Shared context for `l`, built once per process.
    pub fn get(l: u32) -> Arc<CycloField> {
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        guard.entry(l).or_insert_with(|| Arc::new(CycloField::build(l))).clone()
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn phi(&self) -> &QPoly {
        &self.phi
    }
}

/// An element `(Σ num[i] ζ^i) / den` with `den > 0` and content gcd 1.
#[derive(Clone)]
pub struct CycElem {
    field: Arc<CycloField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CycElem {
    fn eq(&self, o: &Self) -> bool {
        self.field.l == o.field.l && self.den == o.den && self.num == o.num
    }
}

impl Eq for CycElem {}

impl Hash for CycElem {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.field.l.hash(h);
        self.num.hash(h);
        self.den.hash(h);
    }
}

impl fmt::Debug for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycElem(l={}, {:?}/{})", self.field.l, self.num, self.den)
    }
}

impl CycElem {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        CycElem { field: field.clone(), num: vec![BigInt::zero(); field.deg], den: BigInt::one() }
    }

    pub fn from_rational(field: &Arc<CycloField>, v: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); field.deg];
        num[0] = v.numer().clone();
        let mut e = CycElem { field: field.clone(), num, den: v.denom().clone() };
        e.normalize();
        e
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(field: &Arc<CycloField>, k: i64) -> Self {
        let r = k.rem_euclid(field.l as i64) as usize;
        CycElem { field: field.clone(), num: field.pow[r].clone(), den: BigInt::one() }
    }

    /// Builds an element from rational coordinates in the power basis.
    pub fn from_coords(field: &Arc<CycloField>, coords: &[BigRational]) -> Self {
        assert_eq!(coords.len(), field.deg, "coordinate vector has wrong length");
        let den = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coords.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut e = CycElem { field: field.clone(), num, den };
        e.normalize();
        e
    }

    /// Reduces an arbitrary-length coefficient vector modulo Φ_l.
    fn from_long(field: &Arc<CycloField>, long: Vec<BigInt>, den: BigInt) -> Self {
        let deg = field.deg;
        let mut num = vec![BigInt::zero(); deg];
        for (k, c) in long.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < deg {
                num[k] += c;
            } else {
                for (i, p) in field.pow[k].iter().enumerate() {
                    if !p.is_zero() {
                        num[i] += &c * p;
                    }
                }
            }
        }
        let mut e = CycElem { field: field.clone(), num, den };
        e.normalize();
        e
    }

    fn normalize(&mut self) {
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.abs();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn l(&self) -> u32 {
        self.field.l
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// Rational coordinates in the basis `1, ζ, …, ζ^{deg-1}`.
    pub fn coords(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn add(&self, o: &CycElem) -> CycElem {
        let num = if self.den == o.den {
            self.num.iter().zip(&o.num).map(|(a, b)| a + b).collect()
        } else {
            self.num.iter().zip(&o.num).map(|(a, b)| a * &o.den + b * &self.den).collect()
        };
        let den = if self.den == o.den { self.den.clone() } else { &self.den * &o.den };
        let mut e = CycElem { field: self.field.clone(), num, den };
        e.normalize();
        e
    }

    pub fn neg(&self) -> CycElem {
        CycElem { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &CycElem) -> CycElem {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &CycElem) -> CycElem {
        let deg = self.field.deg;
        let mut long = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.num.iter().enumerate() {
                if !b.is_zero() {
                    long[i + j] += a * b;
                }
            }
        }
        CycElem::from_long(&self.field, long, &self.den * &o.den)
    }

    pub fn inv(&self) -> Option<CycElem> {
        if self.is_zero() {
            return None;
        }
        let p = QPoly::from_coeffs(self.coords());
        let (g, s, _) = p.ext_gcd(&self.field.phi);
        debug_assert!(g.is_one());
        let mut coords = s.coeffs().to_vec();
        coords.resize(self.field.deg, BigRational::zero());
        Some(CycElem::from_coords(&self.field, &coords))
    }

    /// Exponent `k` with `self = ζ^k`, if the element is an `l`-th root of unity.
    pub fn root_exponent(&self) -> Option<u32> {
        if !self.den.is_one() {
            return None;
        }
        (0..self.field.l).find(|&k| self.field.pow[k as usize] == self.num)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(3), QPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(9), QPoly::from_i64(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_poly(15).degree(), Some(8));
        assert_eq!(cyclotomic_poly(4), QPoly::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn zeta_has_order_l() {
        for l in [3u32, 5, 7, 9, 15] {
            let f = CycloField::get(l);
            let z = CycElem::zeta_pow(&f, 1);
            let mut acc = CycElem::zeta_pow(&f, 0);
            for k in 1..=l {
                acc = acc.mul(&z);
                assert_eq!(acc.is_one(), k == l, "l={l} k={k}");
            }
        }
    }

    #[test]
    fn inverse_of_one_plus_zeta() {
        let f = CycloField::get(5);
        let one = CycElem::zeta_pow(&f, 0);
        let a = one.add(&CycElem::zeta_pow(&f, 1));
        assert!(a.mul(&a.inv().unwrap()).is_one());
    }
}
