//! Rational functions in `q` over ℚ in canonical reduced form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::QPoly;

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
///
/// Laurent polynomials are stored with the negative powers cleared into a
/// single `q^k` denominator, so `q^{-1}` is `1 / q`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: QPoly::one(), den: QPoly::one() }
    }

    pub fn from_rational(v: BigRational) -> Self {
        RatFunc { num: QPoly::constant(v), den: QPoly::one() }
    }

    pub fn from_int(v: i64) -> Self {
        RatFunc::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            RatFunc { num: QPoly::x_pow(k as usize), den: QPoly::one() }
        } else {
            RatFunc { num: QPoly::one(), den: QPoly::x_pow((-k) as usize) }
        }
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFunc { num, den };
        r.normalize();
        r
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = QPoly::one();
            return;
        }
        if !self.den.is_one() {
            let g = if self.den.is_monomial() {
                // gcd with c·x^k is x^min(k, val(num))
                let k = self.den.degree().unwrap().min(self.num.valuation().unwrap());
                QPoly::x_pow(k)
            } else {
                self.num.gcd(&self.den)
            };
            if !g.is_one() {
                if g.is_monomial() {
                    let k = g.degree().unwrap();
                    self.num = self.num.shift_down(k);
                    self.den = self.den.shift_down(k);
                } else {
                    self.num = self.num.exact_div(&g);
                    self.den = self.den.exact_div(&g);
                }
            }
        }
        let lead = self.den.lead().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::new(self.num.add(&o.num), self.den.clone());
        }
        // monomial denominators: align powers of q without a gcd
        if self.den.is_monomial() && o.den.is_monomial() {
            let a = self.den.degree().unwrap();
            let b = o.den.degree().unwrap();
            let m = a.max(b);
            let num = self.num.shift_up(m - a).add(&o.num.shift_up(m - b));
            return RatFunc::new(num, QPoly::x_pow(m));
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        RatFunc::new(num, self.den.mul(&o.den))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: self.num.mul(&o.num), den: QPoly::one() };
        }
        if self.den.is_monomial() && o.den.is_monomial() {
            let k = self.den.degree().unwrap() + o.den.degree().unwrap();
            return RatFunc::new(self.num.mul(&o.num), QPoly::x_pow(k));
        }
        // cross-cancel before multiplying to keep degrees small
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() { (self.num.clone(), o.den.clone()) } else { (self.num.exact_div(&g1), o.den.exact_div(&g1)) };
        let (n2, d1) = if g2.is_one() { (o.num.clone(), self.den.clone()) } else { (o.num.exact_div(&g2), self.den.exact_div(&g2)) };
        let mut r = RatFunc { num: n1.mul(&n2), den: d1.mul(&d2) };
        let lead = r.den.lead().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            r.num = r.num.scale(&inv);
            r.den = r.den.scale(&inv);
        }
        r
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    /// Whether the value is a Laurent polynomial (denominator a power of `q`).
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    /// `(exponent, coefficient)` pairs of a Laurent polynomial.
    pub fn laurent_terms(&self) -> Option<Vec<(i64, BigRational)>> {
        if !self.is_laurent() {
            return None;
        }
        let shift = self.den.degree().unwrap() as i64;
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 - shift, c.clone()))
                .collect(),
        )
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.den.is_one() && self.num.degree().unwrap_or(0) == 0 {
            Some(self.num.coeffs().first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_minus_q_inverse_is_reduced() {
        let d = RatFunc::q_pow(1).sub(&RatFunc::q_pow(-1));
        // (q^2 - 1) / q
        assert_eq!(d.num(), &QPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(d.den(), &QPoly::from_i64(&[0, 1]));
        let inv = d.inv().unwrap();
        assert!(inv.mul(&d).is_one());
    }

    #[test]
    fn cancellation() {
        // (q^2 - 1)/(q - 1) = q + 1
        let r = RatFunc::new(QPoly::from_i64(&[-1, 0, 1]), QPoly::from_i64(&[-1, 1]));
        assert_eq!(r, RatFunc::new(QPoly::from_i64(&[1, 1]), QPoly::one()));
        let half = RatFunc::new(QPoly::from_i64(&[1]), QPoly::from_i64(&[2]));
        assert_eq!(half.den(), &QPoly::one());
    }
}
