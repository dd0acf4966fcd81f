//! Reduced rational functions with monic denominator.

use super::field::Field;
use super::poly::{Degree, Poly};
use crate::error::{Error, Result};
use std::fmt;

/// `num/den` with `gcd(num, den) = 1` and `den` monic, enforced at
/// construction.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFn<C> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: Field> RatFn<C> {
    pub fn try_new(num: Poly<C>, den: Poly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let li = den.lc().inv();
        Ok(RatFn { num: num.scale(&li), den: den.scale(&li) })
    }

    /// Panics on a zero denominator.
    pub fn new(num: Poly<C>, den: Poly<C>) -> Self {
        Self::try_new(num, den).expect("zero denominator")
    }

    /// Trusts that `num/den` is already reduced; only normalizes `den`.
    pub fn from_reduced(num: Poly<C>, den: Poly<C>) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_monic() {
            return RatFn { num, den };
        }
        let li = den.lc().inv();
        RatFn { num: num.scale(&li), den: den.scale(&li) }
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        RatFn { num: p, den: Poly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den(&self) -> &Poly<C> {
        &self.den
    }

    pub fn into_parts(self) -> (Poly<C>, Poly<C>) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = o.den.div_exact(&g).unwrap();
        Self::new(self.num.mul(&d1).add(&o.num.mul(&b1)), b1.mul(&o.den))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let a = self.num.div_exact(&g1).unwrap();
        let d = o.den.div_exact(&g1).unwrap();
        let c = o.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        Self::from_reduced(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero rational function".into()));
        }
        Ok(Self::from_reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFn { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn derivative(&self) -> Self {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        Self::new(n, self.den.mul(&self.den))
    }

    /// `(deg num, deg den, deg num − deg den)`; for zero this is
    /// `(-∞, 0, -∞)`.
    pub fn degrees(&self) -> (Degree, i64, Degree) {
        let l = self.den.deg().unwrap() as i64;
        let k = self.num.degree();
        (k, l, k.minus(l))
    }

    /// Regular degree `max(deg num, deg den)`.
    pub fn regular_degree(&self) -> i64 {
        let (k, l, _) = self.degrees();
        k.finite().unwrap_or(0).max(l)
    }

    /// Degree at infinity `deg num − deg den`.
    pub fn degree_at_infinity(&self) -> Degree {
        self.degrees().2
    }

    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D + Copy) -> RatFn<D> {
        RatFn::new(self.num.map(f), self.den.map(f))
    }
}

impl<C: Field> fmt::Display for RatFn<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// Logarithmic derivative `H'/H`, reduced.
pub fn log_derivative<C: Field>(h: &RatFn<C>) -> Result<RatFn<C>> {
    if h.is_zero() {
        return Err(Error::Domain("logarithmic derivative of zero".into()));
    }
    let (p, q) = (h.num(), h.den());
    // H'/H = (p'q - pq')/(pq)
    let num = p.derivative().mul(q).sub(&p.mul(&q.derivative()));
    RatFn::try_new(num, p.mul(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::BigRat;
    use crate::arith::poly::MINUS_INFINITY;

    type Q = RatFn<BigRat>;

    fn p(v: &[i64]) -> Poly<BigRat> {
        Poly::from_ints(v)
    }

    #[test]
    fn log_derivative_examples() {
        let x2 = Q::from_poly(p(&[0, 0, 1]));
        assert_eq!(log_derivative(&x2).unwrap(), Q::new(p(&[2]), p(&[0, 1])));
        let h = Q::new(p(&[-1, 1]), p(&[1, 1]));
        assert_eq!(log_derivative(&h).unwrap(), Q::new(p(&[2]), p(&[-1, 0, 1])));
        assert_eq!(log_derivative(&Q::one()).unwrap(), Q::zero());
        assert!(log_derivative(&Q::zero()).is_err());
    }

    #[test]
    fn degrees_examples() {
        use Degree::Finite;
        assert_eq!(Q::new(p(&[1, 0, 1]), p(&[0, 1])).degrees(), (Finite(2), 1, Finite(1)));
        assert_eq!(Q::new(p(&[1]), p(&[0, 0, 0, 1])).degrees(), (Finite(0), 3, Finite(-3)));
        assert_eq!(Q::from_poly(p(&[5])).degrees(), (Finite(0), 0, Finite(0)));
        assert_eq!(Q::zero().degrees(), (MINUS_INFINITY, 0, MINUS_INFINITY));
    }

    #[test]
    fn canonical_form() {
        let r = Q::new(p(&[-2, 2]), p(&[-2, 0, 2]));
        assert_eq!(r, Q::new(p(&[1]), p(&[1, 1])));
        assert!(r.den().is_monic());
        assert!(Q::try_new(p(&[1]), Poly::zero()).is_err());
    }
}
