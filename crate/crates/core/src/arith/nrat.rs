//! Elements of ℚ(n).

use super::field::{BigRat, Field};
use super::modp;
use super::poly::Poly;
use super::ratfn::RatFn;
use super::zpoly::ZPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A reduced rational function in `n`.
///
/// Stored as integer polynomials `num/den` with `gcd(num, den) = 1` in
/// ℚ[n], `lc(den) > 0` and the two contents coprime. This is a unique
/// representative, so structural equality is value equality. The
/// monic-denominator view over ℚ is [`NRat::to_ratfn`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NRat {
    num: ZPoly,
    den: ZPoly,
}

impl fmt::Debug for NRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NRat({self})")
    }
}

impl NRat {
    /// Reduces `num/den`. Panics if `den` is zero.
    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "NRat with zero denominator");
        if num.is_zero() {
            return Self::zero_value();
        }
        let g = num.gcd_primitive(&den);
        if g.is_one() {
            Self::normalize_content(num, den)
        } else {
            Self::normalize_content(num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        }
    }

    /// `num/den` already coprime as polynomials; fixes content and sign.
    fn normalize_content(num: ZPoly, den: ZPoly) -> Self {
        if num.is_zero() {
            return Self::zero_value();
        }
        let mut c = num.content().gcd(&den.content());
        if den.lc().unwrap().is_negative() {
            c = -c;
        }
        if c.is_one() {
            NRat { num, den }
        } else {
            NRat { num: num.div_scalar_exact(&c), den: den.div_scalar_exact(&c) }
        }
    }

    fn zero_value() -> Self {
        NRat { num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub fn from_zpoly(p: ZPoly) -> Self {
        NRat { num: p, den: ZPoly::one() }
    }

    /// The element `n`.
    pub fn n() -> Self {
        Self::from_zpoly(ZPoly::var())
    }

    /// `n + a` for an integer `a`.
    pub fn n_plus(a: i64) -> Self {
        Self::from_zpoly(ZPoly::from_i64s(&[a, 1]))
    }

    pub fn from_ratfn(r: &RatFn<BigRat>) -> Self {
        let (num, d1) = clear_rat_poly(r.num());
        let (den, d2) = clear_rat_poly(r.den());
        Self::normalize_content(num.scale(&d2), den.scale(&d1))
    }

    /// Monic-denominator form over ℚ.
    pub fn to_ratfn(&self) -> RatFn<BigRat> {
        let lc = self.den.lc().unwrap().clone();
        let to_q = |p: &ZPoly| {
            Poly::new(p.coeffs().iter().map(|c| BigRat::new(c.clone(), lc.clone())).collect())
        };
        RatFn::from_reduced(to_q(&self.num), to_q(&self.den))
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// `(deg num, deg den)` with `deg 0 = -1`.
    pub fn rdeg(&self) -> (i64, i64) {
        (
            self.num.degree().map_or(-1, |d| d as i64),
            self.den.degree().unwrap() as i64,
        )
    }

    /// The rational constant, if the element does not depend on `n`.
    pub fn as_rat(&self) -> Option<BigRat> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(BigRat::new(self.num.constant_term(), self.den.constant_term()))
        } else {
            None
        }
    }

    /// Substitutes `n ↦ n + s`.
    pub fn shift(&self, s: i64) -> Self {
        if s == 0 || (self.num.is_constant() && self.den.is_constant()) {
            return self.clone();
        }
        Self::normalize_content(self.num.shift(s), self.den.shift(s))
    }

    /// Value at an integer point; `None` on a pole.
    pub fn eval_int(&self, v: i64) -> Option<BigRat> {
        let v = BigInt::from(v);
        let d = self.den.eval(&v);
        if d.is_zero() {
            return None;
        }
        Some(BigRat::new(self.num.eval(&v), d))
    }

    /// Value at `v` modulo `p`; `None` if the denominator vanishes there.
    pub fn eval_mod(&self, v: u64, p: u64) -> Option<u64> {
        let d = self.den.eval_mod(v, p);
        if d == 0 {
            return None;
        }
        Some(modp::mul_mod(self.num.eval_mod(v, p), modp::inv_mod(d, p), p))
    }

    /// Largest coefficient bit size over numerator and denominator.
    pub fn max_bits(&self) -> u64 {
        self.num.max_bits().max(self.den.max_bits())
    }
}

/// Clears denominators of a ℚ-polynomial: returns `(P·d, d)` with `P·d` in
/// ℤ[n] and `d` the lcm of coefficient denominators.
pub fn clear_rat_poly(p: &Poly<BigRat>) -> (ZPoly, BigInt) {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let v = p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect();
    (ZPoly::new(v), l)
}

impl Field for NRat {
    fn zero() -> Self {
        Self::zero_value()
    }

    fn one() -> Self {
        NRat { num: ZPoly::one(), den: ZPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_constant() {
                return Self::normalize_content(self.num.add(&o.num), self.den.clone());
            }
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        if self.den.is_constant() && o.den.is_constant() {
            let (a, b) = (self.den.constant_term(), o.den.constant_term());
            let num = self.num.scale(&b).add(&o.num.scale(&a));
            return Self::normalize_content(num, ZPoly::constant(a * b));
        }
        // a/b + c/d with g = gcd(b, d): (a·d' + c·b') / (b'·d), and only g
        // can share factors with the new numerator.
        let g = self.den.gcd_primitive(&o.den);
        let (b1, d1) = if g.is_one() {
            (self.den.clone(), o.den.clone())
        } else {
            (self.den.div_exact(&g).unwrap(), o.den.div_exact(&g).unwrap())
        };
        let num = self.num.mul(&d1).add(&o.num.mul(&b1));
        if num.is_zero() {
            return Self::zero_value();
        }
        if g.is_one() {
            return Self::normalize_content(num, b1.mul(&o.den));
        }
        let h = num.gcd_primitive(&g);
        if h.is_one() {
            Self::normalize_content(num, b1.mul(&o.den))
        } else {
            Self::normalize_content(
                num.div_exact(&h).unwrap(),
                b1.mul(&o.den.div_exact(&h).unwrap()),
            )
        }
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero_value();
        }
        if self.den.is_constant() && o.den.is_constant() {
            return Self::normalize_content(self.num.mul(&o.num), self.den.mul(&o.den));
        }
        let cross = |a: &ZPoly, d: &ZPoly| -> (ZPoly, ZPoly) {
            if a.is_constant() || d.is_constant() {
                return (a.clone(), d.clone());
            }
            let g = a.gcd_primitive(d);
            if g.is_one() {
                (a.clone(), d.clone())
            } else {
                (a.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
            }
        };
        let (a, d) = cross(&self.num, &o.den);
        let (c, b) = cross(&o.num, &self.den);
        Self::normalize_content(a.mul(&c), b.mul(&d))
    }

    fn neg(&self) -> Self {
        NRat { num: self.num.neg(), den: self.den.clone() }
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in Q(n)");
        Self::normalize_content(self.den.clone(), self.num.clone())
    }

    fn from_rat(r: &BigRat) -> Self {
        Self::normalize_content(ZPoly::constant(r.numer().clone()), ZPoly::constant(r.denom().clone()))
    }

    fn mul_rat(&self, r: &BigRat) -> Self {
        if Zero::is_zero(r) || self.num.is_zero() {
            return Self::zero_value();
        }
        Self::normalize_content(self.num.scale(r.numer()), self.den.scale(r.denom()))
    }

    fn is_atom(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }
}

impl fmt::Display for NRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rat() {
            return write!(f, "{r}");
        }
        let num = zpoly_string(&self.num);
        if self.den.is_one() {
            return write!(f, "{num}");
        }
        let den = zpoly_string(&self.den);
        let num = if self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            format!("({num})")
        } else {
            num
        };
        if self.den.is_constant() || self.den.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 && self.den.coeffs().last().unwrap().is_one() {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

/// Prints an integer polynomial in `n`.
pub fn zpoly_string(p: &ZPoly) -> String {
    struct W<'a>(&'a ZPoly);
    impl fmt::Display for W<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let q: Poly<BigRat> =
                Poly::new(self.0.coeffs().iter().map(|c| BigRat::from_integer(c.clone())).collect());
            q.fmt_var(f, "n")
        }
    }
    W(p).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::rat;

    fn np(v: &[i64]) -> NRat {
        NRat::from_zpoly(ZPoly::from_i64s(v))
    }

    #[test]
    fn canonical_and_arith() {
        let a = NRat::new(ZPoly::from_i64s(&[2, 2]), ZPoly::from_i64s(&[-4, 0, 4]));
        // (2n+2)/(4n^2-4) = 1/(2n-2)
        assert_eq!(a, NRat::new(ZPoly::from_i64s(&[1]), ZPoly::from_i64s(&[-2, 2])));
        let b = np(&[0, 1]).inv(); // 1/n
        let s = a.add(&b); // 1/(2(n-1)) + 1/n = (3n-2)/(2n(n-1))
        assert_eq!(s, NRat::new(ZPoly::from_i64s(&[-2, 3]), ZPoly::from_i64s(&[0, -2, 2])));
        assert_eq!(s.sub(&s), NRat::zero());
        assert_eq!(s.mul(&s.inv()), NRat::one());
        assert_eq!(np(&[3]).mul_rat(&rat(1, 6)), NRat::from_rat(&rat(1, 2)));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(NRat::n().shift(1), np(&[1, 1]));
        let a = np(&[-1, 1]).inv();
        assert_eq!(a.shift(1), NRat::n().inv());
    }

    #[test]
    fn display() {
        assert_eq!(np(&[1, 1]).to_string(), "n+1");
        assert_eq!(np(&[-1, -1]).to_string(), "-n-1");
        assert_eq!(NRat::new(ZPoly::from_i64s(&[1]), ZPoly::from_i64s(&[1, 0, 1])).to_string(), "1/(n^2+1)");
        assert_eq!(NRat::from_rat(&rat(-3, 4)).to_string(), "-3/4");
        assert_eq!(NRat::new(ZPoly::from_i64s(&[0, 1]), ZPoly::from_i64s(&[2])).to_string(), "n/2");
    }

    #[test]
    fn ratfn_view_has_monic_den() {
        let a = NRat::new(ZPoly::from_i64s(&[1]), ZPoly::from_i64s(&[-2, 2]));
        let r = a.to_ratfn();
        assert!(r.den().is_monic());
        assert_eq!(NRat::from_ratfn(&r), a);
    }
}
