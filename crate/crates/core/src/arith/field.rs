use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Arbitrary-precision rational number; always reduced with a positive
/// denominator.
pub type BigRat = BigRational;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Coefficient field of a [`Poly`](super::Poly).
///
/// Method names shadow the operator traits on purpose; generic code calls
/// these and never mixes in `std::ops`.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv())
    }
    fn from_rat(r: &BigRat) -> Self;
    fn from_int(i: i64) -> Self {
        Self::from_rat(&int(i))
    }
    fn mul_rat(&self, r: &BigRat) -> Self {
        self.mul(&Self::from_rat(r))
    }
    /// True when the element is a (possibly non-integral) rational constant;
    /// used by the printer to decide on parentheses.
    fn is_atom(&self) -> bool;
}

impl Field for BigRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_rat(r: &BigRat) -> Self {
        r.clone()
    }
    fn is_atom(&self) -> bool {
        true
    }
}
