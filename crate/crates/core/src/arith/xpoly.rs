//! Polynomials and rational functions in `x` over ℚ(n), and the helpers the
//! reductions need on them.

use super::field::{BigRat, Field};
use super::nrat::NRat;
use super::poly::Poly;
use super::ratfn::RatFn;
use super::zpoly::ZPoly;
use num_traits::Zero;
use std::fmt;

pub type QPoly = Poly<BigRat>;
pub type QRat = RatFn<BigRat>;
/// Element of ℚ(n)[x].
pub type XPoly = Poly<NRat>;
/// Element of ℚ(n)(x).
pub type XRat = RatFn<NRat>;

/// Rational degree `[num]/[den]` of a rational function; `num = -1` for 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct RdegPair {
    pub num: i64,
    pub den: i64,
}

impl RdegPair {
    pub const ZERO: RdegPair = RdegPair { num: 0, den: 0 };

    pub fn new(num: i64, den: i64) -> Self {
        RdegPair { num, den }
    }

    pub fn plus(self, o: RdegPair) -> Self {
        RdegPair { num: self.num + o.num, den: self.den + o.den }
    }

    pub fn times(self, k: i64) -> Self {
        RdegPair { num: self.num * k, den: self.den * k }
    }

    /// Componentwise maximum.
    pub fn max(self, o: RdegPair) -> Self {
        RdegPair { num: self.num.max(o.num), den: self.den.max(o.den) }
    }

    /// Componentwise `≤`.
    pub fn le(self, o: RdegPair) -> bool {
        self.num <= o.num && self.den <= o.den
    }
}

impl fmt::Display for RdegPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]/[{}]", self.num, self.den)
    }
}

pub fn lift(p: &QPoly) -> XPoly {
    p.map(NRat::from_rat)
}

pub fn lift_rat(r: &QRat) -> XRat {
    RatFn::from_reduced(lift(r.num()), lift(r.den()))
}

/// Substitution `n ↦ n + i`, re-reduced.
pub trait ShiftN {
    fn shift_n(&self, i: i64) -> Self;
}

impl ShiftN for NRat {
    fn shift_n(&self, i: i64) -> Self {
        self.shift(i)
    }
}

impl ShiftN for XPoly {
    fn shift_n(&self, i: i64) -> Self {
        Poly::new(self.coeffs().iter().map(|c| c.shift(i)).collect())
    }
}

impl ShiftN for XRat {
    fn shift_n(&self, i: i64) -> Self {
        // a shift is a field automorphism of ℚ(n): reducedness and the
        // monic denominator survive
        RatFn::from_reduced(self.num().shift_n(i), self.den().shift_n(i))
    }
}

pub(crate) fn zlcm(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let g = a.gcd(b);
    let l = a.mul(&b.div_exact(&g).unwrap());
    if l.lc().is_some_and(|c| c.sign() == num_bigint::Sign::Minus) {
        l.neg()
    } else {
        l
    }
}

/// Writes `p = N(n, x) / d(n)` with `N ∈ ℤ[n][x]` and `d ∈ ℤ[n]`: returns
/// the x-coefficients of `N` and `d` (positive leading coefficient).
pub fn clear_n_denominators(p: &XPoly) -> (Vec<ZPoly>, ZPoly) {
    let mut d = ZPoly::one();
    for c in p.coeffs() {
        d = zlcm(&d, c.den());
    }
    let nums = p
        .coeffs()
        .iter()
        .map(|c| {
            if c.is_zero() {
                ZPoly::zero()
            } else {
                c.num().mul(&d.div_exact(c.den()).unwrap())
            }
        })
        .collect();
    (nums, d)
}

/// Rational degree in `n` of `p` viewed as a rational function in `n`.
pub fn rdeg_n(p: &XPoly) -> RdegPair {
    if p.is_zero() {
        return RdegPair::new(-1, 0);
    }
    let (nums, d) = clear_n_denominators(p);
    // content of N over ℤ[n] may still share factors with d only through
    // integer content; degrees are unaffected
    let num = nums.iter().filter_map(|z| z.degree()).max().unwrap() as i64;
    RdegPair::new(num, d.degree().unwrap() as i64)
}

/// Reduction of `p` at `n = v` modulo `prime`; `None` on a pole.
pub fn eval_n_mod(p: &XPoly, v: u64, prime: u64) -> Option<Vec<u64>> {
    p.coeffs().iter().map(|c| c.eval_mod(v, prime)).collect()
}

/// Splits `p·d(n)` into `Σ_j n^j N_j(x)` with `N_j ∈ ℚ[x]`.
pub fn split_by_n_power(p: &XPoly) -> Vec<QPoly> {
    let (nums, _) = clear_n_denominators(p);
    let dn = nums.iter().map(|z| z.coeffs().len()).max().unwrap_or(0);
    (0..dn)
        .map(|j| {
            Poly::new(
                nums.iter()
                    .map(|z| BigRat::from_integer(z.coeffs().get(j).cloned().unwrap_or_else(Zero::zero)))
                    .collect(),
            )
        })
        .collect()
}

/// Canonical `num/den` for a denominator free of `n`. Common factors are
/// searched over ℚ[x], which suffices because every ℚ(n)-factor of a ℚ[x]
/// polynomial is (up to a unit) in ℚ[x].
pub fn xrat_from_parts(num: &XPoly, den: &QPoly) -> XRat {
    let rad = if den.is_constant() { den.clone() } else { den.div_exact(&den.gcd(&den.derivative())).unwrap() };
    super::cleared::xrat_from_cleared(&super::ClearedPoly::from_xpoly(num), den, &rad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::int;

    fn n_plus(a: i64) -> NRat {
        NRat::n_plus(a)
    }

    #[test]
    fn shift_examples() {
        let e = Poly::new(vec![NRat::n().mul(&NRat::n()), NRat::n()]);
        let s = e.shift_n(-1);
        assert_eq!(s, Poly::new(vec![n_plus(-1).mul(&n_plus(-1)), n_plus(-1)]));
        assert_eq!(s.shift_n(1), e);
    }

    #[test]
    fn rdeg_of_xpoly() {
        let p = Poly::new(vec![n_plus(1).inv(), NRat::n().mul(&NRat::n())]);
        assert_eq!(rdeg_n(&p), RdegPair::new(3, 1));
        assert_eq!(rdeg_n(&XPoly::zero()), RdegPair::new(-1, 0));
    }

    #[test]
    fn xrat_parts_cancel_common_factor() {
        // (n x - n)(x+1) / (x^2 - 1)  =  n
        let num = Poly::new(vec![NRat::n().neg(), NRat::zero(), NRat::n()]);
        let den = QPoly::from_ints(&[-1, 0, 1]);
        let r = xrat_from_parts(&num, &den);
        assert_eq!(r, RatFn::constant(NRat::n()));
        let r = xrat_from_parts(&Poly::constant(NRat::from_rat(&int(2))), &QPoly::from_ints(&[0, 2]));
        assert_eq!(r.den(), &lift(&QPoly::from_ints(&[0, 1])));
    }
}
