//! Dense univariate polynomials over a [`Field`].

use super::field::{BigRat, Field};
use crate::error::{Error, Result};
use std::fmt;

/// Polynomial degree; the zero polynomial has degree `MinusInfinity`,
/// which compares below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(i64),
}

pub const MINUS_INFINITY: Degree = Degree::MinusInfinity;

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::MinusInfinity => None,
        }
    }

    /// `-∞` absorbs.
    pub fn plus(self, o: Degree) -> Degree {
        match (self, o) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::MinusInfinity,
        }
    }

    pub fn minus(self, o: i64) -> Degree {
        match self {
            Degree::Finite(a) => Degree::Finite(a - o),
            d => d,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::MinusInfinity => write!(f, "-inf"),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Field> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

/// `(gcd, u, v)` with `u·a + v·b = gcd`.
pub type XgcdResult<C> = (Poly<C>, Poly<C>, Poly<C>);

impl<C: Field> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly { coeffs: vec![C::zero(), C::one()] }
    }

    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![C::zero(); k];
        v.push(c);
        Poly { coeffs: v }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&i| C::from_int(i)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            l => Degree::Finite(l as i64 - 1),
        }
    }

    /// Degree as `Option<usize>`, `None` for zero.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of stored coefficients (`deg + 1`, 0 for zero).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lc(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            });
        }
        Self::new(v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Self::new(v)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn scale_rat(&self, r: &BigRat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_rat(r)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![C::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&C::from_int(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let li = self.lc().inv();
        let mut v: Vec<C> = self.coeffs.iter().map(|c| c.mul(&li)).collect();
        *v.last_mut().unwrap() = C::one();
        Poly { coeffs: v }
    }

    /// Euclidean division. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < d.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let dl = d.coeffs.len();
        let li = d.lc().inv();
        let monic = d.is_monic();
        let mut r = self.coeffs.clone();
        let mut q = vec![C::zero(); r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let top = &r[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            let f = if monic { top.clone() } else { top.mul(&li) };
            for j in 0..dl - 1 {
                if !d.coeffs[j].is_zero() {
                    r[i + j] = r[i + j].sub(&f.mul(&d.coeffs[j]));
                }
            }
            r[i + dl - 1] = C::zero();
            q[i] = f;
        }
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient of an exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid. Returns `(g, u, v)` with `u·self + v·o = g`, `g`
    /// monic.
    pub fn xgcd(&self, o: &Self) -> Result<XgcdResult<C>> {
        if self.is_zero() && o.is_zero() {
            return Err(Error::Domain("xgcd of two zero polynomials".into()));
        }
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let li = r0.lc().inv();
        Ok((r0.scale(&li), s0.scale(&li), t0.scale(&li)))
    }

    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Writes the polynomial in the given variable, in a form the expression
    /// parser reads back.
    pub fn fmt_var(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            // a compound constant term needs no parentheses
            let bare = c.is_atom() || k == 0;
            let neg_atom = bare && s.starts_with('-');
            if !first {
                write!(f, "{}", if neg_atom { "-" } else { "+" })?;
            } else if neg_atom {
                write!(f, "-")?;
            }
            first = false;
            let body = if neg_atom { &s[1..] } else { &s[..] };
            let xpow = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{xpow}")?;
            } else if c.is_atom() {
                write!(f, "{body}*{xpow}")?;
            } else {
                write!(f, "({body})*{xpow}")?;
            }
        }
        Ok(())
    }
}

impl<C: Field> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_var(f, "x")
    }
}

/// `result·a ≡ 1 (mod m)` with `deg result < deg m`.
pub fn inv_mod<C: Field>(a: &Poly<C>, m: &Poly<C>) -> Result<Poly<C>> {
    if m.deg().unwrap_or(0) < 1 {
        return Err(Error::Domain("inv_mod: modulus must have degree ≥ 1".into()));
    }
    let ar = a.rem(m);
    if ar.is_zero() {
        return Err(Error::NotInvertible { gcd: m.monic().to_string() });
    }
    let (g, u, _) = ar.xgcd(m)?;
    if !g.is_one() {
        return Err(Error::NotInvertible { gcd: g.to_string() });
    }
    Ok(u.rem(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::rat;

    type QP = Poly<BigRat>;

    fn q(v: &[i64]) -> QP {
        QP::from_ints(v)
    }

    #[test]
    fn xgcd_examples() {
        let (g, u, v) = q(&[-1, 0, 1]).xgcd(&q(&[-1, 1])).unwrap();
        assert_eq!((g, u, v), (q(&[-1, 1]), QP::zero(), QP::one()));
        let (g, u, v) = q(&[1, 0, 1]).xgcd(&q(&[0, 1])).unwrap();
        assert_eq!((g, u, v), (QP::one(), QP::one(), q(&[0, -1])));
        // x^3-1, x^2-1: x^3-1 = x(x^2-1) + (x-1); so g = x-1, u=1, v=-x
        let (g, u, v) = q(&[-1, 0, 0, 1]).xgcd(&q(&[-1, 0, 1])).unwrap();
        assert_eq!((g, u, v), (q(&[-1, 1]), QP::one(), q(&[0, -1])));
        assert!(QP::zero().xgcd(&QP::zero()).is_err());
    }

    #[test]
    fn inv_mod_examples() {
        assert_eq!(inv_mod(&q(&[0, 1]), &q(&[-1, 1])).unwrap(), QP::one());
        assert_eq!(inv_mod(&q(&[0, 1]), &q(&[1, 0, 1])).unwrap(), q(&[0, -1]));
        match inv_mod(&q(&[-1, 1]), &q(&[-1, 1])) {
            Err(Error::NotInvertible { .. }) => {}
            other => panic!("expected NotInvertible, got {other:?}"),
        }
    }

    #[test]
    fn zero_degree_is_minus_infinity() {
        assert_eq!(QP::zero().degree(), MINUS_INFINITY);
        assert!(MINUS_INFINITY < Degree::Finite(-5));
        assert_eq!(q(&[1, 2]).degree().plus(MINUS_INFINITY), MINUS_INFINITY);
    }

    #[test]
    fn display_round_trippable_shape() {
        let p = QP::new(vec![rat(-3, 2), BigRat::from_integer(0.into()), rat(1, 1), rat(-1, 1)]);
        assert_eq!(p.to_string(), "-x^3+x^2-3/2");
        assert_eq!(QP::zero().to_string(), "0");
    }
}
