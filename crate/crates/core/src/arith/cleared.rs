//! Polynomials in `x` over ℚ(n) written as `N(n, x) / d(n)` with
//! `N ∈ ℤ[n][x]`, `d ∈ ℤ[n]`. Products and sums never take gcds in `x`,
//! which keeps large certificate computations cheap.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::nrat::clear_rat_poly;
use super::xpoly::{clear_n_denominators, zlcm};
use super::{lift, BigRat, Field, NRat, QPoly, RatFn, XPoly, XRat, ZPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct ClearedPoly {
    num: Vec<ZPoly>,
    den: ZPoly,
}

fn trim(v: &mut Vec<ZPoly>) {
    while v.last().is_some_and(ZPoly::is_zero) {
        v.pop();
    }
}

fn zx_mul(a: &[ZPoly], b: &[ZPoly]) -> Vec<ZPoly> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![ZPoly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    trim(&mut out);
    out
}

fn zx_scale(a: &[ZPoly], s: &ZPoly) -> Vec<ZPoly> {
    if s.is_one() {
        return a.to_vec();
    }
    let mut v: Vec<ZPoly> = a.iter().map(|c| c.mul(s)).collect();
    trim(&mut v);
    v
}

fn zx_add(a: &[ZPoly], b: &[ZPoly]) -> Vec<ZPoly> {
    let n = a.len().max(b.len());
    let z = ZPoly::zero();
    let mut v: Vec<ZPoly> = (0..n).map(|i| a.get(i).unwrap_or(&z).add(b.get(i).unwrap_or(&z))).collect();
    trim(&mut v);
    v
}

impl ClearedPoly {
    pub fn zero() -> Self {
        ClearedPoly { num: vec![], den: ZPoly::one() }
    }

    pub fn one() -> Self {
        ClearedPoly { num: vec![ZPoly::one()], den: ZPoly::one() }
    }

    pub fn from_xpoly(p: &XPoly) -> Self {
        let (mut num, den) = clear_n_denominators(p);
        trim(&mut num);
        ClearedPoly { num, den }.normalized()
    }

    pub fn from_qpoly(p: &QPoly) -> Self {
        Self::from_xpoly(&lift(p))
    }

    pub fn num(&self) -> &[ZPoly] {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Removes integer content shared by numerator and denominator.
    pub fn normalized(mut self) -> Self {
        if self.num.is_empty() {
            self.den = ZPoly::one();
            return self;
        }
        let mut g = self.den.content();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(&c.content());
        }
        if self.den.lc().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        if !g.is_one() && !g.is_zero() {
            self.num = self.num.iter().map(|c| c.div_scalar_exact(&g)).collect();
            self.den = self.den.div_scalar_exact(&g);
        }
        self
    }

    fn sign_fixed(mut self) -> Self {
        if self.den.lc().is_some_and(|l| l.is_negative()) {
            self.den = self.den.neg();
            self.num = self.num.iter().map(ZPoly::neg).collect();
        }
        self
    }

    pub fn mul(&self, o: &Self) -> Self {
        ClearedPoly { num: zx_mul(&self.num, &o.num), den: self.den.mul(&o.den) }.normalized()
    }

    /// Multiplication by `s(n)`.
    pub fn scale_n(&self, s: &ZPoly) -> Self {
        ClearedPoly { num: zx_scale(&self.num, s), den: self.den.clone() }.normalized()
    }

    /// Division by a nonzero `s(n)`.
    pub fn div_n(&self, s: &ZPoly) -> Self {
        assert!(!s.is_zero(), "division by zero");
        let mut num = self.num.clone();
        let mut den = self.den.mul(s);
        if den.lc().is_some_and(|l| l.is_negative()) {
            den = den.neg();
            num = num.iter().map(ZPoly::neg).collect();
        }
        ClearedPoly { num, den }.normalized()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return ClearedPoly { num: zx_add(&self.num, &o.num), den: self.den.clone() }.normalized();
        }
        let l = zlcm(&self.den, &o.den);
        let a = zx_scale(&self.num, &l.div_exact(&self.den).unwrap());
        let b = zx_scale(&o.num, &l.div_exact(&o.den).unwrap());
        ClearedPoly { num: zx_add(&a, &b), den: l }.normalized()
    }

    pub fn neg(&self) -> Self {
        ClearedPoly { num: self.num.iter().map(ZPoly::neg).collect(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// `d/dx`.
    pub fn derivative(&self) -> Self {
        let mut num: Vec<ZPoly> =
            self.num.iter().enumerate().skip(1).map(|(i, c)| c.scale(&BigInt::from(i))).collect();
        trim(&mut num);
        ClearedPoly { num, den: self.den.clone() }.normalized()
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `n ↦ n + s`.
    pub fn shift_n(&self, s: i64) -> Self {
        ClearedPoly { num: self.num.iter().map(|c| c.shift(s)).collect(), den: self.den.shift(s) }
    }

    /// `Σ_j n^j S_j(x)`: the slices `S_j ∈ ℤ[x]` of the numerator.
    fn slices(&self) -> Vec<QPoly> {
        let dn = self.num.iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
        (0..dn)
            .map(|j| {
                QPoly::new(
                    self.num
                        .iter()
                        .map(|c| BigRat::from_integer(c.coeffs().get(j).cloned().unwrap_or_default()))
                        .collect(),
                )
            })
            .collect()
    }

    /// Degree in `x`, `-1` for zero.
    pub fn degree(&self) -> i64 {
        self.num.len() as i64 - 1
    }

    /// Remainder modulo `c ∈ ℚ[x]`.
    pub fn rem_q(&self, c: &QPoly) -> Self {
        let (cz, _) = clear_rat_poly(c);
        let d = cz.degree().expect("nonzero divisor");
        if d == 0 {
            return Self::zero();
        }
        if self.num.len() <= d {
            return self.clone();
        }
        let m = self.num.len() - 1;
        let l = cz.lc().unwrap().clone();
        let mut r = self.num.clone();
        let mut scale_pow = 0usize;
        for k in (0..=m - d).rev() {
            let top = r[k + d].clone();
            if top.is_zero() {
                continue;
            }
            // r ← l·r − top·x^k·c̃
            if !l.is_one() {
                for x in r.iter_mut().take(k + d + 1) {
                    *x = x.scale(&l);
                }
                scale_pow += 1;
            }
            for (i, ci) in cz.coeffs().iter().enumerate() {
                if !ci.is_zero() {
                    r[k + i] = r[k + i].sub(&top.scale(ci));
                }
            }
            debug_assert!(r[k + d].is_zero());
        }
        r.truncate(d);
        trim(&mut r);
        let den = self.den.scale(&num_traits::pow(l, scale_pow));
        ClearedPoly { num: r, den }.normalized()
    }

    /// Exact division by `c ∈ ℚ[x]`; panics if `c` does not divide.
    pub fn div_exact_q(&self, c: &QPoly) -> Self {
        let (cz, s) = clear_rat_poly(c);
        let d = cz.degree().expect("nonzero divisor");
        if self.is_zero() {
            return self.clone();
        }
        if d == 0 {
            let c0 = cz.lc().unwrap();
            let num = self.num.iter().map(|x| x.scale(&s)).collect();
            return ClearedPoly { num, den: self.den.scale(c0) }.sign_fixed().normalized();
        }
        let m = self.num.len() - 1;
        assert!(m >= d, "divisor degree exceeds dividend degree");
        let l = cz.lc().unwrap().clone();
        let lpow = num_traits::pow(l.clone(), m - d + 1);
        let mut r: Vec<ZPoly> = self.num.iter().map(|x| x.scale(&lpow)).collect();
        let mut q = vec![ZPoly::zero(); m - d + 1];
        for k in (0..=m - d).rev() {
            let t = r[k + d].div_scalar_exact(&l);
            if t.is_zero() {
                continue;
            }
            for (i, ci) in cz.coeffs().iter().enumerate() {
                if !ci.is_zero() {
                    r[k + i] = r[k + i].sub(&t.scale(ci));
                }
            }
            q[k] = t;
        }
        assert!(r.iter().all(ZPoly::is_zero), "inexact division");
        trim(&mut q);
        let q = q.iter().map(|x| x.scale(&s)).collect();
        ClearedPoly { num: q, den: self.den.scale(&lpow) }.sign_fixed().normalized()
    }

    pub fn to_xpoly(&self) -> XPoly {
        XPoly::new(self.num.iter().map(|c| NRat::new(c.clone(), self.den.clone())).collect())
    }
}

/// Canonical `num/den` for `den ∈ ℚ[x]`, given a polynomial `rad` whose
/// prime factors cover those of `den` (its radical, typically). Common
/// factors are found by reducing each `n`-slice of the numerator modulo
/// `rad`, so no large gcd is taken.
pub fn xrat_from_cleared(num: &ClearedPoly, den: &QPoly, rad: &QPoly) -> XRat {
    assert!(!den.is_zero(), "zero denominator");
    if num.is_zero() {
        return RatFn::zero();
    }
    let mut num = num.clone();
    let mut den = den.clone();
    loop {
        let mut c = rad.monic();
        c = c.gcd(&den.rem(&c));
        for s in num.slices() {
            if c.is_constant() {
                break;
            }
            c = c.gcd(&s.rem(&c));
        }
        if c.is_constant() {
            break;
        }
        num = num.div_exact_q(&c);
        den = den.div_exact(&c).unwrap();
    }
    let li = den.lc().inv();
    RatFn::from_reduced(num.to_xpoly().scale(&NRat::from_rat(&li)), lift(&den.scale(&li)))
}
