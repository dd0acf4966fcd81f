//! Dense univariate polynomials with integer coefficients.
//!
//! This is the workhorse behind [`NRat`](super::NRat): every element of ℚ(n)
//! is stored as a pair of `ZPoly`s, and the gcd used to keep those pairs
//! reduced is the modular (small-prime) algorithm below.

use super::modp::{self, Crt};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    c: Vec<BigInt>,
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly{:?}", self.c.iter().map(|x| x.to_string()).collect::<Vec<_>>())
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
}

impl ZPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        trim(&mut c);
        ZPoly { c }
    }

    pub fn zero() -> Self {
        ZPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(a: BigInt) -> Self {
        Self::new(vec![a])
    }

    /// The polynomial `n`.
    pub fn var() -> Self {
        ZPoly { c: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for size bookkeeping.
    pub fn deg0(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Option<&BigInt> {
        self.c.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.c.first().cloned().unwrap_or_default()
    }

    pub fn max_bits(&self) -> u64 {
        self.c.iter().map(|x| x.bits()).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        ZPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (x, y) in c.iter_mut().zip(&short.c) {
            *x += y;
        }
        Self::new(c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let mut c = self.c.clone();
        c.resize(n, BigInt::zero());
        for (x, y) in c.iter_mut().zip(&o.c) {
            *x -= y;
        }
        Self::new(c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.c.len() == 1 {
            return o.scale(&self.c[0]);
        }
        if o.c.len() == 1 {
            return self.scale(&o.c[0]);
        }
        if self.c.len().min(o.c.len()) >= KARATSUBA_CUTOFF {
            return Self::new(karatsuba(&self.c, &o.c));
        }
        Self::new(schoolbook(&self.c, &o.c))
    }

    pub fn scale(&self, a: &BigInt) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        ZPoly { c: self.c.iter().map(|x| x * a).collect() }
    }

    /// Divides every coefficient by `a`, which must divide them exactly.
    pub fn div_scalar_exact(&self, a: &BigInt) -> Self {
        if a.is_one() {
            return self.clone();
        }
        ZPoly {
            c: self
                .c
                .iter()
                .map(|x| {
                    debug_assert!((x % a).is_zero());
                    x / a
                })
                .collect(),
        }
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for x in self.c.iter().rev() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().unwrap().is_negative() {
            g = -g;
        }
        self.div_scalar_exact(&g)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for x in self.c.iter().rev() {
            acc = acc * v + x;
        }
        acc
    }

    pub fn reduce_mod(&self, p: u64) -> Vec<u64> {
        let mut v: Vec<u64> = self.c.iter().map(|x| modp::bigint_mod(x, p)).collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn eval_mod(&self, v: u64, p: u64) -> u64 {
        let mut acc = 0u64;
        for x in self.c.iter().rev() {
            acc = modp::add_mod(modp::mul_mod(acc, v, p), modp::bigint_mod(x, p), p);
        }
        acc
    }

    /// `p(n + s)`.
    pub fn shift(&self, s: i64) -> Self {
        if s == 0 || self.c.len() <= 1 {
            return self.clone();
        }
        // Taylor shift by repeated synthetic division.
        let s = BigInt::from(s);
        let mut c = self.c.clone();
        let d = c.len();
        for i in 0..d {
            for j in (i..d - 1).rev() {
                let t = &c[j + 1] * &s;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// Exact division in ℤ[n]; `None` unless `d` divides `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.c.len() == 1 {
            let a = &d.c[0];
            if self.c.iter().all(|x| (x % a).is_zero()) {
                return Some(ZPoly { c: self.c.iter().map(|x| x / a).collect() });
            }
            return None;
        }
        if self.c.len() < d.c.len() {
            return None;
        }
        let mut r = self.c.clone();
        let dl = d.c.len();
        let lc = d.lc().unwrap();
        let mut q = vec![BigInt::zero(); r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let top = &r[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (qi, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[i + j] -= &qi * dj;
            }
            q[i] = qi;
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Greatest common divisor: content gcd times primitive gcd, positive
    /// leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive().scale(&o.content());
        }
        if o.is_zero() {
            return self.primitive().scale(&self.content());
        }
        let cg = self.content().gcd(&o.content());
        let g = primitive_gcd(&self.primitive(), &o.primitive());
        g.scale(&cg)
    }

    /// Gcd of primitive parts only (content ignored).
    pub fn gcd_primitive(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive();
        }
        if o.is_zero() {
            return self.primitive();
        }
        primitive_gcd(&self.primitive(), &o.primitive())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        r
    }
}

const KARATSUBA_CUTOFF: usize = 24;

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_into(dst: &mut [BigInt], src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

fn karatsuba(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (n, m) = (a.len(), b.len());
    if n.min(m) < KARATSUBA_CUTOFF {
        return schoolbook(a, b);
    }
    let h = n.max(m) / 2;
    if n <= h || m <= h {
        // unbalanced: split the longer operand only
        let (long, short) = if n >= m { (a, b) } else { (b, a) };
        let mut out = vec![BigInt::zero(); n + m - 1];
        let mut i = 0;
        while i < long.len() {
            let end = (i + short.len()).min(long.len());
            let part = karatsuba(&long[i..end], short);
            add_into(&mut out[i..], &part);
            i = end;
        }
        return out;
    }
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let z0 = karatsuba(a0, b0);
    let z2 = karatsuba(a1, b1);
    let sum = |x: &[BigInt], y: &[BigInt]| {
        let mut s = x.to_vec();
        if s.len() < y.len() {
            s.resize(y.len(), BigInt::zero());
        }
        add_into(&mut s, y);
        s
    };
    let mut z1 = karatsuba(&sum(a0, a1), &sum(b0, b1));
    for (i, x) in z0.iter().enumerate() {
        z1[i] -= x;
    }
    for (i, x) in z2.iter().enumerate() {
        z1[i] -= x;
    }
    let mut out = vec![BigInt::zero(); n + m - 1];
    add_into(&mut out, &z0);
    add_into(&mut out[h..], &z1);
    add_into(&mut out[2 * h..], &z2);
    out
}

// ---- polynomials over F_p, as coefficient vectors -------------------------

pub(crate) fn trim_p(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd over F_p.
pub(crate) fn gcd_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim_p(&mut a);
    trim_p(&mut b);
    while !b.is_empty() {
        rem_p(&mut a, &b, p);
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&l) = a.last() {
        let li = modp::inv_mod(l, p);
        for x in a.iter_mut() {
            *x = modp::mul_mod(*x, li, p);
        }
    }
    a
}

/// `a <- a mod b` over F_p; `b` nonzero and trimmed.
pub(crate) fn rem_p(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let bl = b.len();
    let li = modp::inv_mod(*b.last().unwrap(), p);
    while a.len() >= bl {
        let top = a.pop().unwrap();
        if top != 0 {
            let f = modp::mul_mod(top, li, p);
            let off = a.len() + 1 - bl;
            for j in 0..bl - 1 {
                a[off + j] = modp::sub_mod(a[off + j], modp::mul_mod(f, b[j], p), p);
            }
        }
        trim_p(a);
    }
}

fn primitive_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_constant() || b.is_constant() {
        return ZPoly::one();
    }
    if a == b {
        return a.clone();
    }
    let gamma = a.lc().unwrap().gcd(b.lc().unwrap());
    let mut best: Option<usize> = None;
    let mut crt: Option<Crt> = None;
    for &p in modp::primes() {
        let gam = modp::bigint_mod(&gamma, p);
        if gam == 0 {
            continue;
        }
        let ap = a.reduce_mod(p);
        let bp = b.reduce_mod(p);
        let mut gp = gcd_p(&ap, &bp, p);
        let d = gp.len() - 1;
        if d == 0 {
            return ZPoly::one();
        }
        for x in gp.iter_mut() {
            *x = modp::mul_mod(*x, gam, p);
        }
        match best {
            Some(bd) if d > bd => continue,
            Some(bd) if d == bd => {
                let c = crt.as_mut().unwrap();
                let stable = c.add(&gp, p);
                if stable {
                    let cand = ZPoly::new(c.symmetric()).primitive();
                    if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                        return cand;
                    }
                }
            }
            _ => {
                best = Some(d);
                crt = Some(Crt::new(&gp, p));
            }
        }
    }
    unreachable!("modular gcd exhausted the prime table")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zp(v: &[i64]) -> ZPoly {
        ZPoly::from_i64s(v)
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = zp(&[1, 1]); // n+1
        let a = f.mul(&zp(&[-2, 0, 3]));
        let b = f.mul(&zp(&[5, 7]));
        assert_eq!(a.gcd(&b), f);
        assert_eq!(zp(&[4, 2]).gcd(&zp(&[6, 3])), zp(&[2, 1]));
        assert_eq!(zp(&[1, 1]).gcd(&zp(&[1, -1])), ZPoly::one());
    }

    #[test]
    fn shift_matches_substitution() {
        let p = zp(&[3, -1, 2, 5]);
        let q = p.shift(-2);
        for v in -3i64..4 {
            assert_eq!(q.eval(&BigInt::from(v)), p.eval(&BigInt::from(v - 2)));
        }
    }

    #[test]
    fn karatsuba_agrees_with_schoolbook() {
        let a: Vec<BigInt> = (0..61).map(|i| BigInt::from(i * 7 - 100)).collect();
        let b: Vec<BigInt> = (0..40).map(|i| BigInt::from(3 - i * i)).collect();
        assert_eq!(karatsuba(&a, &b), schoolbook(&a, &b));
    }

    fn arb_zpoly(max_deg: usize) -> impl Strategy<Value = ZPoly> {
        prop::collection::vec(-20i64..20, 0..=max_deg + 1).prop_map(|v| ZPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn gcd_divides_and_cofactors_coprime(a in arb_zpoly(6), b in arb_zpoly(6), c in arb_zpoly(3)) {
            prop_assume!(!c.is_zero());
            let x = a.mul(&c);
            let y = b.mul(&c);
            let g = x.gcd(&y);
            if !x.is_zero() || !y.is_zero() {
                prop_assert!(x.div_exact(&g).is_some());
                prop_assert!(y.div_exact(&g).is_some());
                let u = x.div_exact(&g).unwrap();
                let v = y.div_exact(&g).unwrap();
                let h = u.gcd(&v);
                prop_assert!(h.is_one() || (u.is_zero() || v.is_zero()));
            }
        }
    }
}
