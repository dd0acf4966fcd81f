//! Word-size prime field arithmetic used by the modular gcd and the
//! rank pre-checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::OnceLock;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue.
#[inline]
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

pub fn i64_mod(x: i64, p: u64) -> u64 {
    (x as i128).rem_euclid(p as i128) as u64
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending list of primes just below 2^62.
pub fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(4096);
        let mut c = (1u64 << 62) - 1;
        while out.len() < 4096 {
            if is_prime_u64(c) {
                out.push(c);
            }
            c -= 2;
        }
        out
    })
}

/// Incremental Chinese remaindering of integer vectors.
#[derive(Clone, Debug)]
pub struct Crt {
    pub modulus: BigInt,
    pub residues: Vec<BigInt>,
}

impl Crt {
    pub fn new(residues: &[u64], p: u64) -> Self {
        Crt {
            modulus: BigInt::from(p),
            residues: residues
                .iter()
                .map(|&r| if r > p / 2 { BigInt::from(r as i128 - p as i128) } else { BigInt::from(r) })
                .collect(),
        }
    }

    /// Folds in residues mod `p`; returns true if no value changed. Values
    /// are kept in the symmetric range so small negative integers are
    /// stable.
    pub fn add(&mut self, residues: &[u64], p: u64) -> bool {
        assert_eq!(residues.len(), self.residues.len());
        let m_mod_p = bigint_mod(&self.modulus, p);
        let m_inv = inv_mod(m_mod_p, p);
        let mut stable = true;
        for (x, &r) in self.residues.iter_mut().zip(residues) {
            let xr = bigint_mod(x, p);
            let t = mul_mod(sub_mod(r, xr, p), m_inv, p);
            if t != 0 {
                stable = false;
                let t = if t > p / 2 { t as i128 - p as i128 } else { t as i128 };
                *x += &self.modulus * BigInt::from(t);
            }
        }
        self.modulus *= BigInt::from(p);
        stable
    }

    /// Values in the symmetric range (-m/2, m/2].
    pub fn symmetric(&self) -> Vec<BigInt> {
        let half = &self.modulus >> 1;
        self.residues
            .iter()
            .map(|x| {
                if x > &half {
                    x - &self.modulus
                } else if x <= &-&half {
                    x + &self.modulus
                } else {
                    x.clone()
                }
            })
            .collect()
    }
}

/// Rational number reconstruction of `a` mod `m` with |num|,den ≤ sqrt(m/2).
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<(BigInt, BigInt)> {
    let bound = (m >> 1usize).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::from(1));
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    if t1.is_negative() {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime_and_large() {
        let ps = primes();
        assert!(ps[0] > 1 << 61);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(is_prime_u64(ps[10]));
        assert!(!is_prime_u64(ps[10] * 3));
    }

    #[test]
    fn crt_recovers_negative_values() {
        let vals = [BigInt::from(-123456789i64) * BigInt::from(987654321u64), BigInt::from(5)];
        let ps = primes();
        let res = |p: u64| vals.iter().map(|v| bigint_mod(v, p)).collect::<Vec<_>>();
        let mut crt = Crt::new(&res(ps[0]), ps[0]);
        crt.add(&res(ps[1]), ps[1]);
        assert_eq!(crt.symmetric(), vals.to_vec());
    }

    #[test]
    fn reconstructs_small_fraction() {
        let m = BigInt::from(primes()[0]);
        let a = (BigInt::from(-22) * BigInt::from(inv_mod(7, primes()[0]))).mod_floor(&m);
        assert_eq!(rational_reconstruct(&a, &m), Some((BigInt::from(-22), BigInt::from(7))));
    }
}
