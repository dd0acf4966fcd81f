use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::check_instance;
use crate::arith::modp::{self, primes};
use crate::arith::nrat::clear_rat_poly;
use crate::arith::{BigRat, QRat};
use crate::error::Result;
use crate::telescoping::Telescoper;

/// `u_0..u_N` of `f^{(−1)}`, from `num(g) = x·den(g)` solved one order at a
/// time.
///
/// With integral `a = num f`, `b = den f` every `a_1^{2m−1} u_m` is an
/// integer, and so is `a_1^{2m−j} [x^m] g^j`; the loop runs on those.
pub fn series_reversion(f: &QRat, n: usize) -> Result<Vec<BigRat>> {
    check_instance(f)?;
    let (a, la) = clear_rat_poly(f.num());
    let (b, lb) = clear_rat_poly(f.den());
    // f = (a/la)/(b/lb): scale both sides to a common integral pair
    let a: Vec<BigInt> = a.coeffs().iter().map(|c| c * &lb).collect();
    let b: Vec<BigInt> = b.coeffs().iter().map(|c| c * &la).collect();
    let top = a.len().max(b.len());
    let mut u = vec![BigRat::zero(); n + 1];
    if n == 0 {
        return Ok(u);
    }
    let a1 = a[1].clone();
    let a1_pows: Vec<BigInt> = std::iter::successors(Some(BigInt::one()), |x| Some(x * &a1)).take(top + 1).collect();
    // pw[j][m] = a_1^{2m−j} [x^m] g^j
    let mut pw: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n + 1]; top];
    pw[0][0] = BigInt::one();
    let mut den = a1.clone(); // a_1^{2m−1}
    let a1_sq = &a1 * &a1;
    for m in 1..=n {
        for j in 2..top.min(m + 1) {
            let mut s = BigInt::zero();
            for i in (j - 1)..m {
                if !pw[j - 1][i].is_zero() && !pw[1][m - i].is_zero() {
                    s += &pw[j - 1][i] * &pw[1][m - i];
                }
            }
            pw[j][m] = s;
        }
        let mut acc = BigInt::zero();
        for (j, aj) in a.iter().enumerate().skip(2) {
            if !aj.is_zero() && !pw[j][m].is_zero() {
                acc += aj * &a1_pows[j - 2] * &pw[j][m];
            }
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() && !pw[j][m - 1].is_zero() {
                acc -= bj * &a1_pows[j] * &pw[j][m - 1];
            }
        }
        let um = -acc;
        u[m] = BigRat::new(um.clone(), den.clone());
        if top > 1 {
            pw[1][m] = um;
        }
        den *= &a1_sq;
    }
    Ok(u)
}

/// True iff `Σ ĉ_i(n) u_{n+i} = 0` for every `n` in `[n1, n2]`.
pub fn check_recurrence(u: &[BigRat], l: &Telescoper, n1: usize, n2: usize) -> bool {
    let r = l.order();
    if n2 + r >= u.len() {
        return false;
    }
    (n1..=n2).all(|n| {
        let nb = n.into();
        l.cleared()
            .iter()
            .enumerate()
            .fold(BigRat::zero(), |acc, (i, c)| acc + BigRat::from_integer(c.eval(&nb)) * &u[n + i])
            .is_zero()
    })
}

/// Whether some nonzero recurrence of the given order with polynomial
/// coefficients of degree `≤ degree` annihilates `u_1..u_{len−1}`. A
/// full-rank image modulo a prime certifies that none does.
pub fn fits_lower_order(u: &[BigRat], order: usize, degree: usize) -> bool {
    let unknowns = (order + 1) * (degree + 1);
    let eqs = u.len().saturating_sub(order + 1);
    if eqs < unknowns {
        return true;
    }
    for &p in primes().iter().take(4) {
        let Some(res): Option<Vec<u64>> = u
            .iter()
            .map(|x| {
                let d = modp::bigint_mod(x.denom(), p);
                (d != 0).then(|| modp::mul_mod(modp::bigint_mod(x.numer(), p), modp::inv_mod(d, p), p))
            })
            .collect()
        else {
            continue;
        };
        let mut rows: Vec<Vec<u64>> = (1..=eqs)
            .map(|n| {
                let mut row = Vec::with_capacity(unknowns);
                for i in 0..=order {
                    let mut np = 1u64;
                    for _ in 0..=degree {
                        row.push(modp::mul_mod(np, res[n + i], p));
                        np = modp::mul_mod(np, n as u64 % p, p);
                    }
                }
                row
            })
            .collect();
        if rank_mod(&mut rows, unknowns, p) == unknowns {
            return false;
        }
    }
    true
}

fn rank_mod(m: &mut [Vec<u64>], ncols: usize, p: u64) -> usize {
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let inv = modp::inv_mod(m[r][c], p);
        for i in r + 1..m.len() {
            if m[i][c] != 0 {
                let f = modp::mul_mod(m[i][c], inv, p);
                for j in c..ncols {
                    let t = modp::mul_mod(f, m[r][j], p);
                    m[i][j] = modp::sub_mod(m[i][j], t, p);
                }
            }
        }
        r += 1;
    }
    r
}
