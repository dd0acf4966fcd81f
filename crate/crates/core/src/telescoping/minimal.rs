//! Moving positive integer residues of `S/T` into the polynomial factor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::term::{build_term, HyperTerm};
use crate::arith::nrat::clear_rat_poly;
use crate::arith::{lift, partial_fractions_with, squarefree_decomp, BigRat, QPoly, QRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimalityStatus {
    Minimal,
    Rewritten,
    Unverified,
}

/// Largest integer we are willing to scan for as a residue.
const ROOT_SCAN_LIMIT: u64 = 1 << 20;

fn resultant(a: &QPoly, b: &QPoly) -> BigRat {
    if a.is_zero() || b.is_zero() {
        return BigRat::zero();
    }
    let (da, db) = (a.deg().unwrap(), b.deg().unwrap());
    if da == 0 {
        return a.lc().pow(db as i32);
    }
    if db == 0 {
        return b.lc().pow(da as i32);
    }
    let sign = if da * db % 2 == 1 { -BigRat::one() } else { BigRat::one() };
    if da < db {
        return sign * resultant(b, a);
    }
    let r = a.rem(b);
    if r.is_zero() {
        return BigRat::zero();
    }
    let dr = r.deg().unwrap();
    sign * b.lc().pow((da - dr) as i32) * resultant(b, &r)
}

/// `Res_x(t, s − z t')` as a polynomial in `z`, by interpolation.
fn residue_polynomial(s: &QPoly, t: &QPoly) -> QPoly {
    let dt = t.derivative();
    let d = t.deg().unwrap_or(0);
    let xs: Vec<BigRat> = (0..=d as i64).map(|v| BigRat::from_integer(v.into())).collect();
    let ys: Vec<BigRat> = xs.iter().map(|z| resultant(t, &s.sub(&dt.scale(z)))).collect();
    let mut out = QPoly::zero();
    for (i, xi) in xs.iter().enumerate() {
        let mut basis = QPoly::constant(ys[i].clone());
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                let lin = QPoly::new(vec![-xj.clone(), BigRat::one()]);
                basis = basis.mul(&lin).scale(&(xi - xj).recip());
            }
        }
        out = out.add(&basis);
    }
    out
}

/// Positive integer roots, or `None` if the search would be too large.
fn positive_integer_roots(p: &QPoly) -> Option<Vec<u64>> {
    if p.is_zero() {
        return None;
    }
    let (z, _) = clear_rat_poly(p);
    let c = z.coeffs();
    let low = c.iter().position(|x| !x.is_zero()).unwrap();
    let lead = c.last().unwrap().abs();
    let a0 = c[low].abs();
    // Cauchy bound
    let mut bound = BigInt::zero();
    for x in &c[low..c.len() - 1] {
        let q = x.abs().div_ceil(&lead);
        if q > bound {
            bound = q;
        }
    }
    bound += 1;
    let limit = bound.min(a0.clone());
    let limit = limit.to_u64().filter(|&v| v <= ROOT_SCAN_LIMIT)?;
    let mut out = vec![];
    for v in 1..=limit {
        let bv = BigInt::from(v);
        if !a0.is_multiple_of(&bv) {
            continue;
        }
        if z.eval(&bv).is_zero() {
            out.push(v);
        }
    }
    Some(out)
}

/// Rewrites `Φ = W·Φ̃` so that the simple poles of `S/T` away from the
/// zeros and poles of `H` carry no positive integer residue, absorbing `W`
/// into `P`.
pub fn ensure_minimal(t: &HyperTerm) -> (HyperTerm, MinimalityStatus) {
    let st = t.st();
    let tden = st.den();
    if st.is_zero() || tden.is_constant() {
        return (t.clone(), MinimalityStatus::Minimal);
    }
    let Ok(sqf) = squarefree_decomp(tden) else { return (t.clone(), MinimalityStatus::Unverified) };
    let support = t.h().num().mul(t.h().den());
    let mut status = MinimalityStatus::Minimal;
    let higher = sqf.factors.iter().filter(|(_, k)| *k > 1).fold(QPoly::one(), |acc, (f, _)| acc.mul(f));
    if !higher.gcd(t.h().den()).is_constant() {
        status = MinimalityStatus::Unverified;
    }
    let mut t1 = sqf.factor(1);
    loop {
        let g = t1.gcd(&support);
        if g.is_constant() {
            break;
        }
        t1 = t1.div_exact(&g).unwrap();
    }
    if t1.is_constant() {
        return (t.clone(), status);
    }
    let rest = tden.div_exact(&t1).unwrap();
    let mut factors = vec![(t1.clone(), 1)];
    if !rest.is_constant() {
        factors.push((rest.monic(), 1));
    }
    let Ok(pf) = partial_fractions_with(st, &factors) else {
        return (t.clone(), MinimalityStatus::Unverified);
    };
    let s1 = pf
        .parts
        .iter()
        .find(|part| part.factor == t1)
        .map(|part| part.numer.clone())
        .unwrap_or_else(QPoly::zero);
    if s1.is_zero() {
        return (t.clone(), status);
    }
    let Some(roots) = positive_integer_roots(&residue_polynomial(&s1, &t1)) else {
        return (t.clone(), MinimalityStatus::Unverified);
    };
    if roots.is_empty() {
        return (t.clone(), status);
    }
    let dt1 = t1.derivative();
    let mut p = t.p().clone();
    let mut new_st = st.clone();
    for v in roots {
        let bv = BigRat::from_integer(v.into());
        let w = t1.gcd(&s1.sub(&dt1.scale(&bv)));
        if w.is_constant() {
            continue;
        }
        p = p.mul(&lift(&w.pow(v as u32)));
        new_st = new_st.sub(&QRat::new(w.derivative().scale(&bv), w.clone()));
    }
    let out = build_term(p, t.h().clone(), new_st).expect("H is unchanged and nonzero");
    let status = if status == MinimalityStatus::Unverified { status } else { MinimalityStatus::Rewritten };
    (out, status)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, XPoly};

    fn term(st: QRat) -> HyperTerm {
        build_term(XPoly::one(), QRat::one(), st).unwrap()
    }

    #[test]
    fn documented_cases() {
        let x = QPoly::from_ints(&[0, 1]);
        let (out, s) = ensure_minimal(&term(QRat::new(QPoly::from_ints(&[2]), x.clone())));
        assert_eq!(s, MinimalityStatus::Rewritten);
        assert_eq!(out.p(), &lift(&QPoly::from_ints(&[0, 0, 1])));
        assert!(out.st().is_zero());

        let t = term(QRat::new(QPoly::from_ints(&[-2]), x.clone()));
        assert_eq!(ensure_minimal(&t), (t.clone(), MinimalityStatus::Minimal));

        let t = term(QRat::new(QPoly::constant(rat(1, 2)), x));
        assert_eq!(ensure_minimal(&t), (t.clone(), MinimalityStatus::Minimal));
    }

    #[test]
    fn residues_of_conjugate_poles() {
        // 3·2x/(x²+1): residue 3 at ±i
        let st = QRat::new(QPoly::from_ints(&[0, 6]), QPoly::from_ints(&[1, 0, 1]));
        let (out, s) = ensure_minimal(&term(st));
        assert_eq!(s, MinimalityStatus::Rewritten);
        assert_eq!(out.p(), &lift(&QPoly::from_ints(&[1, 0, 1]).pow(3)));
        assert!(out.st().is_zero());
    }

    #[test]
    fn resultant_examples() {
        let r = residue_polynomial(&QPoly::from_ints(&[2]), &QPoly::from_ints(&[0, 1]));
        assert_eq!(r, QPoly::from_ints(&[2, -1]));
    }
}
