//! Independent check of a telescoper/certificate pair.
//!
//! All quantities are brought to `N(n, x) / d(n)` with `N ∈ ℤ[n][x]` and
//! the identity is tested after cross-multiplication, so no gcd in `x` is
//! ever taken.

use super::mixed::{Certificate, Telescoper};
use super::term::HyperTerm;
use crate::arith::{ClearedPoly as Frac, Field, NRat, ShiftN};
use crate::error::{Error, Result};

/// True iff `P(n+r)H^r − Σ c_i P(n+i)H^i = nQH'/H + QS/T + Q'` exactly.
pub fn verify_telescoper(t: &HyperTerm, l: &Telescoper, q: &Certificate) -> bool {
    let r = l.order();
    let hn = Frac::from_qpoly(t.h().num());
    let hd = Frac::from_qpoly(t.h().den());
    // left side times hd^r
    let mut lhs = Frac::zero();
    for i in 0..=r {
        let e = if i == r { NRat::one() } else { l.coeffs()[i].neg() };
        if e.is_zero() {
            continue;
        }
        let term = Frac::from_xpoly(&t.p().shift_n(i as i64).scale(&e))
            .mul(&hn.pow(i))
            .mul(&hd.pow(r - i));
        lhs = lhs.add(&term);
    }
    // Q·A/B + Q' = (N A D + B (N' D − N D')) / (B D²)
    let n = Frac::from_xpoly(q.q.num());
    let d = Frac::from_xpoly(q.q.den());
    let a = Frac::from_xpoly(t.a());
    let b = Frac::from_qpoly(t.b());
    let rhs_num = n
        .mul(&a)
        .mul(&d)
        .add(&b.mul(&n.derivative().mul(&d).sub(&n.mul(&d.derivative()))));
    let lhs_full = lhs.mul(&b).mul(&d).mul(&d);
    lhs_full.sub(&hd.pow(r).mul(&rhs_num)).is_zero()
}

/// Rescales `L` for the term `Υ(n)·F_n` where `Υ(n+1)/Υ(n) = rho`:
/// `c'_i = c_i · Π_{j=i}^{r−1} rho(n+j)`.
pub fn apply_hypergeometric_factor(l: &Telescoper, rho: &NRat) -> Result<Telescoper> {
    if rho.is_zero() {
        return Err(Error::Domain("rho must be nonzero".into()));
    }
    let r = l.order();
    let mut out = l.coeffs().to_vec();
    let mut acc = NRat::one();
    for i in (0..r).rev() {
        acc = acc.mul(&rho.shift(i as i64));
        out[i] = out[i].mul(&acc);
    }
    Ok(Telescoper::from_coeffs(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{lift, QPoly, QRat, RatFn, XPoly};
    use crate::telescoping::build_term;

    fn qx(v: &[i64]) -> QPoly {
        QPoly::from_ints(v)
    }

    #[test]
    fn documented_checks() {
        let t = build_term(XPoly::one(), QRat::from_poly(qx(&[0, 1])), QRat::one()).unwrap();
        let q = Certificate { q: RatFn::from_poly(XPoly::x()) };
        let l = Telescoper::from_coeffs(vec![NRat::n_plus(1).neg()]);
        assert!(verify_telescoper(&t, &l, &q));
        let bad = Telescoper::from_coeffs(vec![NRat::n().neg()]);
        assert!(!verify_telescoper(&t, &bad, &q));

        let t = build_term(XPoly::one(), QRat::new(qx(&[1]), qx(&[-1, 1])), QRat::zero()).unwrap();
        let q = Certificate { q: RatFn::from_poly(lift(&qx(&[-1, 1])).scale(&NRat::n_plus(-1).neg().inv())) };
        assert!(verify_telescoper(&t, &Telescoper::identity(), &q));
    }

    #[test]
    fn hypergeometric_rescaling() {
        let l = Telescoper::from_coeffs(vec![NRat::n_plus(1).neg()]);
        assert_eq!(apply_hypergeometric_factor(&l, &NRat::one()).unwrap(), l);
        let sq = NRat::n_plus(1).mul(&NRat::n_plus(1));
        assert_eq!(apply_hypergeometric_factor(&l, &NRat::n_plus(1)).unwrap().coeffs(), &[sq.neg()]);
        let id = Telescoper::identity();
        assert_eq!(apply_hypergeometric_factor(&id, &NRat::n()).unwrap(), id);
        assert!(apply_hypergeometric_factor(&l, &NRat::zero()).is_err());
    }
}
