//! Recurrences for the Taylor coefficients `u_n` of the compositional
//! inverse of a rational function `f` with a simple zero at the origin.
//!
//! `u_n = (1/2πin) ∮ du / f(u)^n`, so a telescoper for `f^{−n}` annihilates
//! `n·u_n` after integration over a small circle.

mod bench;
mod series;

pub use bench::{bench_family, draw_instance, write_csv, BenchRow};
pub use series::{check_recurrence, fits_lower_order, series_reversion};

use crate::arith::{squarefree_decomp, Field, QPoly, QRat, XPoly, ZPoly};
use crate::error::{Error, Result};
use crate::telescoping::{build_term, mixed_ct, HyperTerm, MixedCtOptions, Telescoper};

pub(crate) fn check_instance(f: &QRat) -> Result<()> {
    let num = f.num();
    if num.is_zero() {
        return Err(Error::NotInvertibleSeries("f is zero".into()));
    }
    if !num.coeff(0).is_zero() {
        return Err(Error::NotInvertibleSeries("f(0) ≠ 0".into()));
    }
    if num.coeff(1).is_zero() {
        return Err(Error::NotInvertibleSeries("f has a zero of order > 1 at the origin".into()));
    }
    Ok(())
}

/// `(P, H, S/T) = (1, 1/f, 0)`.
pub fn inverse_coefficient_term(f: &QRat) -> Result<HyperTerm> {
    check_instance(f)?;
    let h = QRat::one().div(f).expect("f is nonzero");
    build_term(XPoly::one(), h, QRat::zero())
}

fn radical_degree(p: &QPoly) -> usize {
    if p.is_constant() {
        return 0;
    }
    squarefree_decomp(&p.monic()).map(|s| s.radical().deg().unwrap_or(0)).unwrap_or(0)
}

/// `q⋆ + p⋆ − 1` with `⋆` the degree of the square-free part.
pub fn inversion_order_bound(f: &QRat) -> usize {
    (radical_degree(f.num()) + radical_degree(f.den())).saturating_sub(1)
}

/// Recurrence `Σ ĉ_i(n) u_{n+i} = 0` for the coefficients of `f^{(−1)}`.
pub fn invert_recurrence(f: &QRat) -> Result<Telescoper> {
    invert_recurrence_with(f, MixedCtOptions { certificate: false, ..Default::default() })
}

pub fn invert_recurrence_with(f: &QRat, opts: MixedCtOptions) -> Result<Telescoper> {
    let t = inverse_coefficient_term(f)?;
    let out = mixed_ct(&t, opts)?;
    let v: Vec<ZPoly> = out
        .telescoper
        .cleared()
        .iter()
        .enumerate()
        .map(|(i, c)| c.mul(&ZPoly::from_i64s(&[i as i64, 1])))
        .collect();
    Ok(Telescoper::from_cleared(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(num: &[i64], den: &[i64]) -> QRat {
        QRat::new(QPoly::from_ints(num), QPoly::from_ints(den))
    }

    #[test]
    fn terms_and_errors() {
        let t = inverse_coefficient_term(&f(&[0, 1], &[1])).unwrap();
        assert_eq!(t.h(), &f(&[1], &[0, 1]));
        let t = inverse_coefficient_term(&f(&[0, 1, -1], &[1])).unwrap();
        assert_eq!(t.h(), &f(&[1], &[0, 1, -1]));
        assert!(matches!(inverse_coefficient_term(&f(&[0, 0, 1], &[1])), Err(Error::NotInvertibleSeries(_))));
        assert!(matches!(inverse_coefficient_term(&f(&[1, 1], &[1])), Err(Error::NotInvertibleSeries(_))));
    }

    #[test]
    fn order_bounds() {
        assert_eq!(inversion_order_bound(&f(&[0, 1, -1], &[1])), 1);
        assert_eq!(inversion_order_bound(&f(&[0, 1], &[1, -1])), 1);
    }

    #[test]
    fn catalan() {
        let l = invert_recurrence(&f(&[0, 1, -1], &[1])).unwrap();
        assert_eq!(l.order(), 1);
        assert_eq!(l.cleared(), &[ZPoly::from_i64s(&[2, -4]), ZPoly::from_i64s(&[1, 1])]);
    }

    #[test]
    fn alternating() {
        let l = invert_recurrence(&f(&[0, 1], &[1, -1])).unwrap();
        assert_eq!(l.order(), 1);
        let u = series_reversion(&f(&[0, 1], &[1, -1]), 20).unwrap();
        assert!(check_recurrence(&u, &l, 1, 15));
    }
}
