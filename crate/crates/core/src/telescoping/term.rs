use crate::arith::xpoly::rdeg_n;
use crate::arith::{QPoly, QRat, RdegPair, XPoly};
use crate::error::{Error, Result};
use crate::reduction::bounds::hermite_bound_params;
use crate::reduction::{confinement_dim, rdeg_bounds, shifted_log_derivative, BoundStep};

/// `F_n = P(n, x) · Φ_n` with `Φ_n'/Φ_n = n H'/H + S/T = A/B`.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperTerm {
    p: XPoly,
    h: QRat,
    st: QRat,
    a: XPoly,
    b: QPoly,
}

pub fn build_term(p: XPoly, h: QRat, st: QRat) -> Result<HyperTerm> {
    if h.is_zero() {
        return Err(Error::Domain("H must be nonzero".into()));
    }
    let (a, b) = shifted_log_derivative(&h, &st, 0)?;
    Ok(HyperTerm { p, h, st, a, b })
}

impl HyperTerm {
    pub fn p(&self) -> &XPoly {
        &self.p
    }
    pub fn h(&self) -> &QRat {
        &self.h
    }
    pub fn st(&self) -> &QRat {
        &self.st
    }
    pub fn a(&self) -> &XPoly {
        &self.a
    }
    pub fn b(&self) -> &QPoly {
        &self.b
    }

    /// Same `Φ`, another polynomial factor.
    pub fn with_p(&self, p: XPoly) -> HyperTerm {
        HyperTerm { p, ..self.clone() }
    }

    pub fn delta(&self) -> i64 {
        confinement_dim(&self.a, self.b.deg().unwrap_or(0))
    }

    fn deg_a(&self) -> i64 {
        self.a.deg().map_or(-1, |d| d as i64)
    }

    fn deg_b(&self) -> i64 {
        self.b.deg().unwrap_or(0) as i64
    }

    fn deg_p(&self) -> i64 {
        self.p.deg().map_or(-1, |d| d as i64)
    }

    /// `deg_n P` on the denominator-cleared form. When `P` has
    /// `n`-denominators their degree is counted too.
    pub fn deg_n_p(&self) -> i64 {
        if self.p.is_zero() {
            return 0;
        }
        let r = rdeg_n(&self.p);
        r.num.max(r.den)
    }

    /// `max(deg num H, deg den H)`.
    pub fn deg_x_h(&self) -> i64 {
        let dn = self.h.num().deg().unwrap_or(0);
        let dd = self.h.den().deg().unwrap_or(0);
        dn.max(dd) as i64
    }
}

pub fn order_bound(t: &HyperTerm) -> i64 {
    t.delta()
}

pub fn telescoper_degree_bound(t: &HyperTerm, r: usize) -> i64 {
    r as i64 * (t.deg_n_p() + t.deg_x_h()) + (t.deg_p() - t.delta()).max(0)
}

/// The `(α, β, γ)` budget of the `i`-th confined remainder.
pub fn ri_rdeg_bound(t: &HyperTerm, i: usize) -> Result<RdegPair> {
    let beta = rdeg_bounds(&hermite_bound_params(&t.h, &t.st)?);
    let d_h = t.h.num().deg().unwrap_or(0) as i64 - t.h.den().deg().unwrap_or(0) as i64;
    let rdeg_p = if t.p.is_zero() { RdegPair::ZERO } else { rdeg_n(&t.p) };
    Ok(rdeg_bounds(&BoundStep::Ri {
        rdeg_p,
        deg_p: t.deg_p(),
        deg_a: t.deg_a(),
        deg_b: t.deg_b(),
        beta,
        d_h,
        i: i as i64,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{lift, Field, NRat};

    fn qx(v: &[i64]) -> QPoly {
        QPoly::from_ints(v)
    }

    pub(crate) fn exp_term() -> HyperTerm {
        build_term(XPoly::one(), QRat::from_poly(qx(&[0, 1])), QRat::one()).unwrap()
    }

    #[test]
    fn documented_terms() {
        let t = exp_term();
        assert_eq!(t.a(), &XPoly::new(vec![NRat::n(), NRat::one()]));
        assert_eq!(t.b(), &qx(&[0, 1]));
        assert_eq!(order_bound(&t), 1);
        assert_eq!(telescoper_degree_bound(&t, 1), 1);
        assert_eq!(ri_rdeg_bound(&t, 0).unwrap(), RdegPair::ZERO);

        let t = build_term(XPoly::one(), QRat::new(qx(&[1]), qx(&[-1, 1])), QRat::zero()).unwrap();
        assert_eq!(t.a(), &XPoly::constant(NRat::n().neg()));
        assert_eq!(t.b(), &qx(&[-1, 1]));
        assert_eq!(order_bound(&t), 0);
        assert_eq!(telescoper_degree_bound(&t, 0), 0);

        let t = build_term(XPoly::one(), QRat::one(), QRat::new(qx(&[2]), qx(&[0, 1]))).unwrap();
        assert_eq!(t.a(), &lift(&qx(&[2])));
        assert_eq!(t.b(), &qx(&[0, 1]));

        assert!(build_term(XPoly::one(), QRat::zero(), QRat::zero()).is_err());
    }
}
