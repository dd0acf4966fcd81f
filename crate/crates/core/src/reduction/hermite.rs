use super::basic::BasicPlan;
use super::shifted_log_derivative;
use crate::arith::{
    partial_fractions_with, squarefree_decomp, xrat_from_parts, ClearedPoly, QPoly, QRat, XPoly,
    XRat,
};
use crate::error::{Error, Result};

fn deg_i(p: &XPoly) -> i64 {
    p.deg().map_or(-1, |d| d as i64)
}

/// Precomputed data for repeated Hermite reductions against one `(H, S/T)`.
#[derive(Clone, Debug)]
pub struct HermiteContext {
    /// `(U_k, plan for g_k^k, g / g_k^k)` for each nonzero partial fraction part.
    parts: Vec<(ClearedPoly, BasicPlan, ClearedPoly)>,
    u_c: ClearedPoly,
    /// `K = S/T + (n−1) H'/H` as `A_K / B_K`.
    a_k: XPoly,
    b_k: QPoly,
    /// Reduced numerator and denominator of `H`.
    h_num: QPoly,
    h_den: QPoly,
    degree_cap_extra: i64,
    d_h: i64,
}

impl HermiteContext {
    pub fn new(h: &QRat, st: &QRat) -> Result<Self> {
        if h.is_zero() {
            return Err(Error::Domain("H must be nonzero".into()));
        }
        let g = h.den().clone();
        let sqf = squarefree_decomp(&g)?;
        let pf = partial_fractions_with(h, &sqf.factors)?;
        let (a_k, b_k) = shifted_log_derivative(h, st, -1)?;
        let parts = pf
            .parts
            .iter()
            .map(|part| {
                let gk = part.factor.pow(part.mult as u32);
                Ok((
                    ClearedPoly::from_qpoly(&part.numer),
                    BasicPlan::new(&a_k, &b_k, &part.factor, part.mult)?,
                    ClearedPoly::from_qpoly(&g.div_exact(&gk).unwrap()),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let extra = (deg_i(&a_k) - 1).max(b_k.deg().unwrap_or(0) as i64 - 2);
        let d_h = h.num().deg().unwrap() as i64 - g.deg().unwrap() as i64;
        Ok(HermiteContext {
            u_c: ClearedPoly::from_qpoly(&pf.poly),
            parts,
            a_k,
            b_k,
            h_num: h.num().clone(),
            h_den: g,
            degree_cap_extra: extra,
            d_h,
        })
    }

    /// Denominator `g` of `H`.
    pub fn h_den(&self) -> &QPoly {
        &self.h_den
    }

    pub fn h_num(&self) -> &QPoly {
        &self.h_num
    }

    /// `(A_K, B_K)` with `A_K/B_K = S/T + (n−1)H'/H`.
    pub fn shifted_phi(&self) -> (&XPoly, &QPoly) {
        (&self.a_k, &self.b_k)
    }

    /// Returns `(R, N)` with `P = R/H + (Q Φ_n)'/Φ_n` where `Q·H = N/g`.
    pub fn reduce(&self, p: &XPoly) -> Result<(XPoly, XPoly)> {
        let (r, n) = self.reduce_cleared(&ClearedPoly::from_xpoly(p));
        let r = r.to_xpoly();
        if !p.is_zero() {
            let dp = deg_i(p);
            let cap = (dp + self.d_h).max(dp - 1).max(self.degree_cap_extra);
            assert!(deg_i(&r) <= cap, "Hermite reduction degree {} exceeds cap {cap}", deg_i(&r));
        }
        Ok((r, n.to_xpoly()))
    }

    /// [`reduce`](Self::reduce) on cleared forms.
    pub fn reduce_cleared(&self, p: &ClearedPoly) -> (ClearedPoly, ClearedPoly) {
        let mut r = p.mul(&self.u_c);
        let mut n = ClearedPoly::zero();
        for (uk, plan, cof) in &self.parts {
            let (rk, nk) = plan.run(&p.mul(uk));
            r = r.add(&rk);
            n = n.add(&nk.mul(cof));
        }
        (r.normalized(), n.normalized())
    }
}

/// `P = R/H + n Q H'/H + Q S/T + Q'`. Returns `(R, Q)`.
pub fn hermite_reduction(p: &XPoly, h: &QRat, st: &QRat) -> Result<(XPoly, XRat)> {
    let ctx = HermiteContext::new(h, st)?;
    let (r, n) = ctx.reduce(p)?;
    Ok((r, xrat_from_parts(&n, h.num())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{lift, Field, NRat, RatFn};

    fn qx(v: &[i64]) -> QPoly {
        QPoly::from_ints(v)
    }

    #[test]
    fn polynomial_h_needs_no_reduction() {
        let p = XPoly::new(vec![NRat::n(), NRat::one()]);
        let (r, q) = hermite_reduction(&p, &QRat::from_poly(qx(&[0, 1])), &QRat::one()).unwrap();
        assert_eq!(r, p.mul(&XPoly::x()));
        assert!(q.is_zero());
    }

    #[test]
    fn inverse_linear_h() {
        let h = QRat::new(qx(&[1]), qx(&[-1, 1]));
        let (r, _) = hermite_reduction(&XPoly::one(), &h, &QRat::zero()).unwrap();
        assert!(r.is_zero());
        let (r, _) = hermite_reduction(&XPoly::x(), &h, &QRat::zero()).unwrap();
        assert_eq!(r, XPoly::one());
    }

    #[test]
    fn identity_holds_with_multiplicities() {
        // H = (x+2)/((x-1)^2 (x^2+1)), S/T = 1/x^2 + 3
        let h = QRat::new(qx(&[2, 1]), qx(&[-1, 1]).pow(2).mul(&qx(&[1, 0, 1])));
        let st = QRat::new(qx(&[1, 0, 3]), qx(&[0, 0, 1]));
        let p = XPoly::new(vec![NRat::n(), NRat::from_int(2), NRat::n_plus(3)]);
        let (r, q) = hermite_reduction(&p, &h, &st).unwrap();
        let hx = crate::arith::lift_rat(&h);
        let (a, b) = shifted_log_derivative(&h, &st, 0).unwrap();
        let phi = RatFn::new(a, lift(&b));
        let rhs = RatFn::from_poly(r).div(&hx).unwrap().add(&q.mul(&phi)).add(&q.derivative());
        assert_eq!(rhs, RatFn::from_poly(p));
    }
}
