use crate::arith::{inv_mod, lift, xrat_from_parts, ClearedPoly, Field, NRat, QPoly, XPoly, XRat};
use crate::error::{Error, Result};

fn deg_i(p: &XPoly) -> i64 {
    p.deg().map_or(-1, |d| d as i64)
}

/// Precomputed data for repeated basic reductions against one `(A, B, G, k)`:
/// the multipliers `C_i = A + (i−k−1)·B·G'/G + B'` and their inverses
/// modulo `G`.
#[derive(Clone, Debug)]
pub(crate) struct BasicPlan {
    g: QPoly,
    g_deg: i64,
    k: usize,
    b: ClearedPoly,
    g_pows: Vec<ClearedPoly>,
    steps: Vec<(ClearedPoly, ClearedPoly)>,
    cap_extra: i64,
}

impl BasicPlan {
    pub(crate) fn new(a: &XPoly, b: &QPoly, g: &QPoly, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("basic_reduction: k must be positive".into()));
        }
        let b_over_g = b
            .div_exact(g)
            .ok_or_else(|| Error::PreconditionViolated("G does not divide the denominator B".into()))?;
        let bgg = lift(&b_over_g.mul(&g.derivative())); // B·G'/G
        let dbx = lift(&b.derivative());
        let gx = lift(g);
        let mut steps = Vec::with_capacity(k);
        for i in 1..=k {
            let shift = NRat::from_int(i as i64 - k as i64 - 1);
            let c = a.add(&bgg.scale(&shift)).add(&dbx);
            let c_inv = inv_mod(&c, &gx).map_err(|e| {
                Error::PreconditionViolated(format!("C = A + (i-k-1)BG'/G + B' not invertible mod G ({e})"))
            })?;
            steps.push((ClearedPoly::from_xpoly(&c), ClearedPoly::from_xpoly(&c_inv)));
        }
        let gc = ClearedPoly::from_qpoly(g);
        let mut g_pows = vec![ClearedPoly::one()];
        for _ in 1..k {
            let next = g_pows.last().unwrap().mul(&gc);
            g_pows.push(next);
        }
        Ok(BasicPlan {
            g: g.clone(),
            g_deg: g.deg().unwrap_or(0) as i64,
            k,
            b: ClearedPoly::from_qpoly(b),
            g_pows,
            steps,
            cap_extra: (deg_i(a) - 1).max(b.deg().unwrap_or(0) as i64 - 2),
        })
    }

    /// `(R, N)` with `P = G^k (R + q' + (A/B) q)` and `q = N / G^k`.
    pub(crate) fn run(&self, p: &ClearedPoly) -> (ClearedPoly, ClearedPoly) {
        if p.is_zero() {
            return (ClearedPoly::zero(), ClearedPoly::zero());
        }
        let mut r = p.clone();
        let mut cert = ClearedPoly::zero();
        for (i, (c, c_inv)) in self.steps.iter().enumerate() {
            let q = r.rem_q(&self.g).mul(c_inv).rem_q(&self.g);
            if q.is_zero() {
                r = r.div_exact_q(&self.g);
                continue;
            }
            let num = r.sub(&q.derivative().mul(&self.b)).sub(&q.mul(c));
            r = num.div_exact_q(&self.g);
            cert = cert.add(&q.mul(&self.b).mul(&self.g_pows[i]));
        }
        let cap = (p.degree() - self.k as i64 * self.g_deg).max(self.cap_extra);
        assert!(r.degree() <= cap, "basic reduction degree {} exceeds cap {cap}", r.degree());
        (r, cert)
    }
}

/// Lowers the power of a square-free factor `G` of `B` in the denominator:
/// `P = G^k (R + q' + (A/B) q)` with `q = N / G^k`. Returns `(R, N)`.
pub(crate) fn basic_reduction_parts(
    p: &XPoly,
    a: &XPoly,
    b: &QPoly,
    g: &QPoly,
    k: usize,
) -> Result<(XPoly, XPoly)> {
    let plan = BasicPlan::new(a, b, g, k)?;
    let (r, n) = plan.run(&ClearedPoly::from_xpoly(p));
    Ok((r.to_xpoly(), n.to_xpoly()))
}

/// `P = G^k (R + q' + F q)` for `F = A/B` with `B` free of `n`, `G` a
/// square-free divisor of `B`. Returns `(R, q)`.
pub fn basic_reduction(p: &XPoly, f: &XRat, g: &QPoly, k: usize) -> Result<(XPoly, XRat)> {
    let b = QPoly::new(
        f.den()
            .coeffs()
            .iter()
            .map(|c| {
                c.as_rat().ok_or_else(|| {
                    Error::PreconditionViolated("denominator of F depends on n".into())
                })
            })
            .collect::<Result<Vec<_>>>()?,
    );
    let (r, n) = basic_reduction_parts(p, f.num(), &b, g, k)?;
    Ok((r, xrat_from_parts(&n, &g.pow(k as u32))))
}
