use crate::arith::{Field, NRat, XPoly};
use crate::error::{Error, Result};

/// `max(deg A, deg B − 1)`, with `-1` when both are absent (Φ constant).
pub fn confinement_dim(a: &XPoly, b_deg: usize) -> i64 {
    let da = a.deg().map_or(-1, |d| d as i64);
    da.max(b_deg as i64 - 1)
}

/// Rewrites `P` modulo derivatives: returns `(R, Q)` with
/// `P = R + (QB)' + QA`, `deg R < δ`, `deg Q ≤ deg P − δ`.
///
/// The coefficients of `Q` are solved from the top down, one per degree
/// `i + δ` of `P`. A vanishing pivot `a_δ + (δ+i+1)·b_{δ+1}` means `A/B` has
/// a residue that blocks the reduction, reported as
/// [`Error::InvalidInputForm`].
pub fn confinement(p: &XPoly, a: &XPoly, b: &XPoly) -> Result<(XPoly, XPoly)> {
    let b_deg = b
        .deg()
        .ok_or_else(|| Error::Domain("confinement: B must be nonzero".into()))?;
    let delta = confinement_dim(a, b_deg);
    if delta < 0 {
        // Φ is constant: every polynomial is a derivative.
        let q = antiderivative(p);
        let b0inv = b.coeff(0).inv();
        return Ok((XPoly::zero(), q.scale(&b0inv)));
    }
    let delta = delta as usize;
    let p_deg = match p.deg() {
        Some(d) if d >= delta => d,
        _ => return Ok((p.clone(), XPoly::zero())),
    };
    let d = p_deg - delta;
    let mut q = vec![NRat::zero(); d + 1];
    let a_top = a.coeff(delta);
    let b_top = b.coeff(delta + 1);
    for i in (0..=d).rev() {
        let m = NRat::from_int((delta + i + 1) as i64);
        let c = a_top.add(&b_top.mul(&m));
        if c.is_zero() {
            return Err(Error::InvalidInputForm { index: i });
        }
        let mut acc = p.coeff(delta + i);
        let mut bsum = NRat::zero();
        for j in 1..=(delta + 1) {
            if i + j > d {
                break;
            }
            let qj = &q[i + j];
            if qj.is_zero() {
                continue;
            }
            if j <= delta {
                let aj = a.coeff(delta - j);
                if !aj.is_zero() {
                    acc = acc.sub(&qj.mul(&aj));
                }
            }
            let bj = b.coeff(delta + 1 - j);
            if !bj.is_zero() {
                bsum = bsum.add(&qj.mul(&bj));
            }
        }
        if !bsum.is_zero() {
            acc = acc.sub(&bsum.mul(&m));
        }
        q[i] = acc.div(&c);
    }
    let q = XPoly::new(q);
    let r = p.sub(&q.mul(b).derivative()).sub(&q.mul(a));
    assert!(
        r.deg().is_none_or(|dr| dr < delta),
        "confinement output degree {:?} not below δ = {delta}",
        r.deg()
    );
    Ok((r, q))
}

fn antiderivative(p: &XPoly) -> XPoly {
    let mut v = vec![NRat::zero()];
    for (i, c) in p.coeffs().iter().enumerate() {
        v.push(c.div(&NRat::from_int(i as i64 + 1)));
    }
    XPoly::new(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ZPoly};

    fn xp(cs: Vec<NRat>) -> XPoly {
        XPoly::new(cs)
    }

    fn c(i: i64) -> NRat {
        NRat::from_rat(&int(i))
    }

    fn check_identity(p: &XPoly, a: &XPoly, b: &XPoly, r: &XPoly, q: &XPoly) {
        let rhs = r.add(&q.mul(b).derivative()).add(&q.mul(a));
        assert_eq!(&rhs, p);
    }

    #[test]
    fn gamma_type_examples() {
        let a = xp(vec![NRat::n(), c(1)]); // x + n
        let b = xp(vec![c(0), c(1)]); // x
        let p = xp(vec![c(0), c(1)]);
        let (r, q) = confinement(&p, &a, &b).unwrap();
        assert_eq!(r, XPoly::constant(NRat::n_plus(1).neg()));
        assert_eq!(q, XPoly::one());

        let (r, q) = confinement(&XPoly::one(), &a, &b).unwrap();
        assert_eq!((r, q), (XPoly::one(), XPoly::zero()));

        let p = xp(vec![c(0), c(0), c(1)]);
        let (r, q) = confinement(&p, &a, &b).unwrap();
        let np1np2 = NRat::from_zpoly(ZPoly::from_i64s(&[2, 3, 1]));
        assert_eq!(r, XPoly::constant(np1np2));
        assert_eq!(q, xp(vec![NRat::n_plus(2).neg(), c(1)]));
        check_identity(&p, &a, &b, &r, &q);
    }

    #[test]
    fn integer_residue_is_rejected() {
        let p = xp(vec![c(0), c(0), c(1)]);
        let a = XPoly::constant(c(-2));
        let b = xp(vec![c(0), c(1)]);
        assert_eq!(confinement(&p, &a, &b), Err(Error::InvalidInputForm { index: 1 }));
    }

    #[test]
    fn constant_phi_integrates() {
        let p = xp(vec![c(1), c(2)]);
        let (r, q) = confinement(&p, &XPoly::zero(), &XPoly::one()).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, xp(vec![c(0), c(1), c(1)]));
    }
}
