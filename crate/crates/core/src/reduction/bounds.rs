//! Budgets on the growth of `n`-degrees through each rewriting step.
//!
//! Callers compare `Rdeg_n(output) − Rdeg_n(input)` (or the absolute
//! `Rdeg_n` of a confined remainder) against these componentwise.

use crate::arith::{squarefree_decomp, QPoly, QRat, RdegPair};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq)]
pub enum BoundStep {
    /// Confinement of a polynomial of x-degree `deg_p` against `A/B`.
    Confine { deg_p: i64, deg_a: i64, deg_b: i64 },
    /// `k` basic reduction steps against a square-free `G`, split by the
    /// G-adic behaviour of its irreducible factors: some have `ν > 1`,
    /// some have `ν = 1` and do not divide `T`, and a part of degree
    /// `simple_in_t_deg` has `ν = 1` and divides `T`.
    Basic { k: usize, nu_gt1: bool, simple_coprime_t: bool, simple_in_t_deg: usize },
    /// One Hermite reduction, parametrized by the `g = e·f·h` split of the
    /// denominator of `H` against `T`.
    Hermite { e_max: usize, h_sum: usize, deg_f: usize },
    /// Absolute bound on the `i`-th confined remainder of the telescoping
    /// loop.
    Ri { rdeg_p: RdegPair, deg_p: i64, deg_a: i64, deg_b: i64, beta: RdegPair, d_h: i64, i: i64 },
}

fn delta(deg_a: i64, deg_b: i64) -> i64 {
    deg_a.max(deg_b - 1)
}

pub fn rdeg_bounds(step: &BoundStep) -> RdegPair {
    match *step {
        BoundStep::Confine { deg_p, deg_a, deg_b } => {
            if deg_p < delta(deg_a, deg_b) {
                return RdegPair::ZERO;
            }
            if deg_b <= deg_a + 1 {
                let s = (deg_p - deg_a + 1).max(0);
                RdegPair::new(s, s)
            } else {
                let s = (deg_p - deg_b + 1).div_euclid(deg_b - deg_a - 1) + 1;
                RdegPair::new(s.max(0), 0)
            }
        }
        BoundStep::Basic { k, nu_gt1, simple_coprime_t, simple_in_t_deg } => {
            let k = k as i64;
            if !nu_gt1 && !simple_coprime_t && simple_in_t_deg == 0 {
                return RdegPair::ZERO;
            }
            // the inverse mod G is a CRT sum over the classes; then times C
            let den = i64::from(simple_coprime_t) + simple_in_t_deg as i64;
            let step = RdegPair::new(i64::from(nu_gt1) + den, den);
            step.times(k)
        }
        BoundStep::Hermite { e_max, h_sum, deg_f } => {
            let den = (h_sum + deg_f) as i64;
            RdegPair::new(e_max as i64 + den, den)
        }
        BoundStep::Ri { rdeg_p, deg_p, deg_a, deg_b, beta, d_h, i } => {
            let dlt = delta(deg_a, deg_b);
            let alpha = if dlt == deg_a {
                let s = (deg_p - dlt + 1).max(0);
                RdegPair::new(s, s)
            } else {
                let s = ((deg_p - dlt).div_euclid(dlt - deg_a) + 1).max(0);
                RdegPair::new(s, 0)
            };
            let gamma = if d_h >= 0 && dlt == deg_a {
                RdegPair::new(d_h + 1, d_h + 1)
            } else if d_h >= 0 && dlt == deg_b - 1 {
                RdegPair::new(d_h.div_euclid(dlt - deg_a) + 1, 0)
            } else {
                RdegPair::ZERO
            };
            rdeg_p.plus(alpha).plus(beta.plus(gamma).times(i))
        }
    }
}

/// Per square-free factor `g_k` of `den(H)`: the parts `(e_k, f_k, h_k)`
/// whose irreducible factors divide `T` at least twice, exactly once, or
/// not at all.
pub fn efh_split(h: &QRat, st: &QRat) -> Result<Vec<(usize, QPoly, QPoly, QPoly)>> {
    let t = st.den();
    let t2 = t.gcd(&t.derivative());
    let sqf = squarefree_decomp(h.den())?;
    Ok(sqf
        .factors
        .iter()
        .map(|(gk, k)| {
            let e = gk.gcd(&t2);
            let rest = gk.div_exact(&e).unwrap();
            let f = rest.gcd(t);
            let hh = rest.div_exact(&f).unwrap();
            (*k, e, f, hh)
        })
        .collect())
}

/// The Hermite step parameters for `(H, S/T)`.
pub fn hermite_bound_params(h: &QRat, st: &QRat) -> Result<BoundStep> {
    let mut e_max = 0;
    let mut h_sum = 0;
    let mut deg_f = 0;
    for (k, e, f, hh) in efh_split(h, st)? {
        if !e.is_constant() {
            e_max = e_max.max(k);
        }
        if !hh.is_constant() {
            h_sum += k;
        }
        deg_f += k * f.deg().unwrap_or(0);
    }
    Ok(BoundStep::Hermite { e_max, h_sum, deg_f })
}

/// The basic-reduction parameters for the factor of multiplicity `k`.
pub fn basic_bound_params(h: &QRat, st: &QRat, k: usize) -> Result<BoundStep> {
    let split = efh_split(h, st)?;
    let (e, f, hh) = split
        .into_iter()
        .find(|(m, ..)| *m == k)
        .map(|(_, e, f, hh)| (e, f, hh))
        .unwrap_or((QPoly::one(), QPoly::one(), QPoly::one()));
    Ok(BoundStep::Basic {
        k,
        nu_gt1: !e.is_constant(),
        simple_coprime_t: !hh.is_constant(),
        simple_in_t_deg: f.deg().unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_values() {
        assert_eq!(
            rdeg_bounds(&BoundStep::Confine { deg_p: 7, deg_a: 3, deg_b: 4 }),
            RdegPair::new(5, 5)
        );
        assert_eq!(
            rdeg_bounds(&BoundStep::Basic { k: 3, nu_gt1: true, simple_coprime_t: false, simple_in_t_deg: 0 }),
            RdegPair::new(3, 0)
        );
        assert_eq!(
            rdeg_bounds(&BoundStep::Basic { k: 2, nu_gt1: false, simple_coprime_t: true, simple_in_t_deg: 0 }),
            RdegPair::new(2, 2)
        );
        assert_eq!(
            rdeg_bounds(&BoundStep::Basic { k: 2, nu_gt1: false, simple_coprime_t: false, simple_in_t_deg: 3 }),
            RdegPair::new(6, 6)
        );
        assert_eq!(
            rdeg_bounds(&BoundStep::Basic { k: 1, nu_gt1: false, simple_coprime_t: true, simple_in_t_deg: 1 }),
            RdegPair::new(2, 2)
        );
        assert_eq!(
            rdeg_bounds(&BoundStep::Basic { k: 2, nu_gt1: true, simple_coprime_t: true, simple_in_t_deg: 0 }),
            RdegPair::new(4, 2)
        );
        assert_eq!(rdeg_bounds(&BoundStep::Hermite { e_max: 0, h_sum: 0, deg_f: 0 }), RdegPair::ZERO);
    }

    #[test]
    fn hermite_params_for_simple_pole() {
        let h = QRat::new(QPoly::from_ints(&[1]), QPoly::from_ints(&[-1, 1]));
        let p = hermite_bound_params(&h, &QRat::zero()).unwrap();
        assert_eq!(p, BoundStep::Hermite { e_max: 0, h_sum: 1, deg_f: 0 });
        assert_eq!(rdeg_bounds(&p), RdegPair::new(1, 1));
    }
}
