//! Strategies and property bodies shared by the acceptance suite.

#![allow(dead_code)]

use mixedct::arith::xpoly::rdeg_n;
use mixedct::arith::{
    inv_mod, lift, partial_fractions, squarefree_decomp, Field, NRat, QPoly, QRat, RatFn, RdegPair, ShiftN,
    XPoly, XRat, ZPoly,
};
use mixedct::inversion::{fits_lower_order, invert_recurrence, series_reversion};
use mixedct::reduction::bounds::{basic_bound_params, hermite_bound_params};
use mixedct::reduction::{
    basic_reduction, confinement, hermite_reduction, rdeg_bounds, shifted_log_derivative, BoundStep, HermiteContext,
};
use mixedct::telescoping::{
    build_term, mixed_ct, order_bound, ri_rdeg_bound, telescoper_degree_bound, verify_telescoper, HyperTerm,
    MixedCtOptions, MixedCtOutput, Telescoper,
};
use mixedct::Error;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

pub type Check = Result<(), TestCaseError>;

fn coeff() -> impl Strategy<Value = i64> {
    -9i64..=9
}

pub fn qpoly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(coeff(), 0..=max_deg + 1).prop_map(|v| QPoly::from_ints(&v))
}

pub fn nonzero_qpoly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    qpoly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn qrat(max_deg: usize) -> impl Strategy<Value = QRat> {
    (qpoly(max_deg), nonzero_qpoly(max_deg)).prop_map(|(a, b)| QRat::new(a, b))
}

pub fn nonzero_qrat(max_deg: usize) -> impl Strategy<Value = QRat> {
    (nonzero_qpoly(max_deg), nonzero_qpoly(max_deg)).prop_map(|(a, b)| QRat::new(a, b))
}

fn zpoly(max_deg: usize) -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(coeff(), 0..=max_deg + 1).prop_map(|v| ZPoly::from_i64s(&v))
}

fn nrat(max_deg: usize) -> impl Strategy<Value = NRat> {
    (zpoly(max_deg), zpoly(max_deg)).prop_map(|(a, b)| if b.is_zero() { NRat::from_zpoly(a) } else { NRat::new(a, b) })
}

/// Polynomial in `x` with coefficients in `ℤ[n]`.
pub fn xpoly(deg_x: usize, deg_n: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(zpoly(deg_n), 0..=deg_x + 1).prop_map(|v| XPoly::new(v.into_iter().map(NRat::from_zpoly).collect()))
}

pub fn nonzero_xpoly(deg_x: usize, deg_n: usize) -> impl Strategy<Value = XPoly> {
    xpoly(deg_x, deg_n).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn xrat() -> impl Strategy<Value = XRat> {
    (prop::collection::vec(nrat(2), 0..=3), prop::collection::vec(nrat(2), 1..=3)).prop_filter_map(
        "nonzero denominator",
        |(a, b)| {
            let b = XPoly::new(b);
            (!b.is_zero()).then(|| RatFn::new(XPoly::new(a), b))
        },
    )
}

/// `(P, H, S/T)`.
pub fn term_parts(deg: usize) -> impl Strategy<Value = (XPoly, QRat, QRat)> {
    (nonzero_xpoly(deg, 1), nonzero_qrat(deg), qrat(deg))
}

/// Runs `test` on `cases` inputs with a fixed seed; `Err` carries the
/// shrunk counterexample.
pub fn run<S: Strategy>(cases: u32, seed: u64, strategy: S, test: impl Fn(S::Value) -> Check) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let config = Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        max_global_rejects: 20 * cases,
        ..Config::default()
    };
    TestRunner::new(config).run(&strategy, test).map_err(|e| e.to_string())
}

fn grew(out: RdegPair, input: RdegPair, bound: RdegPair) -> Check {
    let d = RdegPair::new(out.num - input.num, out.den - input.den);
    prop_assert!(d.le(bound), "Rdeg grew by {d}, bound {bound}");
    Ok(())
}

fn xr(p: &XPoly) -> XRat {
    RatFn::from_poly(p.clone())
}

// exact-arith laws

pub fn xgcd_bezout((a, b): (QPoly, QPoly)) -> Check {
    prop_assume!(!(a.is_zero() && b.is_zero()));
    let (g, u, v) = a.xgcd(&b).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(u.mul(&a).add(&v.mul(&b)), g.clone());
    prop_assert!(a.rem(&g).is_zero() && b.rem(&g).is_zero());
    Ok(())
}

pub fn squarefree_recomposes(p: QPoly) -> Check {
    prop_assume!(!p.is_zero());
    let p = p.monic();
    let s = squarefree_decomp(&p).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(s.expand(), p);
    for (i, (f, k)) in s.factors.iter().enumerate() {
        prop_assert!(f.gcd(&f.derivative()).is_constant());
        for (g, l) in &s.factors[i + 1..] {
            prop_assert!(k != l && f.gcd(g).is_one());
        }
    }
    Ok(())
}

pub fn partial_fractions_recombine(f: QRat) -> Check {
    let pf = partial_fractions(&f).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(pf.recombine(), f);
    for part in &pf.parts {
        prop_assert!(part.numer.deg().unwrap_or(0) < part.factor.deg().unwrap() * part.mult);
    }
    Ok(())
}

pub fn inv_mod_inverts((a, m): (QPoly, QPoly)) -> Check {
    prop_assume!(m.deg().unwrap_or(0) >= 1);
    match inv_mod(&a, &m) {
        Ok(r) => {
            prop_assert!(a.mul(&r).sub(&QPoly::one()).rem(&m).is_zero());
            prop_assert!(r.deg().unwrap_or(0) < m.deg().unwrap());
        }
        Err(Error::NotInvertible { .. }) => prop_assert!(!a.gcd(&m).is_constant() || a.rem(&m).is_zero()),
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
    }
    Ok(())
}

pub fn shift_involution((e, i): (XRat, i64)) -> Check {
    prop_assert_eq!(e.shift_n(i).shift_n(-i), e.clone());
    let p = e.num().clone();
    prop_assert_eq!(p.shift_n(i).shift_n(-i), p);
    Ok(())
}

pub fn degrees_add((f, g): (QRat, QRat)) -> Check {
    prop_assume!(!f.is_zero() && !g.is_zero());
    prop_assert_eq!(f.mul(&g).degree_at_infinity(), f.degree_at_infinity().plus(g.degree_at_infinity()));
    Ok(())
}

// reduction contracts

pub fn confinement_identity((p, h, st): (XPoly, QRat, QRat)) -> Check {
    let (a, b) = shifted_log_derivative(&h, &st, 0).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let bx = lift(&b);
    let (r, q) = match confinement(&p, &a, &bx) {
        Ok(v) => v,
        Err(Error::InvalidInputForm { .. }) => return Err(TestCaseError::reject("integer residue")),
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
    };
    // P = R + Q·A + (Q·B)'
    let rhs = r.add(&q.mul(&a)).add(&q.mul(&bx).derivative());
    prop_assert_eq!(rhs, p.clone());
    let delta = a.deg().map_or(-1, |d| d as i64).max(b.deg().unwrap() as i64 - 1);
    prop_assert!(r.deg().map_or(-1, |d| d as i64) < delta.max(0));
    let bound = rdeg_bounds(&BoundStep::Confine {
        deg_p: p.deg().map_or(-1, |d| d as i64),
        deg_a: a.deg().map_or(-1, |d| d as i64),
        deg_b: b.deg().unwrap() as i64,
    });
    grew(rdeg_n(&r), rdeg_n(&p), bound)?;
    // projector on its output
    prop_assert_eq!(confinement(&r, &a, &bx).unwrap(), (r.clone(), XPoly::zero()));
    Ok(())
}

pub fn basic_identity((p, h, st): (XPoly, QRat, QRat)) -> Check {
    prop_assume!(!h.den().is_constant());
    let ctx = HermiteContext::new(&h, &st).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let (ak, bk) = ctx.shifted_phi();
    let f = RatFn::from_reduced(ak.clone(), lift(bk));
    let sqf = squarefree_decomp(h.den()).unwrap();
    for (g, k) in &sqf.factors {
        let (r, q) = basic_reduction(&p, &f, g, *k).map_err(|e| TestCaseError::fail(e.to_string()))?;
        // P = G^k (R + q' + F q)
        let gk = xr(&lift(&g.pow(*k as u32)));
        let rhs = gk.mul(&xr(&r).add(&q.derivative()).add(&f.mul(&q)));
        prop_assert_eq!(rhs, xr(&p));
        let bound = rdeg_bounds(&basic_bound_params(&h, &st, *k).unwrap());
        grew(rdeg_n(&r), rdeg_n(&p), bound)?;
    }
    Ok(())
}

pub fn hermite_identity((p, h, st): (XPoly, QRat, QRat)) -> Check {
    let (r, q) = hermite_reduction(&p, &h, &st).map_err(|e| TestCaseError::fail(e.to_string()))?;
    // P = R/H + n Q H'/H + Q S/T + Q'
    let (a, b) = shifted_log_derivative(&h, &st, 0).unwrap();
    let phi = RatFn::new(a, lift(&b));
    let hx = mixedct::arith::lift_rat(&h);
    let rhs = xr(&r).div(&hx).unwrap().add(&q.mul(&phi)).add(&q.derivative());
    prop_assert_eq!(rhs, xr(&p));
    let bound = rdeg_bounds(&hermite_bound_params(&h, &st).unwrap());
    grew(rdeg_n(&r), rdeg_n(&p), bound)?;
    Ok(())
}

// telescoping

fn term_or_reject(p: XPoly, h: QRat, st: QRat) -> Result<HyperTerm, TestCaseError> {
    build_term(p, h, st).map_err(|e| TestCaseError::reject(e.to_string()))
}

fn bump(l: &Telescoper, j: usize) -> Telescoper {
    let mut v = l.cleared().to_vec();
    v[j] = v[j].add(&ZPoly::one());
    Telescoper::from_cleared(v)
}

fn solve((p, h, st): (XPoly, QRat, QRat)) -> Result<(HyperTerm, MixedCtOutput), TestCaseError> {
    let t = term_or_reject(p, h, st)?;
    match mixed_ct(&t, MixedCtOptions::default()) {
        Ok(o) => Ok((t, o)),
        Err(Error::InvalidInputForm { .. }) => Err(TestCaseError::reject("integer residue")),
        Err(e) => Err(TestCaseError::fail(e.to_string())),
    }
}

/// Order bound, trace bounds, and verification of the output and of its
/// perturbations.
pub fn mixed_ct_contract(parts: (XPoly, QRat, QRat)) -> Check {
    let (t, out) = solve(parts)?;
    let l = &out.telescoper;
    let r = l.order();
    prop_assert!(r as i64 <= order_bound(&t).max(0), "order {} above δ = {}", r, order_bound(&t));
    for (i, ri) in out.trace.remainders.iter().enumerate() {
        let b = ri_rdeg_bound(&t, i).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(rdeg_n(ri).le(b), "R_{} has Rdeg {} above {}", i, rdeg_n(ri), b);
    }
    let cert = out.certificate.expect("certificate requested");
    prop_assert!(verify_telescoper(&t, l, &cert));
    // an order-0 operator is normalized to 1 and has nothing to perturb
    if r > 0 {
        for j in 0..=r {
            prop_assert!(!verify_telescoper(&t, &bump(l, j), &cert), "perturbed coefficient {} accepted", j);
        }
    }
    Ok(())
}

fn degree_within(parts: (XPoly, QRat, QRat), slack: impl Fn(&HyperTerm) -> i64) -> Check {
    let shown = format!("P = {}, H = {}, S/T = {}", parts.0, parts.1, parts.2);
    let (t, out) = solve(parts)?;
    let l = &out.telescoper;
    let bound = telescoper_degree_bound(&t, l.order()) + slack(&t);
    prop_assert!(
        l.degree() as i64 <= bound,
        "order {} telescoper of degree {} above {} for {}",
        l.order(),
        l.degree(),
        bound,
        shown
    );
    Ok(())
}

pub fn degree_bound(parts: (XPoly, QRat, QRat)) -> Check {
    degree_within(parts, |_| 0)
}

/// The same bound with the initial certificate allowed degree
/// `deg_x P − δ` rather than one less.
pub fn degree_bound_shifted(parts: (XPoly, QRat, QRat)) -> Check {
    degree_within(parts, |t| {
        let deg_p = t.p().deg().map_or(-1, |d| d as i64);
        i64::from(deg_p >= t.delta())
    })
}

// inversion

/// `f = x·a(x)/b(x)` with `a(0) b(0) ≠ 0`.
pub fn inversion_instance() -> impl Strategy<Value = QRat> {
    (nonzero_qpoly(2), nonzero_qpoly(2)).prop_filter_map("f'(0) ≠ 0", |(a, b)| {
        if a.coeff(0).is_zero() || b.coeff(0).is_zero() {
            return None;
        }
        Some(QRat::new(QPoly::x().mul(&a), b))
    })
}

pub const ORACLE_TERMS: usize = 300;

pub fn minimality_oracle(f: QRat) -> Check {
    let l = invert_recurrence(&f).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let r = l.order();
    prop_assume!(r >= 1);
    let u = series_reversion(&f, ORACLE_TERMS - 1).unwrap();
    // the largest degree for which the order-(r−1) system is overdetermined
    let eqs = u.len() - r;
    let degree = eqs / r - 1;
    prop_assert!(
        !fits_lower_order(&u, r - 1, degree),
        "an order-{} recurrence of degree {} fits {} terms",
        r - 1,
        degree,
        ORACLE_TERMS
    );
    Ok(())
}
