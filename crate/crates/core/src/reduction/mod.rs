//! Rewriting polynomial multiples of Φ modulo derivatives.
//!
//! * [`confinement`]: `PΦ = RΦ + (QBΦ)'` with `deg R < δ`.
//! * [`basic_reduction`]: strips one square-free factor from the
//!   denominator, one power at a time.
//! * [`hermite_reduction`]: `P Φ_n = R Φ_{n−1} + (Q Φ_n)'`.
//!
//! Every routine returns its certificate alongside the reduced polynomial.

mod basic;
pub mod bounds;
mod confinement;
mod hermite;

pub use basic::basic_reduction;
pub use bounds::{rdeg_bounds, BoundStep};
pub use confinement::{confinement, confinement_dim};
pub use hermite::{hermite_reduction, HermiteContext};

use crate::arith::{lift, log_derivative, NRat, QPoly, QRat, XPoly, XRat};
use crate::error::Result;

/// Which rewriting produced a [`ReductionStep`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    Confine,
    Basic,
    Hermite,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionStep {
    pub reduced: XPoly,
    pub certificate: XRat,
    pub kind: StepKind,
}

/// `A/B = (n + m)·H'/H + S/T` in lowest terms, `B ∈ ℚ[x]` monic.
///
/// For symbolic `n` no pole of `H'/H` can cancel against `S/T` (the residue
/// there is `(n+m)·ord + c`), so the lcm of the two denominators is the
/// reduced denominator.
pub fn shifted_log_derivative(h: &QRat, st: &QRat, m: i64) -> Result<(XPoly, QPoly)> {
    let ld = log_derivative(h)?;
    let (u, v) = (ld.num(), ld.den());
    let (s, t) = (st.num(), st.den());
    let g = v.gcd(t);
    let l = v.mul(&t.div_exact(&g).unwrap());
    let nm = XPoly::new(vec![NRat::n_plus(m)]);
    let a = nm
        .mul(&lift(&u.mul(&l.div_exact(v).unwrap())))
        .add(&lift(&s.mul(&l.div_exact(t).unwrap())));
    debug_assert!(l.is_monic());
    Ok((a, l))
}
