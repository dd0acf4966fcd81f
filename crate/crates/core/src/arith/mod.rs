//! Exact arithmetic: rationals, ℤ[n] and ℚ(n), dense polynomials and
//! reduced rational functions over any of them.

pub mod cleared;
pub mod decomp;
pub mod field;
pub mod modp;
pub mod nrat;
pub mod poly;
pub mod ratfn;
pub mod xpoly;
pub mod zpoly;

pub use cleared::ClearedPoly;
pub use decomp::{partial_fractions, partial_fractions_with, squarefree_decomp, PartialFractions, PfPart, SqfDecomp};
pub use field::{int, rat, BigRat, Field};
pub use nrat::NRat;
pub use poly::{inv_mod, Degree, Poly, MINUS_INFINITY};
pub use ratfn::{log_derivative, RatFn};
pub use xpoly::{lift, lift_rat, xrat_from_parts, QPoly, QRat, RdegPair, ShiftN, XPoly, XRat};
pub use zpoly::ZPoly;
