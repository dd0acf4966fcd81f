//! Creative telescoping for bivariate hypergeometric-hyperexponential terms
//!
//! ```text
//! F_n(x) = P(n, x) · H(x)^n · exp(∫ S/T)
//! ```
//!
//! A telescoper `L = S_n^r − Σ c_i S_n^i` with certificate `Q` satisfies
//! `L(F_n) = (Q·Φ_n)'` where `Φ_n = H^n exp(∫ S/T)`. It is found by
//! confining every shift `F_{n+i}` modulo derivatives into the space of
//! polynomials of degree below `δ = max(deg A, deg B − 1)` (with
//! `A/B = n H'/H + S/T`) and looking for the first linear dependency.
//!
//! Everything is exact over ℚ and ℚ(n).

pub mod arith;
pub mod error;
pub mod inversion;
pub mod reduction;
pub mod telescoping;

pub use error::{Error, Result};
