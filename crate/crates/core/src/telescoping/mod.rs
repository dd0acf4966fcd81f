//! The telescoping driver: term construction, bounds, the shift-reduce-
//! confine loop, post-processing and an independent verifier.

mod linalg;
mod minimal;
mod mixed;
mod term;
mod verify;

pub use linalg::{rank_and_solve, solve_exact};
pub use minimal::{ensure_minimal, MinimalityStatus};
pub use mixed::{mixed_ct, Certificate, MixedCtOptions, MixedCtOutput, ReductionTrace, Telescoper};
pub use term::{build_term, order_bound, ri_rdeg_bound, telescoper_degree_bound, HyperTerm};
pub use verify::{apply_hypergeometric_factor, verify_telescoper};
