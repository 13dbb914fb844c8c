//! Exhaustive and sampled cross-checks of the characterizations against
//! the dynamic program and the placement search.

mod enumerate;
mod verify;

pub use enumerate::{enumerate_forbidden_sets, DiagonalSpace, Masks, ENUMERATION_CEILING};
pub use verify::{
    cycle_multisets, verify_potential, verify_theorem, Mismatch, TheoremId, VerifyOptions,
    VerifyReport, DEFAULT_EXHAUSTIVE_LIMIT, POTENTIAL_LIMIT,
};
