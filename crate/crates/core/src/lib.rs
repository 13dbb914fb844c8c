//! Triangulations of convex complete graphs with forbidden chords.
//!
//! The crate decides, builds, counts and enumerates triangulations of
//! `K_n − F` for vertices in convex position, recognizes the forbidden
//! configurations that block triangulation when `|F| ≤ n − 1`, packs cycle
//! unions and generalized Petersen graphs so that the complement still
//! triangulates, computes convex skewness, and ships an exhaustive harness
//! that checks the characterizations against the dynamic program.

pub mod configurations;
pub mod error;
pub mod harness;
pub mod model;
pub mod packing;
pub mod scalar;
pub mod skewness;
pub mod triangulator;

pub use error::{Error, Result};
pub use model::{CanonicalKey, Chord, ConvexInstance, DihedralMap};
pub use triangulator::Triangulation;

/// Triangulation counts; exact at any size.
pub type Count = num_bigint::BigUint;

/// Machine-word counts, exact up to `n = 37`.
pub type Count64 = u64;

/// Drawing coordinates.
pub type Coord = f64;

/// Single precision drawing coordinates.
pub type Coord32 = f32;
