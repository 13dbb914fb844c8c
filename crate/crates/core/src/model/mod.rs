//! Convex instances, chord geometry and dihedral symmetry.

mod chord;
mod dihedral;
mod instance;

pub use chord::{crosses, diagonals, Chord};
pub use dihedral::DihedralMap;
pub use instance::{CanonicalKey, ConvexInstance};
