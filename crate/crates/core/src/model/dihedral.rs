use serde::{Deserialize, Serialize};

use super::chord::Chord;

/// Rotation or reflection of the `n`-gon.
///
/// Acts on vertices as `i ↦ (rotation + i) mod n`, or `i ↦ (rotation − i) mod n`
/// when `reflected`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DihedralMap {
    pub n: usize,
    pub rotation: usize,
    pub reflected: bool,
}

impl DihedralMap {
    pub fn new(n: usize, rotation: usize, reflected: bool) -> Self {
        DihedralMap {
            n,
            rotation: rotation % n,
            reflected,
        }
    }

    pub fn identity(n: usize) -> Self {
        DihedralMap::new(n, 0, false)
    }

    /// All `2n` symmetries, rotations first.
    pub fn all(n: usize) -> impl Iterator<Item = DihedralMap> + Clone {
        (0..2 * n).map(move |k| DihedralMap::new(n, k % n, k >= n))
    }

    pub fn is_identity(&self) -> bool {
        self.rotation == 0 && !self.reflected
    }

    pub fn apply(&self, i: usize) -> usize {
        let i = i % self.n;
        if self.reflected {
            (self.rotation + self.n - i) % self.n
        } else {
            (self.rotation + i) % self.n
        }
    }

    pub fn apply_chord(&self, c: Chord) -> Chord {
        Chord::new(self.apply(c.a()), self.apply(c.b()))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &DihedralMap) -> DihedralMap {
        assert_eq!(self.n, other.n, "maps act on different polygons");
        let n = self.n;
        let rotation = self.apply(other.rotation);
        DihedralMap::new(n, rotation, self.reflected != other.reflected)
    }

    pub fn inverse(&self) -> DihedralMap {
        if self.reflected {
            *self
        } else {
            DihedralMap::new(self.n, self.n - self.rotation, false)
        }
    }
}
