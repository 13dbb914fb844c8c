use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unordered pair of polygon vertices, stored with `a < b`.
///
/// A chord does not know the polygon size; predicates that depend on the
/// circular structure take `n` explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Chord {
    a: usize,
    b: usize,
}

impl Chord {
    /// Builds a normalized chord.
    ///
    /// Panics when `a == b`; use [`Chord::try_new`] for untrusted input.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "a chord needs two distinct endpoints");
        if a < b {
            Chord { a, b }
        } else {
            Chord { a: b, b: a }
        }
    }

    /// Builds a chord checked against a polygon of size `n`.
    pub fn try_new(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == b || a >= n || b >= n {
            return Err(Error::InvalidChord { n, a, b });
        }
        Ok(Chord::new(a, b))
    }

    pub fn a(self) -> usize {
        self.a
    }

    pub fn b(self) -> usize {
        self.b
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn is_valid_for(self, n: usize) -> bool {
        self.b < n
    }

    /// `min(b − a, n − (b − a))`.
    pub fn circular_length(self, n: usize) -> usize {
        let d = self.b - self.a;
        d.min(n - d)
    }

    /// Hull edge of the polygon.
    pub fn is_boundary(self, n: usize) -> bool {
        self.circular_length(n) == 1
    }

    pub fn contains(self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    /// The endpoint opposite to `v`, if `v` is an endpoint.
    pub fn other(self, v: usize) -> Option<usize> {
        if self.a == v {
            Some(self.b)
        } else if self.b == v {
            Some(self.a)
        } else {
            None
        }
    }

    pub fn shares_endpoint(self, other: Chord) -> bool {
        self.contains(other.a) || self.contains(other.b)
    }

    /// Crossing test for chords of the same convex polygon.
    ///
    /// Exactly one endpoint of `other` must lie strictly inside the arc
    /// `a → b`. Chords sharing an endpoint never cross.
    pub fn crosses(self, other: Chord) -> bool {
        if self.shares_endpoint(other) {
            return false;
        }
        let inside = |v: usize| self.a < v && v < self.b;
        inside(other.a) != inside(other.b)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}v{}", self.a, self.b)
    }
}

impl From<Chord> for [usize; 2] {
    fn from(c: Chord) -> Self {
        [c.a, c.b]
    }
}

impl TryFrom<[usize; 2]> for Chord {
    type Error = Error;

    fn try_from(pair: [usize; 2]) -> Result<Self> {
        if pair[0] == pair[1] {
            return Err(Error::InvalidChord {
                n: 0,
                a: pair[0],
                b: pair[1],
            });
        }
        Ok(Chord::new(pair[0], pair[1]))
    }
}

/// Checked crossing predicate for two chords of an `n`-gon.
pub fn crosses(n: usize, c1: Chord, c2: Chord) -> Result<bool> {
    for c in [c1, c2] {
        if !c.is_valid_for(n) {
            return Err(Error::InvalidChord { n, a: c.a, b: c.b });
        }
    }
    Ok(c1.crosses(c2))
}

/// Every chord of the `n`-gon that is not a hull edge, in lexicographic order.
pub fn diagonals(n: usize) -> Vec<Chord> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(3) / 2);
    for a in 0..n {
        for b in a + 1..n {
            let c = Chord::new(a, b);
            if !c.is_boundary(n) {
                out.push(c);
            }
        }
    }
    out
}
