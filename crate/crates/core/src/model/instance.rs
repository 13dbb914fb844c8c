use std::fmt;

use serde::{Deserialize, Serialize};

use super::chord::Chord;
use super::dihedral::DihedralMap;
use crate::error::{Error, Result};

/// `n` vertices in convex position together with a forbidden chord set `F`.
///
/// The forbidden set is kept both as a sorted list and as an `n × n`
/// membership table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConvexInstance {
    n: usize,
    forbidden: Vec<Chord>,
    member: Vec<bool>,
    boundary_in_forbidden: bool,
}

/// Lexicographically least sorted chord list over all dihedral images of `F`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalKey(pub Vec<Chord>);

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}-{}", c.a(), c.b())?;
        }
        write!(f, "]")
    }
}

impl ConvexInstance {
    /// Builds an instance from raw vertex pairs.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInstance(format!(
                "a convex polygon needs at least 3 vertices, got {n}"
            )));
        }
        let mut chords = Vec::new();
        for (a, b) in pairs {
            chords.push(Chord::try_new(n, a, b)?);
        }
        Self::from_chords(n, chords)
    }

    pub fn from_chords(n: usize, chords: impl IntoIterator<Item = Chord>) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInstance(format!(
                "a convex polygon needs at least 3 vertices, got {n}"
            )));
        }
        let mut member = vec![false; n * n];
        let mut forbidden = Vec::new();
        for c in chords {
            if !c.is_valid_for(n) {
                return Err(Error::InvalidChord {
                    n,
                    a: c.a(),
                    b: c.b(),
                });
            }
            let idx = c.a() * n + c.b();
            if member[idx] {
                return Err(Error::DuplicateChord { a: c.a(), b: c.b() });
            }
            member[idx] = true;
            member[c.b() * n + c.a()] = true;
            forbidden.push(c);
        }
        forbidden.sort_unstable();
        let boundary_in_forbidden = forbidden.iter().any(|c| c.is_boundary(n));
        Ok(ConvexInstance {
            n,
            forbidden,
            member,
            boundary_in_forbidden,
        })
    }

    /// `K_n` with nothing removed.
    pub fn complete(n: usize) -> Result<Self> {
        Self::from_chords(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn forbidden(&self) -> &[Chord] {
        &self.forbidden
    }

    pub fn forbidden_count(&self) -> usize {
        self.forbidden.len()
    }

    pub fn is_forbidden(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.member[a * self.n + b]
    }

    pub fn is_forbidden_chord(&self, c: Chord) -> bool {
        self.is_forbidden(c.a(), c.b())
    }

    /// The chord `ab` is present in `K_n − F`.
    pub fn allowed(&self, a: usize, b: usize) -> bool {
        !self.member[a * self.n + b]
    }

    pub fn has_boundary_in_forbidden(&self) -> bool {
        self.boundary_in_forbidden
    }

    /// Number of edges of `K_n − F`.
    pub fn edge_count(&self) -> usize {
        self.n * (self.n - 1) / 2 - self.forbidden.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.is_forbidden(v, u)).count()
    }

    /// Degrees of every vertex in the forbidden graph `F`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for c in &self.forbidden {
            d[c.a()] += 1;
            d[c.b()] += 1;
        }
        d
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.is_forbidden(v, u)).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.degrees().contains(&0)
    }

    /// The ear chord `v_{i−1} v_{i+1}`.
    pub fn ear_chord(&self, i: usize) -> Chord {
        let n = self.n;
        Chord::new((i + n - 1) % n, (i + 1) % n)
    }

    pub fn ear_is_open(&self, i: usize) -> bool {
        !self.is_forbidden_chord(self.ear_chord(i))
    }

    /// Every `i` whose ear chord `v_{i−1} v_{i+1}` is not forbidden.
    pub fn ear_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.ear_is_open(i)).collect()
    }

    pub fn apply_map(&self, m: &DihedralMap) -> ConvexInstance {
        assert_eq!(m.n, self.n, "map and instance disagree on the polygon size");
        Self::from_chords(self.n, self.forbidden.iter().map(|&c| m.apply_chord(c)))
            .expect("dihedral image of a valid instance is valid")
    }

    /// Sorted forbidden list of the image under `m`, without building a full instance.
    pub fn image_chords(&self, m: &DihedralMap) -> Vec<Chord> {
        let mut v: Vec<Chord> = self.forbidden.iter().map(|&c| m.apply_chord(c)).collect();
        v.sort_unstable();
        v
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        self.canonical_form().0
    }

    /// Canonical key together with a map that carries `F` onto it.
    pub fn canonical_form(&self) -> (CanonicalKey, DihedralMap) {
        let mut best: Option<(Vec<Chord>, DihedralMap)> = None;
        for m in DihedralMap::all(self.n) {
            let img = self.image_chords(&m);
            if best.as_ref().is_none_or(|(b, _)| img < *b) {
                best = Some((img, m));
            }
        }
        let (key, m) = best.expect("at least one dihedral map");
        (CanonicalKey(key), m)
    }

    pub fn with_chord(&self, c: Chord) -> Result<ConvexInstance> {
        Self::from_chords(self.n, self.forbidden.iter().copied().chain(Some(c)))
    }

    pub fn without_chord(&self, c: Chord) -> ConvexInstance {
        Self::from_chords(self.n, self.forbidden.iter().copied().filter(|&x| x != c))
            .expect("subset of a valid instance is valid")
    }

    /// `K_n − v`: drops `v` with its incident chords and relabels the rest
    /// consecutively, so the former ear chord at `v` becomes a hull edge.
    pub fn delete_vertex(&self, v: usize) -> Result<ConvexInstance> {
        if v >= self.n {
            return Err(Error::InvalidParams(format!("vertex {v} out of range")));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Sub-polygon on the given vertices, which must be strictly increasing.
    ///
    /// Vertex `vertices[i]` becomes label `i`; forbidden chords between kept
    /// vertices are carried over.
    pub fn induced(&self, vertices: &[usize]) -> Result<ConvexInstance> {
        if vertices.windows(2).any(|w| w[0] >= w[1])
            || vertices.last().is_some_and(|&l| l >= self.n)
        {
            return Err(Error::InvalidParams(
                "induced vertices must be strictly increasing and in range".into(),
            ));
        }
        let mut label = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            label[v] = i;
        }
        let chords = self
            .forbidden
            .iter()
            .filter(|c| label[c.a()] != usize::MAX && label[c.b()] != usize::MAX)
            .map(|c| Chord::new(label[c.a()], label[c.b()]));
        Self::from_chords(vertices.len(), chords)
    }
}

impl fmt::Debug for ConvexInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConvexInstance")
            .field("n", &self.n)
            .field("forbidden", &self.forbidden)
            .finish()
    }
}

impl fmt::Display for ConvexInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K{} - {{", self.n)?;
        for (i, c) in self.forbidden.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}
