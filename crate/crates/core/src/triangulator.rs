//! Exact decision, extraction, counting and enumeration of triangulations of
//! `K_n − F` by interval dynamic programming over consecutive vertex runs.
//!
//! Cell `(i, j)` with `i < j` stands for the sub-polygon `v_i, v_{i+1}, …, v_j`.
//! It is triangulable when some apex `k` strictly between `i` and `j` has
//! both `ik` and `kj` available and both halves triangulable. The whole
//! polygon is cell `(0, n−1)`, closed by the hull edge `v_{n−1}v_0`.

use num_bigint::BigUint;

use crate::model::{Chord, ConvexInstance};
use crate::scalar::CountScalar;

/// `n − 3` pairwise non-crossing diagonals avoiding `F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<Chord>,
}

impl Triangulation {
    fn from_unsorted(n: usize, mut diagonals: Vec<Chord>) -> Self {
        diagonals.sort_unstable();
        Triangulation { n, diagonals }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[Chord] {
        &self.diagonals
    }

    pub fn into_diagonals(self) -> Vec<Chord> {
        self.diagonals
    }

    /// Faces of the subdivision, as sorted vertex triples.
    ///
    /// In a triangulated convex polygon every 3-cycle of hull edges and
    /// diagonals bounds a face, so the faces are recovered as triangles of the
    /// edge graph.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let n = self.n;
        let mut adj = vec![false; n * n];
        let mut mark = |a: usize, b: usize| {
            adj[a * n + b] = true;
            adj[b * n + a] = true;
        };
        for i in 0..n {
            mark(i, (i + 1) % n);
        }
        for d in &self.diagonals {
            mark(d.a(), d.b());
        }
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !adj[a * n + b] {
                    continue;
                }
                for c in b + 1..n {
                    if adj[a * n + c] && adj[b * n + c] {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }
}

/// Reachability table, with optional counts, over the cells `(i, j)`.
#[derive(Debug, Clone)]
pub struct DpTable<T = BigUint> {
    n: usize,
    reach: Vec<bool>,
    count: Option<Vec<T>>,
}

impl<T> DpTable<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reach(&self, i: usize, j: usize) -> bool {
        self.reach[i * self.n + j]
    }

    pub fn count(&self, i: usize, j: usize) -> Option<&T> {
        self.count.as_ref().map(|c| &c[i * self.n + j])
    }

    /// Whole-polygon verdict.
    pub fn triangulable(&self) -> bool {
        self.reach(0, self.n - 1)
    }
}

impl DpTable<()> {
    /// Reachability only. Callers handle a forbidden hull edge themselves.
    pub fn reachability(inst: &ConvexInstance) -> DpTable<()> {
        let n = inst.n();
        let mut reach = vec![false; n * n];
        for i in 0..n - 1 {
            reach[i * n + i + 1] = true;
        }
        for len in 2..n {
            for i in 0..n - len {
                let j = i + len;
                let ok = (i + 1..j).any(|k| {
                    inst.allowed(i, k) && inst.allowed(k, j) && reach[i * n + k] && reach[k * n + j]
                });
                reach[i * n + j] = ok;
            }
        }
        DpTable {
            n,
            reach,
            count: None,
        }
    }
}

impl<T: CountScalar> DpTable<T> {
    /// Reachability plus exact counts; `None` when `T` overflows.
    pub fn with_counts(inst: &ConvexInstance) -> Option<DpTable<T>> {
        let n = inst.n();
        let mut reach = vec![false; n * n];
        let mut count = vec![T::zero(); n * n];
        for i in 0..n - 1 {
            reach[i * n + i + 1] = true;
            count[i * n + i + 1] = T::one();
        }
        for len in 2..n {
            for i in 0..n - len {
                let j = i + len;
                let mut total = T::zero();
                for k in i + 1..j {
                    if !(inst.allowed(i, k) && inst.allowed(k, j)) {
                        continue;
                    }
                    let (l, r) = (&count[i * n + k], &count[k * n + j]);
                    if l.is_zero() || r.is_zero() {
                        continue;
                    }
                    total = total.checked_add(&l.checked_mul(r)?)?;
                }
                reach[i * n + j] = !total.is_zero();
                count[i * n + j] = total;
            }
        }
        Some(DpTable {
            n,
            reach,
            count: Some(count),
        })
    }
}

/// Does `K_n − F` admit a triangulation?
///
/// A forbidden hull edge makes the answer `false` outright.
pub fn decide(inst: &ConvexInstance) -> bool {
    if inst.has_boundary_in_forbidden() {
        return false;
    }
    DpTable::reachability(inst).triangulable()
}

/// A triangulation, choosing the lowest feasible apex in every cell.
pub fn extract(inst: &ConvexInstance) -> Option<Triangulation> {
    if inst.has_boundary_in_forbidden() {
        return None;
    }
    let table = DpTable::reachability(inst);
    if !table.triangulable() {
        return None;
    }
    let n = inst.n();
    let mut diagonals = Vec::with_capacity(n.saturating_sub(3));
    let mut pending = vec![(0, n - 1)];
    while let Some((i, j)) = pending.pop() {
        if j - i < 2 {
            continue;
        }
        let k = (i + 1..j)
            .find(|&k| {
                inst.allowed(i, k) && inst.allowed(k, j) && table.reach(i, k) && table.reach(k, j)
            })
            .expect("reachable cell has a feasible apex");
        for (a, b) in [(i, k), (k, j)] {
            if b - a >= 2 {
                diagonals.push(Chord::new(a, b));
            }
            pending.push((a, b));
        }
    }
    Some(Triangulation::from_unsorted(n, diagonals))
}

/// Exact number of triangulations of `K_n − F`.
pub fn count(inst: &ConvexInstance) -> BigUint {
    count_in::<BigUint>(inst).expect("arbitrary precision never overflows")
}

/// Number of triangulations in a chosen counter type; `None` on overflow.
pub fn count_in<T: CountScalar>(inst: &ConvexInstance) -> Option<T> {
    if inst.has_boundary_in_forbidden() {
        return Some(T::zero());
    }
    let table = DpTable::<T>::with_counts(inst)?;
    table.count(0, inst.n() - 1).cloned()
}

/// Streams every triangulation of `K_n − F` exactly once.
pub fn enumerate_all(inst: &ConvexInstance, limit: Option<usize>) -> TriangulationIter<'_> {
    let n = inst.n();
    let table = DpTable::reachability(inst);
    let mut stack = Vec::new();
    if !inst.has_boundary_in_forbidden() && table.triangulable() {
        stack.push(Partial {
            pending: vec![(0, n - 1)],
            diagonals: Vec::new(),
        });
    }
    TriangulationIter {
        inst,
        table,
        stack,
        remaining: limit,
    }
}

struct Partial {
    pending: Vec<(usize, usize)>,
    diagonals: Vec<Chord>,
}

/// Depth-first walk over apex choices; only feasible branches are expanded.
pub struct TriangulationIter<'a> {
    inst: &'a ConvexInstance,
    table: DpTable<()>,
    stack: Vec<Partial>,
    remaining: Option<usize>,
}

impl Iterator for TriangulationIter<'_> {
    type Item = Triangulation;

    fn next(&mut self) -> Option<Triangulation> {
        if self.remaining == Some(0) {
            return None;
        }
        while let Some(mut partial) = self.stack.pop() {
            let cell = loop {
                match partial.pending.pop() {
                    Some((i, j)) if j - i >= 2 => break Some((i, j)),
                    Some(_) => continue,
                    None => break None,
                }
            };
            let Some((i, j)) = cell else {
                if let Some(r) = self.remaining.as_mut() {
                    *r -= 1;
                }
                return Some(Triangulation::from_unsorted(
                    self.inst.n(),
                    partial.diagonals,
                ));
            };
            for k in (i + 1..j).rev() {
                if !(self.inst.allowed(i, k)
                    && self.inst.allowed(k, j)
                    && self.table.reach(i, k)
                    && self.table.reach(k, j))
                {
                    continue;
                }
                let mut next = Partial {
                    pending: partial.pending.clone(),
                    diagonals: partial.diagonals.clone(),
                };
                for (a, b) in [(i, k), (k, j)] {
                    if b - a >= 2 {
                        next.diagonals.push(Chord::new(a, b));
                        next.pending.push((a, b));
                    }
                }
                self.stack.push(next);
            }
        }
        None
    }
}

/// `t` is a triangulation of `K_n − F`: `n − 3` distinct, valid,
/// non-boundary, pairwise non-crossing chords, none of them forbidden.
pub fn verify_triangulation(inst: &ConvexInstance, t: &[(usize, usize)]) -> bool {
    let n = inst.n();
    if inst.has_boundary_in_forbidden() || t.len() != n.saturating_sub(3) {
        return false;
    }
    let mut chords = Vec::with_capacity(t.len());
    for &(a, b) in t {
        match Chord::try_new(n, a, b) {
            Ok(c) if !c.is_boundary(n) && !inst.is_forbidden_chord(c) => chords.push(c),
            _ => return false,
        }
    }
    chords.sort_unstable();
    if chords.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    for (x, &c1) in chords.iter().enumerate() {
        if chords[x + 1..].iter().any(|&c2| c1.crosses(c2)) {
            return false;
        }
    }
    true
}

/// Chord-typed convenience wrapper over [`verify_triangulation`].
pub fn verify_chords(inst: &ConvexInstance, t: &[Chord]) -> bool {
    let pairs: Vec<(usize, usize)> = t.iter().map(|c| c.endpoints()).collect();
    verify_triangulation(inst, &pairs)
}

/// The two sub-polygons cut off by diagonal `d`, each relabeled from 0.
pub fn split_along(inst: &ConvexInstance, d: Chord) -> (ConvexInstance, ConvexInstance) {
    let n = inst.n();
    let inner: Vec<usize> = (d.a()..=d.b()).collect();
    let outer: Vec<usize> = (0..=d.a()).chain(d.b()..n).collect();
    (
        inst.induced(&inner).expect("increasing run"),
        inst.induced(&outer).expect("increasing run"),
    )
}
