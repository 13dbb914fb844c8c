//! Placements of abstract graphs on the convex polygon whose complement
//! still triangulates.
//!
//! Every [`Placement`] handed out is checked by the dynamic program at
//! construction, so a returned value is always a valid packing.

mod cycle;
mod petersen;
mod search;
mod two_regular;

pub use cycle::pack_cycle;
pub use petersen::{pack_petersen, PetersenSpec};
pub use search::{search_packing, SEARCH_CEILING};
pub use two_regular::{is_exceptional, pack_two_regular, remark1_layout, EXCEPTIONAL_MULTISETS};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Chord, ConvexInstance};
use crate::triangulator::{self, verify_chords};

/// A simple graph on abstract vertex ids `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbstractGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl AbstractGraph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v || u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidParams(format!("bad edge ({u},{v})")));
            }
            out.push((u.min(v), u.max(v)));
        }
        let mut sorted = out.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParams("repeated edge".into()));
        }
        Ok(AbstractGraph {
            vertex_count,
            edges: out,
        })
    }

    /// `C_p` on ids `0..p` in cyclic order.
    pub fn cycle(p: usize) -> Result<Self> {
        Self::cycle_union(&[p])
    }

    /// Disjoint cycles; cycle `i` takes the next `lengths[i]` ids in cyclic order.
    pub fn cycle_union(lengths: &[usize]) -> Result<Self> {
        if let Some(&l) = lengths.iter().find(|&&l| l < 3) {
            return Err(Error::InvalidParams(format!("cycle length {l} < 3")));
        }
        let mut edges = Vec::new();
        let mut base = 0;
        for &l in lengths {
            edges.extend((0..l).map(|i| (base + i, base + (i + 1) % l)));
            base += l;
        }
        Self::new(base, edges)
    }

    /// `P(n,k)`: `a_i` is id `i`, `b_i` is id `n + i`.
    pub fn petersen(spec: &PetersenSpec) -> Self {
        let edges = spec.e1().into_iter().chain(spec.e2()).chain(spec.e3());
        Self::new(2 * spec.n(), edges).expect("generalized Petersen graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }
}

/// An injective map of an abstract graph onto the polygon vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    n: usize,
    graph: AbstractGraph,
    positions: Vec<usize>,
    induced: ConvexInstance,
    certificate: Option<Vec<Chord>>,
    fallback: bool,
}

impl Placement {
    /// Checks injectivity, hull edges, triangulability and the certificate.
    pub fn new(
        graph: AbstractGraph,
        n: usize,
        positions: Vec<usize>,
        certificate: Option<Vec<Chord>>,
    ) -> Result<Self> {
        if positions.len() != graph.vertex_count() {
            return Err(Error::ConstructionFault(
                "position map has the wrong length".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &p in &positions {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::ConstructionFault(format!(
                    "position {p} reused or out of range"
                )));
            }
        }
        let induced = ConvexInstance::new(
            n,
            graph
                .edges()
                .iter()
                .map(|&(u, v)| (positions[u], positions[v])),
        )
        .map_err(|e| Error::ConstructionFault(e.to_string()))?;
        if induced.has_boundary_in_forbidden() {
            return Err(Error::ConstructionFault("an edge lands on the hull".into()));
        }
        if !triangulator::decide(&induced) {
            return Err(Error::ConstructionFault(
                "complement does not triangulate".into(),
            ));
        }
        if let Some(cert) = &certificate {
            if !verify_chords(&induced, cert) {
                return Err(Error::ConstructionFault(
                    "certificate is not a triangulation".into(),
                ));
            }
        }
        let certificate = certificate.map(|mut c| {
            c.sort_unstable();
            c
        });
        Ok(Placement {
            n,
            graph,
            positions,
            induced,
            certificate,
            fallback: false,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &AbstractGraph {
        &self.graph
    }

    /// Polygon position of each abstract vertex.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn induced(&self) -> &ConvexInstance {
        &self.induced
    }

    pub fn certificate(&self) -> Option<&[Chord]> {
        self.certificate.as_deref()
    }

    /// Set when the direct construction failed and the search supplied
    /// this placement instead.
    pub fn is_fallback(&self) -> bool {
        self.fallback
    }

    /// The certificate if there is one, otherwise a triangulation from the
    /// dynamic program.
    pub fn triangulation(&self) -> Vec<Chord> {
        match &self.certificate {
            Some(c) => c.clone(),
            None => triangulator::extract(&self.induced)
                .expect("placements are triangulable")
                .into_diagonals(),
        }
    }
}

impl Serialize for Placement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc<'a> {
            n: usize,
            positions: &'a [usize],
            forbidden: &'a [Chord],
            certificate: Option<&'a [Chord]>,
            diagonals: Vec<Chord>,
            fallback: bool,
        }
        Doc {
            n: self.n,
            positions: &self.positions,
            forbidden: self.induced.forbidden(),
            certificate: self.certificate(),
            diagonals: self.triangulation(),
            fallback: self.fallback,
        }
        .serialize(s)
    }
}

/// A triangulation described the way the constructions describe it: a few
/// separating chords plus sub-polygons, each triangulated on its own.
pub(crate) struct Assembly {
    pub chords: Vec<Chord>,
    pub pieces: Vec<Vec<usize>>,
}

impl Assembly {
    /// Resolves the pieces with the dynamic program; `None` when a piece
    /// does not triangulate. Hull edges among the separators are dropped.
    pub fn resolve(&self, inst: &ConvexInstance) -> Option<Vec<Chord>> {
        let n = inst.n();
        let mut out: Vec<Chord> = self
            .chords
            .iter()
            .copied()
            .filter(|c| !c.is_boundary(n))
            .collect();
        for piece in &self.pieces {
            let mut verts = piece.clone();
            verts.sort_unstable();
            verts.dedup();
            if verts.len() < 4 {
                continue;
            }
            let sub = inst.induced(&verts).ok()?;
            let t = triangulator::extract(&sub)?;
            out.extend(
                t.diagonals()
                    .iter()
                    .map(|c| Chord::new(verts[c.a()], verts[c.b()])),
            );
        }
        out.sort_unstable();
        out.dedup();
        Some(out)
    }
}

/// Fan of the polygon `verts` from its first vertex, without the closing chord.
pub(crate) fn fan(verts: &[usize]) -> Vec<Chord> {
    (2..verts.len().saturating_sub(1))
        .map(|j| Chord::new(verts[0], verts[j]))
        .collect()
}

/// Passes `built` through, except that a rejected construction is replaced
/// by a searched placement, flagged as a fallback, when `n` is small enough.
pub(crate) fn with_fallback(
    graph: &AbstractGraph,
    n: usize,
    built: Result<Placement>,
) -> Result<Placement> {
    match built {
        Ok(p) => Ok(p),
        Err(Error::ConstructionFault(why)) if n <= SEARCH_CEILING => {
            match search_packing(graph, n, None)? {
                Some(mut p) => {
                    p.fallback = true;
                    Ok(p)
                }
                None => Err(Error::ConstructionFault(why)),
            }
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_union_ids() {
        let g = AbstractGraph::cycle_union(&[3, 4]).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edges().len(), 7);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert!(AbstractGraph::cycle_union(&[2]).is_err());
    }

    #[test]
    fn placement_rejects_hull_edge_and_reuse() {
        let g = AbstractGraph::cycle(3).unwrap();
        assert!(Placement::new(g.clone(), 6, vec![0, 1, 3], None).is_err());
        assert!(Placement::new(g.clone(), 6, vec![0, 0, 3], None).is_err());
        let p = Placement::new(g, 6, vec![0, 2, 4], None).unwrap();
        assert_eq!(p.induced().forbidden_count(), 3);
        assert_eq!(p.triangulation().len(), 3);
    }

    #[test]
    fn fan_shape() {
        assert_eq!(
            fan(&[0, 1, 2, 3, 4]),
            vec![Chord::new(0, 2), Chord::new(0, 3)]
        );
        assert!(fan(&[0, 1, 2]).is_empty());
    }
}
