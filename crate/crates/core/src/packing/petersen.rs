use serde::Serialize;

use super::{with_fallback, AbstractGraph, Assembly, Placement};
use crate::error::{Error, Result};
use crate::model::{Chord, ConvexInstance};

/// Parameters of the generalized Petersen graph `P(n,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PetersenSpec {
    n: usize,
    k: usize,
}

impl PetersenSpec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 5 || k == 0 || 2 * k >= n {
            return Err(Error::InvalidParams(format!(
                "P({n},{k}) needs n >= 5 and 1 <= k < n/2"
            )));
        }
        Ok(PetersenSpec { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn a(&self, i: usize) -> usize {
        i % self.n
    }

    pub fn b(&self, i: usize) -> usize {
        self.n + i % self.n
    }

    /// Outer cycle `a_i a_{i+1}`.
    pub fn e1(&self) -> Vec<(usize, usize)> {
        (0..self.n).map(|i| (self.a(i), self.a(i + 1))).collect()
    }

    /// Inner edges `b_i b_{i+k}`.
    pub fn e2(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .map(|i| (self.b(i), self.b(i + self.k)))
            .collect()
    }

    /// Spokes `a_i b_i`.
    pub fn e3(&self) -> Vec<(usize, usize)> {
        (0..self.n).map(|i| (self.a(i), self.b(i))).collect()
    }

    pub fn graph(&self) -> AbstractGraph {
        AbstractGraph::petersen(self)
    }
}

/// Position of the 1-based vertex `v_j` of the `2n`-gon, `v_0` being `v_{2n}`.
fn v(n2: usize, j: usize) -> usize {
    (j + n2 - 1) % n2
}

fn chord_set(pairs: impl IntoIterator<Item = (usize, usize)>) -> Vec<Chord> {
    let mut out: Vec<Chord> = pairs.into_iter().map(|(a, b)| Chord::new(a, b)).collect();
    out.sort_unstable();
    out
}

/// Returns the position map `[a_0.., b_0..]` and the pieces of the triangulation.
fn layout(spec: &PetersenSpec) -> Result<(Vec<usize>, Assembly)> {
    let n = spec.n;
    let n2 = 2 * n;
    let at = |j: usize| v(n2, j);
    let mut pos = vec![0; n2];
    let spokes: Vec<(usize, usize)>;
    if spec.k == 1 {
        let mut c = Vec::with_capacity(n);
        let mut c2 = Vec::with_capacity(n);
        if n % 2 == 0 {
            for i in 1..=n / 2 {
                c.extend([at(i), at(3 * n / 2 - i + 1)]);
                c2.extend([at(3 * n / 2 + i), at(n - i + 1)]);
            }
            spokes = (1..=n / 2)
                .map(|i| (at(3 * n / 2 + i), at(i)))
                .chain((0..n / 2).map(|i| (at(3 * n / 2 - i), at(n - i))))
                .collect();
        } else {
            for i in 1..=(n - 1) / 2 {
                c.extend([at(i), at((3 * n + 1) / 2 - i)]);
                c2.extend([at((3 * n - 1) / 2 + i), at(n - i + 1)]);
            }
            c.push(at((n + 1) / 2));
            c2.push(at(n2));
            spokes = (1..=(n + 1) / 2)
                .map(|i| (at((3 * n + 2 * i - 1) / 2), at(i)))
                .chain((0..=(n - 3) / 2).map(|i| (at((3 * n - 2 * i - 1) / 2), at(n - i))))
                .collect();
        }
        for i in 0..n {
            pos[spec.a(i)] = c[i];
            pos[spec.b(i)] = c2[i];
        }
        let g1: Vec<usize> = (1..=n).map(at).collect();
        let g2: Vec<usize> = (n + 1..=n2).map(at).collect();
        let assembly = Assembly {
            chords: vec![
                Chord::new(at(1), at(n)),
                Chord::new(at(n + 1), at(n2)),
                Chord::new(at(n), at(n2)),
                Chord::new(at(1), at(n2)),
                Chord::new(at(n), at(n + 1)),
            ],
            pieces: vec![g1, g2],
        };
        check_spokes(spec, &pos, &spokes)?;
        Ok((pos, assembly))
    } else {
        for i in 0..n {
            pos[spec.a(i)] = at(2 * i + 2);
            pos[spec.b(i)] = at((2 * i + 5) % n2);
        }
        let stated_e2 = chord_set(
            (1..n2)
                .step_by(2)
                .map(|i| (at(i), at((i + 2 * spec.k) % n2))),
        );
        let placed_e2 = chord_set(spec.e2().into_iter().map(|(x, y)| (pos[x], pos[y])));
        if stated_e2 != placed_e2 {
            return Err(Error::ConstructionFault(
                "inner edges disagree with the stated form".into(),
            ));
        }
        spokes = (1..=n).map(|i| (at(2 * i), at((2 * i + 3) % n2))).collect();
        check_spokes(spec, &pos, &spokes)?;
        let g: Vec<usize> = (4..=n2 - 3).chain([n2, 1, n2 - 1]).map(at).collect();
        let assembly = Assembly {
            chords: vec![
                Chord::new(at(1), at(4)),
                Chord::new(at(1), at(3)),
                Chord::new(at(n2 - 3), at(n2 - 1)),
            ],
            pieces: vec![g],
        };
        Ok((pos, assembly))
    }
}

fn check_spokes(spec: &PetersenSpec, pos: &[usize], spokes: &[(usize, usize)]) -> Result<()> {
    let placed = chord_set(spec.e3().into_iter().map(|(x, y)| (pos[x], pos[y])));
    if chord_set(spokes.iter().copied()) != placed {
        return Err(Error::ConstructionFault(
            "spokes disagree with the stated form".into(),
        ));
    }
    Ok(())
}

/// Places `P(n,k)` on the `2n`-gon so that the complement triangulates.
pub fn pack_petersen(n: usize, k: usize) -> Result<Placement> {
    let spec = PetersenSpec::new(n, k)?;
    let graph = spec.graph();
    let built = layout(&spec).and_then(|(pos, assembly)| {
        let inst = ConvexInstance::new(2 * n, graph.edges().iter().map(|&(x, y)| (pos[x], pos[y])))
            .map_err(|e| Error::ConstructionFault(e.to_string()))?;
        let cert = assembly.resolve(&inst).ok_or_else(|| {
            Error::ConstructionFault("a piece of the construction does not triangulate".into())
        })?;
        Placement::new(graph.clone(), 2 * n, pos, Some(cert))
    });
    with_fallback(&graph, 2 * n, built)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_bounds() {
        assert!(PetersenSpec::new(5, 2).is_ok());
        assert!(PetersenSpec::new(5, 3).is_err());
        assert!(PetersenSpec::new(4, 1).is_err());
        assert!(PetersenSpec::new(6, 0).is_err());
        let s = PetersenSpec::new(7, 3).unwrap();
        assert!(s.graph().degrees().iter().all(|&d| d == 3));
        assert_eq!(s.graph().edges().len(), 21);
    }

    #[test]
    fn petersen_graph_on_ten_vertices() {
        let p = pack_petersen(5, 2).unwrap();
        assert_eq!(p.n(), 10);
        assert_eq!(p.induced().forbidden_count(), 15);
        assert!(!p.is_fallback());
    }

    #[test]
    fn prism_layouts() {
        for n in 5..=12 {
            let p = pack_petersen(n, 1).unwrap();
            assert!(!p.is_fallback(), "n={n}");
        }
    }
}
