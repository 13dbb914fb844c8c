//! The non-triangulable configurations on `n − 1` forbidden chords.
//!
//! Call vertex `v_i` *open* when its ear chord `v_{i−1}v_{i+1}` is not
//! forbidden. The configuration requires every open vertex to have degree at
//! most 2 in `F`, and every open vertex of degree 2 to leave the `n − 2`
//! configuration behind when it is deleted. `J_{n,1}` and `J_{n,2}` collect
//! the open vertices of degree 1 and 2.

use serde::Serialize;

use super::fstar::detect_fstar;
use crate::error::{Error, Result};
use crate::model::{Chord, ConvexInstance, DihedralMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum JStarKind {
    /// `J_{n,2}` is empty and dropping `removed` leaves the `n − 2` configuration.
    Type1 { removed: Chord },
    /// `J_{n,2}` is non-empty and the pendant crossing condition holds.
    Type2,
}

/// Witness for a blocked `n − 1` configuration.
///
/// `j1` and `j2` use the instance's own labels. For Type-1, `map` brings
/// `F − removed` into standard form; for Type-2 it is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JStarWitness {
    pub map: DihedralMap,
    pub j1: Vec<usize>,
    pub j2: Vec<usize>,
    pub kind: JStarKind,
}

impl JStarWitness {
    pub fn validate(&self, inst: &ConvexInstance) -> bool {
        detect_jstar(inst).as_ref() == Some(self)
    }
}

struct OpenVertices {
    j1: Vec<usize>,
    j2: Vec<usize>,
    /// Some open vertex has degree ≥ 3, or has degree 2 without leaving the
    /// smaller configuration behind.
    violated: bool,
}

fn applicable(inst: &ConvexInstance) -> bool {
    let n = inst.n();
    inst.forbidden_count() + 1 == n
        && !inst.has_boundary_in_forbidden()
        && !inst.has_isolated_vertex()
}

fn open_vertices(inst: &ConvexInstance) -> OpenVertices {
    let deg = inst.degrees();
    let mut out = OpenVertices {
        j1: Vec::new(),
        j2: Vec::new(),
        violated: false,
    };
    for i in inst.ear_vertices() {
        match deg[i] {
            1 => out.j1.push(i),
            2 => {
                let rest = inst.delete_vertex(i).expect("vertex in range");
                if detect_fstar(&rest).is_some() {
                    out.j2.push(i);
                } else {
                    out.violated = true;
                }
            }
            _ => out.violated = true,
        }
    }
    out
}

/// `(J_{n,1}, J_{n,2})` under the given labeling.
pub fn jstar_vertex_sets(inst: &ConvexInstance) -> Result<(Vec<usize>, Vec<usize>)> {
    if !applicable(inst) {
        return Err(Error::NotApplicable(
            "vertex sets need n − 1 forbidden diagonals and no isolated vertex".into(),
        ));
    }
    let open = open_vertices(inst);
    Ok((open.j1, open.j2))
}

/// Every pendant chord crossing both chords at a `J_{n,2}` vertex hangs off a
/// vertex next to one of that vertex's neighbours.
fn crossing_condition(inst: &ConvexInstance, j2: &[usize]) -> bool {
    let n = inst.n();
    let deg = inst.degrees();
    let pendant_chords: Vec<(usize, usize)> = inst
        .forbidden()
        .iter()
        .flat_map(|c| {
            let (a, b) = c.endpoints();
            [(a, b), (b, a)]
        })
        .filter(|&(t, _)| deg[t] == 1)
        .collect();
    j2.iter().all(|&i| {
        let nb = inst.neighbors(i);
        let (e1, e2) = (Chord::new(i, nb[0]), Chord::new(i, nb[1]));
        pendant_chords.iter().all(|&(t, s)| {
            let c = Chord::new(t, s);
            if !(c.crosses(e1) && c.crosses(e2)) {
                return true;
            }
            let adjacent = |x: usize| x != s && Chord::new(x, s).is_boundary(n);
            adjacent(nb[0]) || adjacent(nb[1])
        })
    })
}

pub fn detect_jstar(inst: &ConvexInstance) -> Option<JStarWitness> {
    let n = inst.n();
    if n < 5 || !applicable(inst) {
        return None;
    }
    let open = open_vertices(inst);
    if open.violated {
        return None;
    }
    if open.j2.is_empty() {
        inst.forbidden().iter().find_map(|&e| {
            detect_fstar(&inst.without_chord(e)).map(|w| JStarWitness {
                map: w.map,
                j1: open.j1.clone(),
                j2: Vec::new(),
                kind: JStarKind::Type1 { removed: e },
            })
        })
    } else if crossing_condition(inst, &open.j2) {
        Some(JStarWitness {
            map: DihedralMap::identity(n),
            j1: open.j1,
            j2: open.j2,
            kind: JStarKind::Type2,
        })
    } else {
        None
    }
}

/// The three Type-2 configurations on `K_6` with `J_{6,1} = ∅`.
pub fn k6_exceptional_configurations() -> [ConvexInstance; 3] {
    let mk = |pairs: &[(usize, usize)]| ConvexInstance::new(6, pairs.iter().copied()).unwrap();
    [
        // 4-cycle v1 v4 v2 v5 plus v0 v3
        mk(&[(1, 4), (4, 2), (2, 5), (5, 1), (0, 3)]),
        // triangle v1 v3 v5 plus v0 v2, v1 v4
        mk(&[(1, 3), (3, 5), (5, 1), (0, 2), (1, 4)]),
        // triangle v1 v3 v5 plus the path v2 v0 v4
        mk(&[(1, 3), (3, 5), (5, 1), (2, 0), (0, 4)]),
    ]
}
