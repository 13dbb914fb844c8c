//! The non-triangulable configuration on `n − 2` forbidden chords.
//!
//! In standard labeling it is either the star
//! `{v_0 v_i : 2 ≤ i ≤ n−2} ∪ {v_1 v_{n−1}}`, or an arc form: vertices
//! `v_0 … v_{k−1}` (with `2 ≤ k ≤ n − 4`) are non-pendant with closed ears,
//! every other vertex is pendant and hangs off a non-pendant vertex, and two
//! crossing pendant chords always hang off consecutive arc vertices.

use serde::Serialize;

use crate::model::{Chord, ConvexInstance, DihedralMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum FStarVariant {
    Star,
    /// `k` is the length of the non-pendant arc `v_0 … v_{k−1}`.
    Arc {
        k: usize,
    },
}

/// A relabeling that brings `F` into one of the standard forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FStarWitness {
    pub map: DihedralMap,
    pub variant: FStarVariant,
}

impl FStarWitness {
    /// Re-checks the witness against `inst`.
    pub fn validate(&self, inst: &ConvexInstance) -> bool {
        self.map.n == inst.n()
            && passes_prefilter(inst)
            && standard_form(&inst.apply_map(&self.map)) == Some(self.variant)
    }
}

fn passes_prefilter(inst: &ConvexInstance) -> bool {
    let n = inst.n();
    n >= 4
        && inst.forbidden_count() == n - 2
        && !inst.has_boundary_in_forbidden()
        && !inst.has_isolated_vertex()
}

/// Searches all `2n` relabelings for a standard form.
pub fn detect_fstar(inst: &ConvexInstance) -> Option<FStarWitness> {
    if !passes_prefilter(inst) {
        return None;
    }
    DihedralMap::all(inst.n()).find_map(|map| {
        standard_form(&inst.apply_map(&map)).map(|variant| FStarWitness { map, variant })
    })
}

fn star_chords(n: usize) -> Vec<Chord> {
    let mut v: Vec<Chord> = (2..=n - 2).map(|i| Chord::new(0, i)).collect();
    v.push(Chord::new(1, n - 1));
    v.sort_unstable();
    v
}

/// Checks the forms under the instance's own labels.
pub(crate) fn standard_form(inst: &ConvexInstance) -> Option<FStarVariant> {
    let n = inst.n();
    if inst.forbidden() == star_chords(n).as_slice() {
        return Some(FStarVariant::Star);
    }
    let deg = inst.degrees();
    let k = deg.iter().filter(|&&d| d >= 2).count();
    if k < 2 || k + 4 > n {
        return None;
    }
    for (i, &d) in deg.iter().enumerate() {
        if i < k {
            if d < 2 || inst.ear_is_open(i) {
                return None;
            }
        } else if d != 1 {
            return None;
        }
    }
    // pendant vertex -> the arc vertex it hangs from
    let anchor: Vec<(usize, usize)> = (k..n)
        .map(|p| {
            let c = inst
                .forbidden()
                .iter()
                .find(|c| c.contains(p))
                .expect("pendant vertex has one chord");
            (p, c.other(p).unwrap())
        })
        .collect();
    if anchor.iter().any(|&(_, q)| q >= k) {
        return None;
    }
    for (x, &(u, i)) in anchor.iter().enumerate() {
        for &(w, j) in &anchor[x + 1..] {
            if Chord::new(u, i).crosses(Chord::new(w, j)) {
                // both anchors lie in 0..k with k ≤ n − 4, so index distance
                // and circular distance agree
                debug_assert_eq!(i.abs_diff(j) == 1, Chord::new(i, j).is_boundary(n));
                if i.abs_diff(j) != 1 {
                    return None;
                }
            }
        }
    }
    Some(FStarVariant::Arc { k })
}
