//! Recognizers for the forbidden configurations on `n − 2` and `n − 1`
//! chords, and the decision tree that classifies small forbidden sets
//! without running the dynamic program.

mod fstar;
mod jstar;

pub use fstar::{detect_fstar, FStarVariant, FStarWitness};
pub use jstar::{
    detect_jstar, jstar_vertex_sets, k6_exceptional_configurations, JStarKind, JStarWitness,
};

use serde::Serialize;

use crate::model::ConvexInstance;
use crate::triangulator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangulableReason {
    /// At most `n − 3` forbidden diagonals.
    BelowBound,
    /// `n − 2` diagonals, not the blocked configuration.
    NotFStar,
    /// `n − 1` diagonals, neither blocked type.
    NotJStar,
}

/// Verdict of the decision tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum ConfigClass {
    Triangulable {
        reason: TriangulableReason,
    },
    BlockedFStar {
        witness: FStarWitness,
    },
    BlockedJStar {
        witness: JStarWitness,
    },
    BoundaryEdgeInF,
    /// `|F| ≥ n`: outside the characterization, resolved by the dynamic program.
    OutOfCharacterization {
        triangulable: bool,
    },
}

impl ConfigClass {
    /// The triangulability this class predicts.
    pub fn predicts_triangulable(&self) -> bool {
        match self {
            ConfigClass::Triangulable { .. } => true,
            ConfigClass::BlockedFStar { .. } | ConfigClass::BlockedJStar { .. } => false,
            ConfigClass::BoundaryEdgeInF => false,
            ConfigClass::OutOfCharacterization { triangulable } => *triangulable,
        }
    }

    pub fn is_blocked(&self) -> bool {
        matches!(
            self,
            ConfigClass::BlockedFStar { .. } | ConfigClass::BlockedJStar { .. }
        )
    }

    pub fn label(&self) -> &'static str {
        match self {
            ConfigClass::Triangulable {
                reason: TriangulableReason::BelowBound,
            } => "triangulable (below bound)",
            ConfigClass::Triangulable {
                reason: TriangulableReason::NotFStar,
            } => "triangulable (not F*)",
            ConfigClass::Triangulable {
                reason: TriangulableReason::NotJStar,
            } => "triangulable (not J*)",
            ConfigClass::BlockedFStar { .. } => "blocked (F* configuration)",
            ConfigClass::BlockedJStar { witness } => match witness.kind {
                JStarKind::Type1 { .. } => "blocked (J* type-1)",
                JStarKind::Type2 => "blocked (J* type-2)",
            },
            ConfigClass::BoundaryEdgeInF => "not triangulable (hull edge forbidden)",
            ConfigClass::OutOfCharacterization { triangulable: true } => {
                "triangulable (outside characterization, dynamic program)"
            }
            ConfigClass::OutOfCharacterization {
                triangulable: false,
            } => "not triangulable (outside characterization, dynamic program)",
        }
    }
}

/// Classifies `F` by its size and the configuration detectors.
pub fn classify(inst: &ConvexInstance) -> ConfigClass {
    let n = inst.n();
    let m = inst.forbidden_count();
    if inst.has_boundary_in_forbidden() {
        return ConfigClass::BoundaryEdgeInF;
    }
    if m + 3 <= n {
        ConfigClass::Triangulable {
            reason: TriangulableReason::BelowBound,
        }
    } else if m + 2 == n {
        match detect_fstar(inst) {
            Some(witness) => ConfigClass::BlockedFStar { witness },
            None => ConfigClass::Triangulable {
                reason: TriangulableReason::NotFStar,
            },
        }
    } else if m + 1 == n {
        match detect_jstar(inst) {
            Some(witness) => ConfigClass::BlockedJStar { witness },
            None => ConfigClass::Triangulable {
                reason: TriangulableReason::NotJStar,
            },
        }
    } else {
        ConfigClass::OutOfCharacterization {
            triangulable: triangulator::decide(inst),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Chord;

    fn cycle(n: usize, order: &[usize]) -> ConvexInstance {
        let pairs: Vec<_> = (0..order.len())
            .map(|i| (order[i], order[(i + 1) % order.len()]))
            .collect();
        ConvexInstance::new(n, pairs).unwrap()
    }

    #[test]
    fn below_bound() {
        let f = ConvexInstance::new(9, [(0, 2), (0, 3), (0, 4), (0, 5), (0, 6)]).unwrap();
        assert_eq!(
            classify(&f),
            ConfigClass::Triangulable {
                reason: TriangulableReason::BelowBound
            }
        );
    }

    #[test]
    fn ten_gon_is_blocked() {
        let f = ConvexInstance::new(
            10,
            [
                (0, 2),
                (0, 8),
                (1, 3),
                (1, 7),
                (1, 9),
                (3, 5),
                (3, 6),
                (2, 4),
            ],
        )
        .unwrap();
        assert!(matches!(classify(&f), ConfigClass::BlockedFStar { .. }));
    }

    #[test]
    fn seven_cycle_out_of_characterization() {
        let f = cycle(7, &[0, 2, 6, 4, 1, 3, 5]);
        assert_eq!(
            classify(&f),
            ConfigClass::OutOfCharacterization { triangulable: true }
        );
    }

    #[test]
    fn hull_edge() {
        let f = ConvexInstance::from_chords(6, [Chord::new(0, 1)]).unwrap();
        assert_eq!(classify(&f), ConfigClass::BoundaryEdgeInF);
        assert!(!classify(&f).predicts_triangulable());
    }
}
