//! Convex skewness: the fewest edges whose removal from `K_n − F` leaves a
//! convex plane graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::ConvexInstance;
use crate::triangulator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SkewnessReport {
    pub edges_total: usize,
    pub max_plane: usize,
    pub sk_c: usize,
    /// `C(n−2, 2) − |F|`, present only when `K_n − F` triangulates.
    pub formula_value: Option<usize>,
    pub formula_applicable: bool,
}

/// `C(n−2, 2) − |F|`, valid when `K_n − F` triangulates.
pub fn skewness_formula(inst: &ConvexInstance) -> Result<usize> {
    if !triangulator::decide(inst) {
        return Err(Error::FormulaInapplicable);
    }
    let n = inst.n();
    Ok((n - 2) * (n - 3) / 2 - inst.forbidden_count())
}

/// Size of a largest non-crossing edge set of `K_n − F`.
///
/// Every polygon edge outside `F` counts. For diagonals, `best[i][j]` is the
/// optimum strictly inside the arc `i..=j`; any non-crossing set extends to a
/// triangulation of the arc, so splitting at the apex over `ij` is exhaustive.
pub fn max_noncrossing(inst: &ConvexInstance) -> usize {
    let n = inst.n();
    let hull = (0..n).filter(|&i| inst.allowed(i, (i + 1) % n)).count();
    let usable = |a: usize, b: usize| b - a >= 2 && !(a == 0 && b == n - 1) && inst.allowed(a, b);
    let mut best = vec![0usize; n * n];
    for len in 2..n {
        for i in 0..n - len {
            let j = i + len;
            let v = (i + 1..j)
                .map(|k| {
                    best[i * n + k]
                        + best[k * n + j]
                        + usable(i, k) as usize
                        + usable(k, j) as usize
                })
                .max()
                .unwrap_or(0);
            best[i * n + j] = v;
        }
    }
    hull + best[n - 1]
}

pub fn skewness(inst: &ConvexInstance) -> SkewnessReport {
    let n = inst.n();
    let edges_total = n * (n - 1) / 2 - inst.forbidden_count();
    let max_plane = max_noncrossing(inst);
    let formula_value = skewness_formula(inst).ok();
    let report = SkewnessReport {
        edges_total,
        max_plane,
        sk_c: edges_total - max_plane,
        formula_value,
        formula_applicable: formula_value.is_some(),
    };
    if report.formula_applicable {
        assert_eq!(
            Some(report.sk_c),
            formula_value,
            "closed form disagrees with the plane optimum"
        );
        assert_eq!(max_plane, 2 * n - 3);
    } else if !inst.has_boundary_in_forbidden() {
        assert!(max_plane < 2 * n - 3);
    }
    report
}
