use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::{AbstractGraph, Placement};
use crate::error::{Error, Result};
use crate::model::ConvexInstance;
use crate::triangulator;

/// Largest polygon searched when no budget is given.
pub const SEARCH_CEILING: usize = 10;

struct Ctx<'a> {
    g: &'a AbstractGraph,
    n: usize,
    earlier: Vec<Vec<usize>>,
    budget: Option<u64>,
    spent: AtomicU64,
    exhausted: AtomicBool,
}

impl Ctx<'_> {
    fn hull(&self, p: usize, q: usize) -> bool {
        let d = p.abs_diff(q);
        d == 1 || d == self.n - 1
    }

    fn leaf(&self, pos: &[usize]) -> bool {
        if let Some(b) = self.budget {
            if self.spent.fetch_add(1, Ordering::Relaxed) >= b {
                self.exhausted.store(true, Ordering::Relaxed);
                return false;
            }
        }
        let inst = ConvexInstance::new(
            self.n,
            self.g.edges().iter().map(|&(u, v)| (pos[u], pos[v])),
        )
        .expect("injective placement of a simple graph");
        triangulator::decide(&inst)
    }

    fn dfs(&self, pos: &mut Vec<usize>, used: u64) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let v = pos.len();
        if v == self.g.vertex_count() {
            return self.leaf(pos);
        }
        for p in 0..self.n {
            if used >> p & 1 == 1 || self.earlier[v].iter().any(|&u| self.hull(pos[u], p)) {
                continue;
            }
            pos.push(p);
            if self.dfs(pos, used | 1 << p) {
                return true;
            }
            pos.pop();
        }
        false
    }
}

/// Exhaustive search for a placement of `g` on the `n`-gon whose complement
/// triangulates.
///
/// Abstract vertex 0 sits at position 0 and mirror images are skipped.
/// Without a budget, polygons above [`SEARCH_CEILING`] are refused; with one,
/// at most `budget` placements are tested and running out is reported as
/// [`Error::SearchRefused`]. The first placement in position order wins, so
/// the result does not depend on the thread count.
pub fn search_packing(
    g: &AbstractGraph,
    n: usize,
    budget: Option<u64>,
) -> Result<Option<Placement>> {
    let m = g.vertex_count();
    if !(3..=64).contains(&n) || m > n {
        return Err(Error::InvalidParams(format!(
            "cannot place {m} vertices on a {n}-gon"
        )));
    }
    if budget.is_none() && n > SEARCH_CEILING {
        return Err(Error::SearchRefused(format!(
            "n = {n} exceeds the search ceiling {SEARCH_CEILING}; pass a budget"
        )));
    }
    let mut earlier = vec![Vec::new(); m];
    for &(u, v) in g.edges() {
        earlier[u.max(v)].push(u.min(v));
    }
    let ctx = Ctx {
        g,
        n,
        earlier,
        budget,
        spent: AtomicU64::new(0),
        exhausted: AtomicBool::new(false),
    };
    let found = match m {
        0 => Some(Vec::new()),
        1 => Some(vec![0]),
        _ => (1..=n / 2)
            .into_par_iter()
            .filter(|&p| !ctx.earlier[1].contains(&0) || !ctx.hull(0, p))
            .find_map_first(|p| {
                let mut pos = vec![0, p];
                ctx.dfs(&mut pos, 1 | 1 << p).then_some(pos)
            }),
    };
    let found = match found {
        Some(pos) => pos,
        None if ctx.exhausted.load(Ordering::Relaxed) => {
            return Err(Error::SearchRefused("placement budget exhausted".into()));
        }
        None => return Ok(None),
    };
    Placement::new(g.clone(), n, found, None).map(Some)
}
