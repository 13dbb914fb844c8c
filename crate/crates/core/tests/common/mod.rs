//! Brute-force oracles, written without the library's algorithms.
#![allow(dead_code)]

use std::collections::HashSet;

pub type Pair = (usize, usize);

pub fn norm(a: usize, b: usize) -> Pair {
    (a.min(b), a.max(b))
}

/// Interior crossing of two chords with four distinct endpoints.
pub fn cross(p: Pair, q: Pair) -> bool {
    let ((a, b), (c, d)) = (norm(p.0, p.1), norm(q.0, q.1));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

pub fn is_hull(n: usize, p: Pair) -> bool {
    let (a, b) = norm(p.0, p.1);
    b - a == 1 || (a == 0 && b == n - 1)
}

pub fn all_diagonals(n: usize) -> Vec<Pair> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 2..n {
            if !(a == 0 && b == n - 1) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Every triangulation of the convex polygon on `verts` (in hull order),
/// as diagonal lists, built by choosing the apex over the first-last edge.
pub fn triangulations_of(verts: &[usize]) -> Vec<Vec<Pair>> {
    if verts.len() < 3 {
        return vec![Vec::new()];
    }
    let (first, last) = (verts[0], verts[verts.len() - 1]);
    let mut out = Vec::new();
    for k in 1..verts.len() - 1 {
        let left = triangulations_of(&verts[..=k]);
        let right = triangulations_of(&verts[k..]);
        for l in &left {
            for r in &right {
                let mut t: Vec<Pair> = l.iter().chain(r.iter()).copied().collect();
                if k >= 2 {
                    t.push(norm(first, verts[k]));
                }
                if verts.len() - 1 - k >= 2 {
                    t.push(norm(verts[k], last));
                }
                out.push(t);
            }
        }
    }
    out
}

pub fn all_triangulations(n: usize) -> Vec<Vec<Pair>> {
    let verts: Vec<usize> = (0..n).collect();
    triangulations_of(&verts)
}

/// Triangulations of `K_n` avoiding `f`.
pub fn filtered_count(all: &[Vec<Pair>], f: &[Pair]) -> usize {
    let banned: HashSet<Pair> = f.iter().map(|&(a, b)| norm(a, b)).collect();
    all.iter()
        .filter(|t| t.iter().all(|d| !banned.contains(d)))
        .count()
}

/// Largest pairwise non-crossing subset of `items`, by branching.
pub fn max_independent(items: &[Pair]) -> usize {
    fn go(items: &[Pair], chosen: &mut Vec<Pair>, best: &mut usize) {
        if chosen.len() + items.len() <= *best {
            return;
        }
        match items.split_first() {
            None => *best = (*best).max(chosen.len()),
            Some((&x, rest)) => {
                if chosen.iter().all(|&c| !cross(c, x)) {
                    chosen.push(x);
                    go(rest, chosen, best);
                    chosen.pop();
                }
                go(rest, chosen, best);
            }
        }
    }
    let mut best = 0;
    go(items, &mut Vec::new(), &mut best);
    best
}

/// Largest non-crossing edge set of `K_n − f`: free hull edges plus a
/// maximum non-crossing set of free diagonals.
pub fn brute_max_plane(n: usize, f: &[Pair]) -> usize {
    let banned: HashSet<Pair> = f.iter().map(|&(a, b)| norm(a, b)).collect();
    let hull = (0..n)
        .filter(|&i| !banned.contains(&norm(i, (i + 1) % n)))
        .count();
    let free: Vec<Pair> = all_diagonals(n)
        .into_iter()
        .filter(|d| !banned.contains(d))
        .collect();
    hull + max_independent(&free)
}

pub fn catalan(m: u64) -> u128 {
    let mut c: u128 = 1;
    for i in 0..m as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// Subset `mask` of `items`.
pub fn pick<T: Copy>(items: &[T], mask: u64) -> Vec<T> {
    items
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &x)| x)
        .collect()
}
