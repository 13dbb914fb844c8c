use super::cycle::{pack_cycle, step_cycle};
use super::{with_fallback, AbstractGraph, Assembly, Placement};
use crate::error::{Error, Result};
use crate::model::{Chord, ConvexInstance};

/// Cycle multisets, sorted descending, that admit no triangulable placement.
pub const EXCEPTIONAL_MULTISETS: [&[usize]; 6] = [&[3], &[4], &[5], &[6], &[3, 3], &[4, 3]];

pub fn is_exceptional(lengths: &[usize]) -> bool {
    let sorted = sorted_desc(lengths);
    EXCEPTIONAL_MULTISETS
        .iter()
        .any(|e| *e == sorted.as_slice())
}

fn sorted_desc(lengths: &[usize]) -> Vec<usize> {
    let mut s = lengths.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// Cycles drawn on the polygon `x, A, z, B, y`, with `x` and `y` adjacent.
struct Layout {
    x: usize,
    z: usize,
    y: usize,
    arc_a: Vec<usize>,
    arc_b: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

fn layout(n: usize, lengths: &[usize]) -> Result<Layout> {
    let total: usize = lengths.iter().sum();
    if lengths.iter().any(|&l| l < 3) || total + 3 != n || total < 4 {
        return Err(Error::InvalidParams(format!(
            "need cycle lengths >= 3 summing to n - 3 >= 4 (n = {n}, sum = {total})"
        )));
    }
    let k = lengths.len();
    let in_a: Vec<usize> = lengths.iter().map(|l| l.div_ceil(2)).collect();
    let in_b: Vec<usize> = lengths.iter().map(|l| l / 2).collect();
    let deal = |counts: &[usize], next: &mut usize| {
        let mut slots = vec![Vec::new(); k];
        let rounds = counts.iter().copied().max().unwrap_or(0);
        for r in 0..rounds {
            for c in 0..k {
                if r < counts[c] {
                    slots[c].push(*next);
                    *next += 1;
                }
            }
        }
        slots
    };
    let mut next = 1;
    let a_slots = deal(&in_a, &mut next);
    let z = next;
    next += 1;
    let b_slots = deal(&in_b, &mut next);
    let y = next;
    debug_assert_eq!(y, n - 1);
    let cycles = (0..k)
        .map(|c| {
            let mut cyc = Vec::with_capacity(lengths[c]);
            for j in 0..in_a[c] {
                cyc.push(a_slots[c][j]);
                if j < in_b[c] {
                    cyc.push(b_slots[c][j]);
                }
            }
            cyc
        })
        .collect();
    Ok(Layout {
        x: 0,
        z,
        y,
        arc_a: (1..z).collect(),
        arc_b: (z + 1..y).collect(),
        cycles,
    })
}

/// Places disjoint cycles on `n − 3` of the `n` polygon vertices, leaving
/// two adjacent hull vertices and one vertex opposite them unused.
pub fn remark1_layout(n: usize, lengths: &[usize]) -> Result<Placement> {
    let l = layout(n, lengths)?;
    let graph = AbstractGraph::cycle_union(lengths)?;
    let positions: Vec<usize> = l.cycles.concat();
    let assembly = Assembly {
        chords: vec![Chord::new(l.x, l.z), Chord::new(l.z, l.y)],
        pieces: vec![(l.x..=l.z).collect(), (l.z..=l.y).collect()],
    };
    let inst = induce(&graph, n, &positions)?;
    let cert = assembly.resolve(&inst);
    Placement::new(graph, n, positions, cert)
}

/// A host polygon with new vertices inserted into some hull gaps.
struct Splice {
    n: usize,
    map: Vec<usize>,
    gaps: Vec<Vec<usize>>,
}

/// `inserts[i] = (g, c)` puts `c` new vertices between host `g` and `g + 1`.
fn splice(p: usize, inserts: &[(usize, usize)]) -> Splice {
    let mut map = Vec::with_capacity(p);
    let mut gaps = vec![Vec::new(); inserts.len()];
    let mut next = 0;
    for h in 0..p {
        map.push(next);
        next += 1;
        for (slot, &(g, c)) in inserts.iter().enumerate() {
            if g == h {
                gaps[slot].extend(next..next + c);
                next += c;
            }
        }
    }
    Splice { n: next, map, gaps }
}

struct Construction {
    n: usize,
    cycles: Vec<Vec<usize>>,
    assembly: Assembly,
}

fn explicit(n: usize, cycles: &[&[usize]], cert: &[(usize, usize)]) -> Construction {
    Construction {
        n,
        cycles: cycles.iter().map(|c| c.to_vec()).collect(),
        assembly: Assembly {
            chords: cert.iter().map(|&(a, b)| Chord::new(a, b)).collect(),
            pieces: Vec::new(),
        },
    }
}

/// Host cycle on `p` vertices with the remaining cycles laid out in the two
/// gaps after host `x` and `x + 1`; host `x`, `x + 1`, `x + 2` play `x, z, y`.
struct Embedded {
    sp: Splice,
    small: Vec<usize>,
    cycles: Vec<Vec<usize>>,
    arc_a: Vec<usize>,
    arc_b: Vec<usize>,
}

fn embed(p: usize, host_cycle: &[usize], x: usize, rest: &[usize]) -> Result<Embedded> {
    let total: usize = rest.iter().sum();
    let l = layout(total + 3, rest)?;
    let (zh, yh) = ((x + 1) % p, (x + 2) % p);
    let sp = splice(p, &[(x, l.arc_a.len()), (zh, l.arc_b.len())]);
    let mut small = vec![0; total + 3];
    small[l.x] = sp.map[x];
    small[l.z] = sp.map[zh];
    small[l.y] = sp.map[yh];
    for (i, &s) in l.arc_a.iter().enumerate() {
        small[s] = sp.gaps[0][i];
    }
    for (i, &s) in l.arc_b.iter().enumerate() {
        small[s] = sp.gaps[1][i];
    }
    let mut cycles = vec![host_cycle.iter().map(|&h| sp.map[h]).collect::<Vec<_>>()];
    cycles.extend(
        l.cycles
            .iter()
            .map(|c| c.iter().map(|&s| small[s]).collect()),
    );
    let arc_a = l.arc_a.iter().map(|&s| small[s]).collect();
    let arc_b = l.arc_b.iter().map(|&s| small[s]).collect();
    Ok(Embedded {
        sp,
        small,
        cycles,
        arc_a,
        arc_b,
    })
}

/// Large host cycle whose triangulation contains `v0v2`.
fn large_host(p: usize, host: (Vec<usize>, Vec<Chord>), rest: &[usize]) -> Result<Construction> {
    let (cycle, cert) = host;
    if rest == [3] {
        let sp = splice(p, &[(0, 1), (1, 1), (2, 1)]);
        let m = &sp.map;
        let mut chords: Vec<Chord> = cert
            .iter()
            .map(|c| Chord::new(m[c.a()], m[c.b()]))
            .collect();
        chords.extend([
            Chord::new(m[0], m[1]),
            Chord::new(m[1], m[2]),
            Chord::new(m[2], m[3]),
        ]);
        let triangle = vec![sp.gaps[0][0], sp.gaps[1][0], sp.gaps[2][0]];
        return Ok(Construction {
            n: sp.n,
            cycles: vec![cycle.iter().map(|&h| m[h]).collect(), triangle],
            assembly: Assembly {
                chords,
                pieces: Vec::new(),
            },
        });
    }
    let e = embed(p, &cycle, 0, rest)?;
    let m = &e.sp.map;
    let mut chords: Vec<Chord> = cert
        .iter()
        .map(|c| Chord::new(m[c.a()], m[c.b()]))
        .collect();
    chords.extend([Chord::new(m[0], m[1]), Chord::new(m[1], m[2])]);
    let cap_a = std::iter::once(m[0])
        .chain(e.arc_a.iter().copied())
        .chain([m[1]])
        .collect();
    let cap_b = std::iter::once(m[1])
        .chain(e.arc_b.iter().copied())
        .chain([m[2]])
        .collect();
    Ok(Construction {
        n: e.sp.n,
        cycles: e.cycles,
        assembly: Assembly {
            chords,
            pieces: vec![cap_a, cap_b],
        },
    })
}

fn hexagon_host(rest: &[usize]) -> Result<Construction> {
    if rest == [3] {
        return Ok(explicit(
            9,
            &[&[0, 3, 8, 5, 2, 6], &[1, 4, 7]],
            &[(0, 5), (0, 7), (5, 7), (1, 5), (1, 3), (3, 5)],
        ));
    }
    // x, z, y = v5, v0, v1
    let e = embed(6, &[0, 2, 5, 3, 1, 4], 5, rest)?;
    let m = &e.sp.map;
    let g0 = e
        .arc_b
        .iter()
        .copied()
        .chain([m[0], m[1], m[2], m[3]])
        .collect();
    let g1 = e
        .arc_a
        .iter()
        .copied()
        .chain([m[0], m[5], m[4], m[3]])
        .collect();
    debug_assert_eq!(e.small.len(), e.arc_a.len() + e.arc_b.len() + 3);
    Ok(Construction {
        n: e.sp.n,
        cycles: e.cycles,
        assembly: Assembly {
            chords: vec![Chord::new(m[0], m[3])],
            pieces: vec![g0, g1],
        },
    })
}

fn pentagon_host(rest: &[usize]) -> Result<Construction> {
    if rest == [3] {
        return Ok(explicit(
            8,
            &[&[0, 3, 6, 2, 5], &[1, 4, 7]],
            &[(0, 2), (2, 4), (0, 4), (0, 6), (4, 6)],
        ));
    }
    let e = embed(5, &[0, 2, 4, 1, 3], 0, rest)?;
    let m = &e.sp.map;
    let w = e.arc_a[0];
    // F* together with v1, v2, v3 is one run of the polygon from w to v3
    let g_star = (w..=m[3]).collect();
    Ok(Construction {
        n: e.sp.n,
        cycles: e.cycles,
        assembly: Assembly {
            chords: vec![Chord::new(w, m[3]), Chord::new(w, m[4])],
            pieces: vec![g_star],
        },
    })
}

fn square_host(rest: &[usize]) -> Result<Construction> {
    if rest == [4] {
        return Ok(explicit(
            8,
            &[&[0, 2, 5, 3], &[1, 6, 4, 7]],
            &[(1, 3), (1, 4), (1, 5), (0, 5), (5, 7)],
        ));
    }
    let total: usize = rest.iter().sum();
    let n = total + 4;
    let l = layout(n - 1, rest)?;
    let lift = |s: usize| if s > l.z { s + 1 } else { s };
    let w = l.z + 1;
    let (x, z, y) = (lift(l.x), lift(l.z), lift(l.y));
    let mut cycles: Vec<Vec<usize>> = l
        .cycles
        .iter()
        .map(|c| c.iter().map(|&s| lift(s)).collect())
        .collect();
    cycles.insert(0, vec![x, z, y, w]);
    let f_star: Vec<Chord> = l
        .cycles
        .iter()
        .flat_map(|c| (0..c.len()).map(move |i| Chord::new(lift(c[i]), lift(c[(i + 1) % c.len()]))))
        .collect();
    let arc_b: Vec<usize> = l.arc_b.iter().map(|&s| lift(s)).collect();
    let (x1, x2) = l
        .arc_a
        .iter()
        .flat_map(|&a| arc_b.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| !f_star.contains(&Chord::new(a, b)))
        .ok_or_else(|| Error::ConstructionFault("no non-adjacent pair across the arcs".into()))?;
    Ok(Construction {
        n,
        cycles,
        assembly: Assembly {
            chords: vec![Chord::new(x1, z), Chord::new(z, x2), Chord::new(x1, x2)],
            pieces: vec![
                (x1..=z).collect(),
                (z..=x2).collect(),
                (x2..n).chain(0..=x1).collect(),
            ],
        },
    })
}

fn triangles(n: usize) -> Construction {
    let alpha = n / 3;
    let cycles: Vec<Vec<usize>> = (0..alpha)
        .map(|i| vec![i, i + alpha, i + 2 * alpha])
        .collect();
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    if n == 9 {
        return explicit(9, &refs, &[(0, 2), (2, 4), (0, 4), (4, 6), (6, 8), (4, 8)]);
    }
    let s = alpha - 1;
    let mut pieces: Vec<Vec<usize>> = (0..3).map(|i| (i * s..=(i + 1) * s).collect()).collect();
    pieces.push((3 * s..n).chain([0]).collect());
    Construction {
        n,
        cycles,
        assembly: Assembly {
            chords: vec![
                Chord::new(0, s),
                Chord::new(s, 2 * s),
                Chord::new(2 * s, 3 * s),
                Chord::new(0, 3 * s),
                Chord::new(0, 2 * s),
            ],
            pieces,
        },
    }
}

fn construct(sorted: &[usize]) -> Result<Construction> {
    let p = sorted[0];
    let rest = &sorted[1..];
    match p {
        7 => {
            let host = (
                vec![0, 3, 1, 6, 4, 2, 5],
                vec![
                    Chord::new(0, 2),
                    Chord::new(2, 6),
                    Chord::new(3, 6),
                    Chord::new(3, 5),
                ],
            );
            large_host(7, host, rest)
        }
        p if p >= 8 => large_host(p, step_cycle(p), rest),
        6 => hexagon_host(rest),
        5 => pentagon_host(rest),
        4 => square_host(rest),
        _ => Ok(triangles(sorted.len() * 3)),
    }
}

fn induce(graph: &AbstractGraph, n: usize, positions: &[usize]) -> Result<ConvexInstance> {
    ConvexInstance::new(
        n,
        graph
            .edges()
            .iter()
            .map(|&(u, v)| (positions[u], positions[v])),
    )
    .map_err(|e| Error::ConstructionFault(e.to_string()))
}

fn finish(lengths: &[usize], c: Construction) -> Result<Placement> {
    let graph = AbstractGraph::cycle_union(lengths)?;
    let mut pool: Vec<Option<Vec<usize>>> = c.cycles.into_iter().map(Some).collect();
    let mut positions = Vec::with_capacity(graph.vertex_count());
    for &l in lengths {
        let slot = pool
            .iter_mut()
            .find(|s| s.as_ref().is_some_and(|v| v.len() == l))
            .ok_or_else(|| {
                Error::ConstructionFault(format!("no constructed cycle of length {l}"))
            })?;
        positions.extend(slot.take().expect("slot is filled"));
    }
    let inst = induce(&graph, c.n, &positions)?;
    let cert = c.assembly.resolve(&inst).ok_or_else(|| {
        Error::ConstructionFault("a piece of the construction does not triangulate".into())
    })?;
    Placement::new(graph, c.n, positions, Some(cert))
}

/// Places a disjoint union of cycles with the given lengths on the polygon
/// with as many vertices, so that the complement triangulates.
///
/// Abstract ids follow [`AbstractGraph::cycle_union`] in the order given.
pub fn pack_two_regular(lengths: &[usize]) -> Result<Placement> {
    if lengths.is_empty() || lengths.iter().any(|&l| l < 3) {
        return Err(Error::InvalidParams(
            "cycle lengths must be >= 3 and non-empty".into(),
        ));
    }
    let n: usize = lengths.iter().sum();
    if is_exceptional(lengths) {
        return Err(Error::NotPackable(format!(
            "{lengths:?} has no triangulable placement in K{n}"
        )));
    }
    if lengths.len() == 1 {
        return pack_cycle(n);
    }
    let graph = AbstractGraph::cycle_union(lengths)?;
    let built = construct(&sorted_desc(lengths)).and_then(|c| finish(lengths, c));
    with_fallback(&graph, n, built)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_gon_layout_sizes() {
        let p = remark1_layout(15, &[4, 3, 5]).unwrap();
        assert_eq!(p.induced().forbidden_count(), 12);
        let used: Vec<usize> = {
            let mut u = p.positions().to_vec();
            u.sort_unstable();
            u
        };
        // x = 0 and y = 14 are adjacent, z = 8 splits the rest
        assert!(!used.contains(&0) && !used.contains(&14) && !used.contains(&8));
        assert!(remark1_layout(7, &[4]).is_ok());
        assert!(matches!(
            remark1_layout(8, &[3, 3]),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            remark1_layout(6, &[3]),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn splice_offsets() {
        let sp = splice(4, &[(0, 2), (3, 1)]);
        assert_eq!(sp.n, 7);
        assert_eq!(sp.map, vec![0, 3, 4, 5]);
        assert_eq!(sp.gaps, vec![vec![1, 2], vec![6]]);
    }

    #[test]
    fn exceptional_sets() {
        for e in EXCEPTIONAL_MULTISETS {
            assert!(matches!(pack_two_regular(e), Err(Error::NotPackable(_))));
        }
        assert!(is_exceptional(&[3, 4]));
        assert!(!is_exceptional(&[4, 4]));
    }

    #[test]
    fn explicit_cases_keep_their_certificates() {
        let cases: [(&[usize], &[(usize, usize)]); 4] = [
            (&[6, 3], &[(0, 5), (0, 7), (5, 7), (1, 5), (1, 3), (3, 5)]),
            (&[5, 3], &[(0, 2), (2, 4), (0, 4), (0, 6), (4, 6)]),
            (&[4, 4], &[(1, 3), (1, 4), (1, 5), (0, 5), (5, 7)]),
            (
                &[3, 3, 3],
                &[(0, 2), (2, 4), (0, 4), (4, 6), (6, 8), (4, 8)],
            ),
        ];
        for (lengths, cert) in cases {
            let p = pack_two_regular(lengths).unwrap();
            assert!(!p.is_fallback());
            let mut want: Vec<Chord> = cert.iter().map(|&(a, b)| Chord::new(a, b)).collect();
            want.sort_unstable();
            assert_eq!(p.certificate().unwrap(), want.as_slice(), "{lengths:?}");
        }
    }

    #[test]
    fn input_order_is_respected() {
        let p = pack_two_regular(&[3, 6]).unwrap();
        let pos = p.positions();
        assert_eq!(&pos[..3], &[1, 4, 7]);
        assert_eq!(&pos[3..], &[0, 3, 8, 5, 2, 6]);
    }
}
