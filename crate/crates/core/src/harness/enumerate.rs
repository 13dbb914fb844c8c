use crate::error::{Error, Result};
use crate::model::{diagonals, Chord, ConvexInstance, DihedralMap};

/// Largest polygon whose diagonal sets fit a 64-bit mask.
pub const ENUMERATION_CEILING: usize = 12;

/// Diagonal sets of one polygon as bit masks, bit `i` standing for the
/// `i`-th diagonal in lexicographic order.
///
/// With that indexing, two sets of equal size compare like their sorted
/// chord lists: the smaller one owns the lowest bit where they differ.
#[derive(Debug, Clone)]
pub struct DiagonalSpace {
    n: usize,
    diagonals: Vec<Chord>,
    images: Vec<Vec<u8>>,
}

impl DiagonalSpace {
    pub fn new(n: usize) -> Result<Self> {
        if !(3..=ENUMERATION_CEILING).contains(&n) {
            return Err(Error::SearchRefused(format!(
                "diagonal masks cover 3 <= n <= {ENUMERATION_CEILING}, got {n}"
            )));
        }
        let diagonals = diagonals(n);
        let mut index = vec![u8::MAX; n * n];
        for (i, c) in diagonals.iter().enumerate() {
            index[c.a() * n + c.b()] = i as u8;
        }
        let images = DihedralMap::all(n)
            .filter(|m| !m.is_identity())
            .map(|m| {
                diagonals
                    .iter()
                    .map(|&c| {
                        let d = m.apply_chord(c);
                        index[d.a() * n + d.b()]
                    })
                    .collect()
            })
            .collect();
        Ok(DiagonalSpace {
            n,
            diagonals,
            images,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn chord(&self, bit: usize) -> Chord {
        self.diagonals[bit]
    }

    fn image(perm: &[u8], mut mask: u64) -> u64 {
        let mut out = 0;
        while mask != 0 {
            out |= 1 << perm[mask.trailing_zeros() as usize];
            mask &= mask - 1;
        }
        out
    }

    fn less(a: u64, b: u64) -> bool {
        let d = a ^ b;
        d != 0 && a & d & d.wrapping_neg() != 0
    }

    /// Is `mask` the least member of its dihedral orbit?
    pub fn is_canonical(&self, mask: u64) -> bool {
        self.images
            .iter()
            .all(|p| !Self::less(Self::image(p, mask), mask))
    }

    /// The least member of the orbit of `mask`.
    pub fn canonical(&self, mask: u64) -> u64 {
        self.images
            .iter()
            .map(|p| Self::image(p, mask))
            .fold(mask, |best, m| if Self::less(m, best) { m } else { best })
    }

    pub fn instance(&self, mut mask: u64) -> ConvexInstance {
        let mut chords = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            chords.push(self.diagonals[mask.trailing_zeros() as usize]);
            mask &= mask - 1;
        }
        ConvexInstance::from_chords(self.n, chords).expect("diagonals of the polygon")
    }

    /// All masks with `min..=max` bits, by size and then by value.
    pub fn masks(&self, min: usize, max: usize) -> Masks {
        let d = self.len();
        Masks {
            d,
            k: min,
            max: max.min(d),
            next: (min <= max.min(d)).then(|| low_bits(min)),
        }
    }
}

fn low_bits(k: usize) -> u64 {
    if k == 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Gosper's hack over each size in turn.
#[derive(Debug, Clone)]
pub struct Masks {
    d: usize,
    k: usize,
    max: usize,
    next: Option<u64>,
}

impl Iterator for Masks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        let succ = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.checked_add(c);
            r.map(|r| (((r ^ cur) >> 2) / c) | r)
                .filter(|&m| self.d == 64 || m >> self.d == 0)
        };
        self.next = match succ {
            Some(m) => Some(m),
            None if self.k < self.max => {
                self.k += 1;
                Some(low_bits(self.k))
            }
            None => None,
        };
        Some(cur)
    }
}

/// Every diagonal set of the `n`-gon with `min..=max` chords; with
/// `canonical_only`, one representative (the lexicographically least) per
/// dihedral orbit.
pub fn enumerate_forbidden_sets(
    n: usize,
    min: usize,
    max: usize,
    canonical_only: bool,
) -> Result<impl Iterator<Item = ConvexInstance>> {
    let space = DiagonalSpace::new(n)?;
    if min > max || max > space.len() {
        return Err(Error::InvalidParams(format!(
            "size bounds {min}..={max} outside 0..={}",
            space.len()
        )));
    }
    let masks = space.masks(min, max);
    Ok(masks
        .filter_map(move |m| (!canonical_only || space.is_canonical(m)).then(|| space.instance(m))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn pentagon_classes() {
        let all: Vec<_> = enumerate_forbidden_sets(5, 0, 2, true).unwrap().collect();
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn square_single_diagonal() {
        let all: Vec<_> = enumerate_forbidden_sets(4, 1, 1, false).unwrap().collect();
        assert_eq!(all.len(), 2);
        assert_eq!(enumerate_forbidden_sets(4, 1, 1, true).unwrap().count(), 1);
    }

    #[test]
    fn full_stream_counts() {
        let d = 20;
        let total: u64 = (0..=4).map(|k| binom(d, k)).sum();
        assert_eq!(
            enumerate_forbidden_sets(8, 0, 4, false).unwrap().count() as u64,
            total
        );
    }

    #[test]
    fn representatives_are_canonical_keys() {
        for inst in enumerate_forbidden_sets(7, 0, 5, true).unwrap() {
            assert_eq!(inst.canonical_key().0.as_slice(), inst.forbidden());
        }
    }

    #[test]
    fn canonical_mask_matches_instance_key() {
        let space = DiagonalSpace::new(8).unwrap();
        for m in space.masks(3, 3).step_by(7) {
            let c = space.canonical(m);
            assert!(space.is_canonical(c));
            assert_eq!(
                space.instance(c).forbidden(),
                space.instance(m).canonical_key().0.as_slice()
            );
        }
    }

    #[test]
    fn refusals() {
        assert!(matches!(
            DiagonalSpace::new(13),
            Err(Error::SearchRefused(_))
        ));
        assert!(enumerate_forbidden_sets(6, 3, 2, false).is_err());
    }
}
