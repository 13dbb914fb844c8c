use num_integer::Integer;

use super::{fan, with_fallback, AbstractGraph, Placement};
use crate::error::{Error, Result};
use crate::model::Chord;

/// Cyclic order of `C_n` on the polygon and a triangulation of the
/// complement, for `n ≥ 8`. The triangulation always contains `v0v2`.
pub(crate) fn step_cycle(n: usize) -> (Vec<usize>, Vec<Chord>) {
    debug_assert!(n >= 8);
    if n % 2 == 0 {
        let t = n >> n.trailing_zeros();
        let alpha = t + 2;
        assert_eq!(alpha.gcd(&n), 1, "step {alpha} does not generate Z_{n}");
        let order = (0..n).map(|i| i * alpha % n).collect();
        // even vertices carry no cycle edge: their ears plus a fan
        let evens: Vec<usize> = (0..n).step_by(2).collect();
        let mut cert: Vec<Chord> = (0..n / 2)
            .map(|i| Chord::new(2 * i, (2 * i + 2) % n))
            .collect();
        cert.extend(fan(&evens));
        (order, cert)
    } else {
        let alpha = n / 2;
        let beta = n.div_ceil(3);
        assert_eq!(alpha.gcd(&n), 1, "step {alpha} does not generate Z_{n}");
        let order = (0..n).map(|i| i * alpha % n).collect();
        let g0: Vec<usize> = (0..=beta).collect();
        let g1: Vec<usize> = (beta..=2 * beta).collect();
        let g2: Vec<usize> = (2 * beta..n).chain([0]).collect();
        let mut cert = vec![
            Chord::new(0, beta),
            Chord::new(beta, 2 * beta),
            Chord::new(0, 2 * beta),
        ];
        for g in [&g0, &g1, &g2] {
            cert.extend(fan(g));
        }
        (order, cert)
    }
}

/// Places `C_n` so that `K_n − C_n` triangulates; possible exactly when `n ≥ 7`.
pub fn pack_cycle(n: usize) -> Result<Placement> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "a cycle needs 3 vertices, got {n}"
        )));
    }
    if n <= 6 {
        return Err(Error::NotPackable(format!(
            "C{n} has no triangulable placement in K{n}"
        )));
    }
    let graph = AbstractGraph::cycle(n)?;
    let (order, cert) = if n == 7 {
        (
            vec![0, 2, 6, 4, 1, 3, 5],
            vec![
                Chord::new(1, 6),
                Chord::new(1, 5),
                Chord::new(2, 5),
                Chord::new(2, 4),
            ],
        )
    } else {
        step_cycle(n)
    };
    let built = Placement::new(graph.clone(), n, order, Some(cert));
    with_fallback(&graph, n, built)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cycles_refused() {
        for n in 3..=6 {
            assert!(matches!(pack_cycle(n), Err(Error::NotPackable(_))));
        }
        assert!(matches!(pack_cycle(2), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn stated_orders() {
        assert_eq!(
            pack_cycle(8).unwrap().positions(),
            &[0, 3, 6, 1, 4, 7, 2, 5]
        );
        assert_eq!(
            pack_cycle(9).unwrap().positions(),
            &[0, 4, 8, 3, 7, 2, 6, 1, 5]
        );
        let p = pack_cycle(7).unwrap();
        assert_eq!(p.certificate().unwrap().len(), 4);
    }

    #[test]
    fn no_fallback_up_to_forty() {
        for n in 7..=40 {
            let p = pack_cycle(n).unwrap();
            assert!(!p.is_fallback(), "n={n}");
            assert!(p.certificate().is_some());
        }
    }
}
