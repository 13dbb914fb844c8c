mod common;

use common::*;
use convex_tri::skewness::{max_noncrossing, skewness, skewness_formula};
use convex_tri::triangulator::decide;
use convex_tri::{Chord, ConvexInstance};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn all_diagonal_sets_up_to_six() {
    for n in 4..=6 {
        let ds = all_diagonals(n);
        for mask in 0..1u64 << ds.len() {
            let f = pick(&ds, mask);
            let inst = ConvexInstance::new(n, f.iter().copied()).unwrap();
            assert_eq!(
                max_noncrossing(&inst),
                brute_max_plane(n, &f),
                "n={n} F={f:?}"
            );
        }
    }
}

#[test]
fn sampled_sets_seven_and_eight() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 7..=8 {
        let ds = all_diagonals(n);
        for _ in 0..300 {
            let f: Vec<Pair> = ds.iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
            let inst = ConvexInstance::new(n, f.iter().copied()).unwrap();
            assert_eq!(
                max_noncrossing(&inst),
                brute_max_plane(n, &f),
                "n={n} F={f:?}"
            );
        }
    }
}

#[test]
fn hull_edges_in_f_only_shrink_the_graph() {
    let inst = ConvexInstance::new(6, [(0, 1), (2, 3)]).unwrap();
    let r = skewness(&inst);
    assert_eq!(r.edges_total, 13);
    assert_eq!(r.max_plane, 4 + 3);
    assert!(!r.formula_applicable);
}

fn arb_instance() -> impl Strategy<Value = ConvexInstance> {
    (4usize..=10).prop_flat_map(|n| {
        let ds = all_diagonals(n);
        let len = ds.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let f = ds.iter().zip(&keep).filter(|(_, &k)| k).map(|(&d, _)| d);
            ConvexInstance::new(n, f).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn formula_iff_full_plane(inst in arb_instance()) {
        let n = inst.n();
        let r = skewness(&inst);
        prop_assert_eq!(decide(&inst), r.max_plane == 2 * n - 3);
        prop_assert_eq!(r.formula_applicable, decide(&inst));
        if let Ok(v) = skewness_formula(&inst) {
            prop_assert_eq!(v, r.sk_c);
        }
    }

    #[test]
    fn monotone_in_f(inst in arb_instance(), i in any::<prop::sample::Index>()) {
        let ds = all_diagonals(inst.n());
        let (a, b) = ds[i.index(ds.len())];
        let c = Chord::new(a, b);
        if !inst.is_forbidden_chord(c) {
            prop_assert!(max_noncrossing(&inst.with_chord(c).unwrap()) <= max_noncrossing(&inst));
        }
    }
}
