//! Property tests over random permutations, plus the seeded randomized
//! oracle-agreement sweep for sizes past the exhaustive range.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use descentkit::growth::{evacuate, GrowthDiagram};
use descentkit::oracle::brute_profile;
use descentkit::perm::{DescentSet, Permutation};
use descentkit::rsk::rsk;
use descentkit::stats::{lds_slice, lis_slice, ls_set, StatTriangle};

fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|entries| Permutation::new(entries).unwrap())
}

fn quadratic_lis(entries: &[usize]) -> usize {
    let mut best = vec![0usize; entries.len()];
    let mut overall = 0;
    for i in 0..entries.len() {
        best[i] = 1;
        for j in 0..i {
            if entries[j] < entries[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
        overall = overall.max(best[i]);
    }
    overall
}

proptest! {
    #[test]
    fn reverse_complement_is_an_involution(p in arb_perm(40)) {
        prop_assert_eq!(p.reverse_complement().reverse_complement(), p);
    }

    #[test]
    fn display_parse_roundtrip(p in arb_perm(40)) {
        let parsed: Permutation = p.to_string().parse().unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn patience_lengths_match_quadratic_dp(p in arb_perm(60)) {
        prop_assert_eq!(lis_slice(p.entries()), quadratic_lis(p.entries()));
        let reversed: Vec<usize> = p.entries().iter().rev().copied().collect();
        prop_assert_eq!(lds_slice(p.entries()), quadratic_lis(&reversed));
    }

    #[test]
    fn recording_chain_roundtrips(p in arb_perm(25)) {
        let q = rsk(&p).recording;
        prop_assert_eq!(q.chain_encode().decode(), q);
    }

    #[test]
    fn evacuation_is_an_involution(p in arb_perm(18)) {
        let q = rsk(&p).recording;
        let e = evacuate(&q);
        prop_assert_eq!(e.shape(), q.shape());
        prop_assert_eq!(evacuate(&e), q);
    }

    #[test]
    fn growth_local_rule_holds(p in arb_perm(15)) {
        prop_assert!(GrowthDiagram::from_permutation(&p).audit_local_rule().is_none());
    }

    #[test]
    fn triangle_is_componentwise_monotone(p in arb_perm(15)) {
        let t = StatTriangle::of(&p);
        let n = t.n();
        for i in 1..=n {
            prop_assert_eq!(t.get(i, i), (1, 1));
            for j in i..n {
                let (a, b) = t.get(i, j);
                let (a2, b2) = t.get(i, j + 1);
                prop_assert!(a2 >= a && b2 >= b);
            }
        }
        for i in 2..=n {
            for j in i..=n {
                let (a, b) = t.get(i, j);
                let (a2, b2) = t.get(i - 1, j);
                prop_assert!(a2 >= a && b2 >= b);
            }
        }
    }

    #[test]
    fn profile_values_are_within_range(p in arb_perm(10)) {
        let n = p.n();
        let profile = descentkit::stats::ls_profile(&p);
        prop_assert!(profile[0] >= 1);
        for (mask, &v) in profile.iter().enumerate() {
            prop_assert!(v <= n);
            let set = DescentSet::from_mask(mask as u64);
            if v != 0 {
                if let Some(m) = set.max() {
                    prop_assert!(v >= m + 1);
                }
            }
        }
    }
}

/// Oracle agreement past the exhaustive range: 1000 seeded random
/// permutations per size in 8..=10, 50 random descent sets each.
#[test]
fn randomized_oracle_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 8..=10usize {
        for _ in 0..1000 {
            let mut entries: Vec<usize> = (1..=n).collect();
            entries.shuffle(&mut rng);
            let p = Permutation::new(entries).unwrap();
            let profile = brute_profile(&p).unwrap();
            let triangle = StatTriangle::of(&p);
            for _ in 0..50 {
                let mask = rng.random_range(0..1u64 << (n - 1));
                let set = DescentSet::from_mask(mask);
                assert_eq!(
                    descentkit::stats::ls_set_from_triangle(&triangle, &set),
                    profile.ls_set_mask(mask),
                    "mismatch at {p} D={set}"
                );
            }
            let _ = ls_set(&p, &DescentSet::empty());
        }
    }
}
