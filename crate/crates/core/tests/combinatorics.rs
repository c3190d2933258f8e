mod common;

use common::{perm, sc};
use ncpeak_core::algebra::word_pattern;
use ncpeak_core::combinatorics::{
    comp_of_subset, estd_pair, is_enriched_standard, is_standard, mobius_odd, mobius_odd_blockwise,
    mobius_odd_signed_catalan, mobius_partition, odd_of_peak, odiff, peak_of_odd, set_comp, setcomp_odd, std_pair,
    subset_of_comp, Permutation, SetComposition, SetPartition, Subset,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn set_composition(max_n: usize) -> impl Strategy<Value = SetComposition> {
    prop::collection::vec(0u8..8, 1..=max_n).prop_map(|w| word_pattern(&w))
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn relabelled(max_n: usize) -> impl Strategy<Value = (SetComposition, Permutation)> {
    set_composition(max_n).prop_flat_map(|phi| {
        let n = phi.n();
        (Just(phi), Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap()))
    })
}

/// Consecutive blocks of the given sizes: `1,2|3|4,5,6` for `[2, 1, 3]`.
fn consecutive(sizes: &[usize]) -> SetComposition {
    let mut next = 1;
    let blocks = sizes
        .iter()
        .map(|&s| {
            let b: Vec<usize> = (next..next + s).collect();
            next += s;
            b
        })
        .collect();
    SetComposition::new(blocks).unwrap()
}

#[test]
fn comp_of_subset_is_a_bijection() {
    for n in 1..=7 {
        let comps: BTreeSet<_> = Subset::all(n).iter().map(comp_of_subset).collect();
        assert_eq!(comps.len(), 1 << (n - 1));
        for a in Subset::all(n) {
            assert_eq!(subset_of_comp(&comp_of_subset(&a)), a);
            assert_eq!(comp_of_subset(&a).n(), n);
        }
    }
}

#[test]
fn odd_and_peak_sets_correspond() {
    for n in 1..=9 {
        for b in Subset::peak_sets(n) {
            let odd = odd_of_peak(&b).unwrap();
            assert!(odd.is_odd_set(), "Odd({{{b}}}) not odd for n = {n}");
            assert_eq!(peak_of_odd(&odd).unwrap(), b);
        }
        for a in Subset::all(n).into_iter().filter(Subset::is_odd_set) {
            assert_eq!(odd_of_peak(&peak_of_odd(&a).unwrap()).unwrap(), a);
        }
    }
}

#[test]
fn odiff_has_exactly_one_peak_preimage() {
    for n in 1..=9 {
        for a in Subset::all(n).into_iter().filter(|a| (n - a.max_elem()) % 2 == 1) {
            let target = odiff(&a).unwrap();
            let hits = Subset::peak_sets(n).into_iter().filter(|b| odd_of_peak(b).unwrap() == target).count();
            assert_eq!(hits, 1, "A = {{{a}}}, n = {n}");
        }
    }
}

#[test]
fn standard_pairs_biject_onto_set_compositions() {
    for n in 1..=6 {
        let mut seen = BTreeSet::new();
        for sigma in Permutation::all(n) {
            for a in Subset::all(n).into_iter().filter(|a| is_standard(a, &sigma)) {
                let c = set_comp(&a, &sigma).unwrap();
                assert_eq!(c.standard_pair(), (a, sigma.clone()));
                assert!(seen.insert(c));
            }
        }
        assert_eq!(seen.len(), SetComposition::all(n).len());
    }
}

#[test]
fn enriched_standard_pairs_biject_onto_odd_set_compositions() {
    for n in 1..=6 {
        let mut seen = BTreeSet::new();
        for sigma in Permutation::all(n) {
            for b in Subset::peak_sets(n).into_iter().filter(|b| is_enriched_standard(b, &sigma)) {
                let c = setcomp_odd(&b, &sigma).unwrap();
                assert!(c.is_odd());
                assert_eq!(c.enriched_pair().unwrap(), (b, sigma.clone()));
                assert!(seen.insert(c));
            }
        }
        assert_eq!(seen.len(), SetComposition::all_odd(n).len());
    }
}

#[test]
fn std_and_estd_are_idempotent() {
    for n in 1..=5 {
        for sigma in Permutation::all(n) {
            for a in Subset::all(n) {
                let (a1, s1) = std_pair(&a, &sigma).unwrap();
                assert!(is_standard(&a1, &s1));
                assert_eq!(std_pair(&a1, &s1).unwrap(), (a1, s1.clone()));
                assert_eq!(set_comp(&a1, &s1).unwrap(), set_comp(&a, &sigma).unwrap());
            }
            for b in Subset::peak_sets(n) {
                let (b1, s1) = estd_pair(&b, &sigma).unwrap();
                assert!(is_enriched_standard(&b1, &s1));
                assert_eq!(estd_pair(&b1, &s1).unwrap(), (b1, s1.clone()));
                let odd = odd_of_peak(&b).unwrap();
                assert_eq!(setcomp_odd(&b1, &s1).unwrap(), set_comp(&odd, &sigma).unwrap());
            }
        }
    }
}

/// Stated for every odd pair with `n ≤ 7`. The Möbius value depends only on
/// the block sizes of `φ` and which boundaries `ψ` keeps, so consecutive
/// representatives cover every case.
#[test]
fn mobius_odd_matches_signed_catalan_up_to_7() {
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 1..=7 {
        for alpha in ncpeak_core::combinatorics::odd_compositions(n) {
            let phi = consecutive(alpha.parts());
            for psi in phi.coarsenings().into_iter().filter(SetComposition::is_odd) {
                cases += 1;
                let mu = mobius_odd(&psi, &phi).unwrap();
                if mu != mobius_odd_signed_catalan(&psi, &phi).unwrap() {
                    bad.push(format!("μ({psi}, {phi}) = {mu}"));
                }
            }
        }
    }
    assert!(bad.is_empty(), "{} of {cases} pairs disagree, first {}", bad.len(), bad[0]);
}

#[test]
fn mobius_odd_is_a_product_over_blocks() {
    for n in 1..=9 {
        for alpha in ncpeak_core::combinatorics::odd_compositions(n) {
            let phi = consecutive(alpha.parts());
            for psi in phi.coarsenings().into_iter().filter(SetComposition::is_odd) {
                assert_eq!(mobius_odd(&psi, &phi).unwrap(), mobius_odd_blockwise(&psi, &phi).unwrap(), "{psi} ≤ {phi}");
            }
        }
    }
}

#[test]
fn partition_mobius_matches_the_factorial_product() {
    // μ(π, 1̂) over a block of size k is (-1)^{k-1}(k-1)!.
    for n in 1..=5 {
        let top = SetPartition::single_block(n);
        for pi in SetPartition::all(n) {
            let k = pi.len();
            let f: BigInt = (1..k).map(BigInt::from).product();
            let expected = if k % 2 == 1 { f } else { -f };
            let (lo, hi) = if pi.leq(&top) { (&pi, &top) } else { (&top, &pi) };
            assert_eq!(mobius_partition(lo, hi).unwrap(), expected, "{pi}");
        }
    }
}

#[test]
fn odd_merge_is_odd_and_coarser() {
    for n in 1..=6 {
        for phi in SetComposition::all(n) {
            if let Ok(m) = phi.odd_merge() {
                assert!(m.is_odd());
                assert!(m.leq(&phi), "{m} vs {phi}");
            }
        }
    }
    assert_eq!(sc("1|2|3").odd_merge().unwrap(), sc("1|2|3"));
}

proptest! {
    #[test]
    fn set_composition_text_round_trip(phi in set_composition(8)) {
        let s = phi.to_string();
        prop_assert_eq!(s.parse::<SetComposition>().unwrap(), phi);
    }

    #[test]
    fn set_partition_text_round_trip(phi in set_composition(8)) {
        let pi = phi.underlying_partition();
        prop_assert_eq!(pi.to_string().parse::<SetPartition>().unwrap(), pi);
    }

    #[test]
    fn permutation_text_round_trip(sigma in permutation(9)) {
        prop_assert_eq!(sigma.to_string().parse::<Permutation>().unwrap(), sigma);
    }

    #[test]
    fn standard_pair_round_trip(phi in set_composition(8)) {
        let (a, sigma) = phi.standard_pair();
        prop_assert!(is_standard(&a, &sigma));
        prop_assert_eq!(set_comp(&a, &sigma).unwrap(), phi);
    }

    #[test]
    fn meet_refines_and_is_symmetric_as_a_partition(phi in set_composition(7), seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let psi = common::random_set_composition(&mut r, phi.n());
        let m = psi.meet(&phi).unwrap();
        prop_assert!(psi.leq(&m));
        prop_assert_eq!(m.underlying_partition(), phi.meet(&psi).unwrap().underlying_partition());
        prop_assert_eq!(phi.meet(&phi).unwrap(), phi.clone());
    }

    #[test]
    fn coarsenings_are_the_down_set(phi in set_composition(7)) {
        let down = phi.coarsenings();
        prop_assert_eq!(down.len(), 1usize << (phi.len() - 1));
        for psi in &down {
            prop_assert!(psi.leq(&phi));
            prop_assert!(psi.coarsenings().iter().all(|x| x.leq(&phi)));
        }
    }

    #[test]
    fn mobius_odd_is_invariant_under_relabelling((phi, sigma) in relabelled(7)) {
        prop_assume!(phi.is_odd());
        let relabel = |c: &SetComposition| {
            let blocks = c.blocks().iter().map(|b| b.iter().map(|&x| sigma.at(x)).collect()).collect();
            SetComposition::new(blocks).unwrap()
        };
        for psi in phi.coarsenings().into_iter().filter(SetComposition::is_odd) {
            prop_assert_eq!(mobius_odd(&psi, &phi).unwrap(), mobius_odd(&relabel(&psi), &relabel(&phi)).unwrap());
        }
    }
}

#[test]
fn descent_and_peak_sets_of_permutations() {
    let sigma = perm("3,1,4,2,5");
    assert_eq!(sigma.descent_set().elems(), vec![1, 3]);
    assert_eq!(sigma.peak_set().elems(), vec![3]);
    for sigma in Permutation::all(6) {
        assert_eq!(sigma.peak_set().elems(), common::peaks_of(sigma.images()));
        assert_eq!(sigma.descent_set().elems(), common::descents_of(sigma.images()));
    }
}
