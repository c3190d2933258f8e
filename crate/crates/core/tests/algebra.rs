mod common;

use common::sc;
use ncpeak_core::algebra::{
    rank, realize, realize_m, word_pattern, word_product, LinComb, MComb, MTensor, Rational, DEFAULT_CAP,
};
use ncpeak_core::combinatorics::{estd_pair, Permutation, SetComposition, Subset};
use ncpeak_core::ncpeak::{dim_ncpeak, eta_key, eta_odd, eta_to_m, k_key_to_m, to_eta_basis};
use ncpeak_core::ncqsym::{
    coproduct, f_key_to_m, from_f_basis, internal_coproduct, m_to_f, product, tensor_product, to_f_basis,
};
use ncpeak_core::theta::{theta, theta_alternating_sum, theta_alternating_sum_closed, theta_f};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

type Triple = LinComb<(SetComposition, SetComposition, SetComposition)>;

fn set_composition(max_n: usize) -> impl Strategy<Value = SetComposition> {
    prop::collection::vec(0u8..6, 0..=max_n).prop_map(|w| word_pattern(&w))
}

fn combination(n: usize) -> impl Strategy<Value = MComb> {
    let keys = SetComposition::all(n);
    prop::collection::vec(-3i64..=3, keys.len()).prop_map(move |cs| {
        let mut x = MComb::zero();
        for (k, c) in keys.iter().zip(cs) {
            x.add_int(k.clone(), c);
        }
        x
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..50).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

/// `(Δ ⊗ id)Δ` and `(id ⊗ Δ)Δ` for a coproduct-like map.
fn coassociativity(x: &MComb, delta: impl Fn(&MComb) -> MTensor) -> (Triple, Triple) {
    let (mut left, mut right) = (Triple::zero(), Triple::zero());
    for ((a, b), c) in delta(x).iter() {
        for ((a1, a2), d) in delta(&MComb::single(a.clone())).iter() {
            left.add_term((a1.clone(), a2.clone(), b.clone()), c * d);
        }
        for ((b1, b2), d) in delta(&MComb::single(b.clone())).iter() {
            right.add_term((a.clone(), b1.clone(), b2.clone()), c * d);
        }
    }
    (left, right)
}

#[test]
fn f_and_m_are_mutually_inverse_and_unitriangular() {
    for n in 0..=5 {
        for phi in SetComposition::all(n) {
            let f = f_key_to_m(&phi);
            assert_eq!(f.get(&phi), Rational::one());
            assert!(f.keys().all(|psi| psi.len() >= phi.len()));
            assert_eq!(to_f_basis(&f), LinComb::single(phi.clone()));
            assert_eq!(from_f_basis(&m_to_f(&phi)), MComb::single(phi.clone()));
        }
    }
}

#[test]
fn coproducts_are_coassociative_to_degree_4() {
    for n in 0..=4 {
        for phi in SetComposition::all(n) {
            let x = MComb::single(phi.clone());
            let (l, r) = coassociativity(&x, coproduct);
            assert_eq!(l, r, "Δ at {phi}");
            let (l, r) = coassociativity(&x, internal_coproduct);
            assert_eq!(l, r, "Δ° at {phi}");
        }
    }
}

#[test]
fn internal_coproduct_is_multiplicative_to_degree_3() {
    for n1 in 0..=3 {
        for n2 in 0..=3 - n1 {
            for a in SetComposition::all(n1) {
                for b in SetComposition::all(n2) {
                    let (x, y) = (MComb::single(a.clone()), MComb::single(b.clone()));
                    let lhs = internal_coproduct(&product(&x, &y));
                    let rhs = tensor_product(&internal_coproduct(&x), &internal_coproduct(&y));
                    assert_eq!(lhs, rhs, "{a} · {b}");
                }
            }
        }
    }
}

#[test]
fn peak_subspace_is_closed_under_product_and_coproduct() {
    let k = |n: usize| -> Vec<MComb> { SetComposition::all_odd(n).iter().map(|p| k_key_to_m(p).unwrap()).collect() };
    for n1 in 1..=4 {
        for n2 in 1..=5 - n1 {
            for x in k(n1) {
                for y in k(n2) {
                    assert!(to_eta_basis(&product(&x, &y)).is_ok());
                }
            }
        }
    }
    for n in 1..=4 {
        for x in k(n) {
            for ((a, b), _) in coproduct(&x).iter() {
                // Each leg of Δ(K) is itself a K element of lower degree, so
                // grouping by the left key leaves right factors in the peak space.
                let right: MComb = coproduct(&x)
                    .iter()
                    .filter(|((l, _), _)| l == a)
                    .map(|((_, r), c)| MComb::term(r.clone(), c.clone()))
                    .fold(MComb::zero(), |acc, t| acc.add(&t));
                assert!(to_eta_basis(&right).is_ok(), "right leg at {a} ⊗ {b}");
                let left: MComb = coproduct(&x)
                    .iter()
                    .filter(|((_, r), _)| r == b)
                    .map(|((l, _), c)| MComb::term(l.clone(), c.clone()))
                    .fold(MComb::zero(), |acc, t| acc.add(&t));
                assert!(to_eta_basis(&left).is_ok(), "left leg at {a} ⊗ {b}");
            }
        }
    }
}

#[test]
fn eta_depends_only_on_the_enriched_standardization() {
    for n in 1..=4 {
        for sigma in Permutation::all(n) {
            for b in Subset::peak_sets(n) {
                let direct = eta_to_m(&b, &sigma).unwrap();
                let (b1, s1) = estd_pair(&b, &sigma).unwrap();
                assert_eq!(direct, eta_to_m(&b1, &s1).unwrap());
                assert_eq!(direct, eta_odd(&eta_key(&b, &sigma).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn theta_is_onto_the_peak_space() {
    for n in 1..=5 {
        let images: Vec<MComb> = SetComposition::all(n)
            .iter()
            .map(|phi| {
                let (a, sigma) = phi.standard_pair();
                theta_f(&a, &sigma).unwrap()
            })
            .collect();
        assert_eq!(rank(&images), dim_ncpeak(n), "n = {n}");
    }
}

#[test]
fn theta_has_dyadic_eta_coefficients() {
    for n in 1..=5 {
        for phi in SetComposition::all(n) {
            let eta = to_eta_basis(&theta(&MComb::single(phi.clone()))).unwrap();
            for (_, c) in eta.iter() {
                let d = c.denom();
                assert!((d & (d - BigInt::one())).is_zero(), "Θ(M_{phi}) has coefficient {c}");
            }
        }
    }
}

#[test]
fn alternating_sum_of_theta_f_collapses_to_one_eta() {
    for n in 1..=5 {
        for sigma in Permutation::all(n) {
            for a in Subset::all(n) {
                assert_eq!(
                    theta_alternating_sum(&a, &sigma).unwrap(),
                    theta_alternating_sum_closed(&a, &sigma).unwrap(),
                    "A = {{{a}}}, σ = {sigma}"
                );
            }
        }
    }
}

#[test]
fn realization_words_have_the_right_pattern() {
    for n in 0..=4 {
        for phi in SetComposition::all(n) {
            for m in n..=n + 1 {
                for (w, _) in realize_m(&phi, m).terms().iter() {
                    assert_eq!(word_pattern(w), phi);
                }
            }
        }
    }
    assert_eq!(realize_m(&sc("1,3|2"), 3).terms().len(), 3);
}

proptest! {
    #[test]
    fn exact_arithmetic_cancels(a in rational(), b in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) - b, a);
    }

    #[test]
    fn realization_is_injective(n in 1usize..=4, seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let x = {
            use rand::Rng;
            let mut x = MComb::zero();
            for phi in SetComposition::all(n) {
                x.add_int(phi, rng.gen_range(-2..=2));
            }
            x
        };
        let w = realize(&x, n, n, DEFAULT_CAP).unwrap();
        prop_assert_eq!(w.is_zero(), x.is_zero());
    }

    #[test]
    fn realization_of_a_product_is_the_word_product(a in set_composition(3), b in set_composition(2)) {
        let m = a.n() + b.n();
        let lhs = realize(&product(&MComb::single(a.clone()), &MComb::single(b.clone())), m, m, DEFAULT_CAP).unwrap();
        let rhs = word_product(&realize_m(&a, m), &realize_m(&b, m)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn f_round_trip_on_combinations(x in combination(3)) {
        prop_assert_eq!(from_f_basis(&to_f_basis(&x)), x);
    }
}
