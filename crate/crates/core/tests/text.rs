use ncpeak_core::algebra::{Basis, Element, Key, KeyKind, LinComb, Rational};
use ncpeak_core::combinatorics::{SetComposition, SetPartition, Subset};
use ncpeak_core::convert::convert;
use ncpeak_core::text::{element_from_json, element_to_json, parse_element, read_element};
use num_bigint::BigInt;
use proptest::prelude::*;

fn keys(basis: Basis, n: usize) -> Vec<Key> {
    let odd = basis.needs_odd_key();
    match basis.key_kind() {
        KeyKind::Comp if odd => SetComposition::all_odd(n).into_iter().map(Key::Comp).collect(),
        KeyKind::Comp => SetComposition::all(n).into_iter().map(Key::Comp).collect(),
        KeyKind::Part if odd => SetPartition::all_odd(n).into_iter().map(Key::Part).collect(),
        KeyKind::Part => SetPartition::all(n).into_iter().map(Key::Part).collect(),
        KeyKind::Sub if odd => Subset::peak_sets(n).into_iter().map(Key::Sub).collect(),
        KeyKind::Sub => Subset::all(n).into_iter().map(Key::Sub).collect(),
    }
}

fn element() -> impl Strategy<Value = Element> {
    (0..Basis::ALL.len(), 1usize..=4, prop::collection::vec((any::<prop::sample::Index>(), -9i64..=9, 1i64..=4), 1..5))
        .prop_map(|(b, n, terms)| {
            let basis = Basis::ALL[b];
            let ks = keys(basis, n);
            let mut lc = LinComb::zero();
            for (i, p, q) in terms {
                lc.add_term(i.get(&ks).clone(), Rational::new(BigInt::from(p), BigInt::from(q)));
            }
            Element::new(basis, n, lc).unwrap()
        })
}

proptest! {
    #[test]
    fn inline_text_round_trips(e in element()) {
        let fallback = Some((e.basis(), e.n()));
        prop_assert_eq!(parse_element(&e.to_string(), fallback).unwrap(), e);
    }

    #[test]
    fn json_round_trips(e in element()) {
        let v = element_to_json(&e);
        prop_assert_eq!(element_from_json(&v).unwrap(), e.clone());
        prop_assert_eq!(read_element(&v.to_string(), None).unwrap(), e);
    }

    #[test]
    fn json_text_is_deterministic(e in element()) {
        let a = serde_json::to_string(&element_to_json(&e)).unwrap();
        let b = serde_json::to_string(&element_to_json(&read_element(&a, None).unwrap())).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn basis_changes_round_trip(e in element()) {
        let hub = match e.basis().key_kind() {
            KeyKind::Sub => Basis::QSymM,
            _ => Basis::M,
        };
        let there = convert(&e, hub).unwrap();
        prop_assert_eq!(convert(&there, e.basis()).unwrap(), e);
    }
}
