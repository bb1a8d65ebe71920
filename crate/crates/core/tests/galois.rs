use proptest::prelude::*;
use std::sync::Arc;
use unigraph::galois::{paley_graph, find_irreducible, Field, FieldElement};
use unigraph::homomorphism::HostGraph;

fn field_and_elements() -> impl Strategy<Value = (u64, u32, u64, u64, u64)> {
    prop_oneof![Just((3u64, 3u32)), Just((5, 2)), Just((7, 2)), Just((3, 4)), Just((13, 1))]
        .prop_flat_map(|(p, d)| {
            let q = p.pow(d);
            (Just(p), Just(d), 0..q, 0..q, 0..q)
        })
}

proptest! {
    #[test]
    fn field_axioms((p, d, a, b, c) in field_and_elements()) {
        let f = Field::of_order(p, d).unwrap();
        let (a, b, c) = (f.element(a).unwrap(), f.element(b).unwrap(), f.element(c).unwrap());
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if a != f.zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.pow(a, (f.order() - 1) as u128), f.one());
        } else {
            prop_assert!(f.inv(a).is_err());
        }
    }
}

#[test]
fn paley_graphs_are_strongly_regular() {
    for (p, d) in [(5u64, 1u32), (13, 1), (3, 2), (5, 2), (17, 1)] {
        let host = paley_graph(find_irreducible(p, d).unwrap()).unwrap();
        let q = host.order();
        let k = (q - 1) / 2;
        for u in 0..q {
            assert_eq!(host.degree(u), k);
        }
        // adjacent pairs share (q-5)/4 neighbours, non-adjacent pairs (q-1)/4
        for v in 1..q {
            let common = (0..q).filter(|&w| host.adjacent(0, w) && host.adjacent(v, w)).count();
            let want = if host.adjacent(0, v) { (q - 5) / 4 } else { (q - 1) / 4 };
            assert_eq!(common, want);
        }
    }
}

#[test]
fn primitive_elements_generate() {
    let f = Field::of_order(3, 4).unwrap();
    let g = f.primitive_element();
    let mut seen = std::collections::HashSet::new();
    let mut x = f.one();
    for _ in 0..f.order() - 1 {
        seen.insert(x);
        x = f.mul(x, g);
    }
    assert_eq!(seen.len() as u64, f.order() - 1);
    assert!(!seen.contains(&FieldElement(0)));
    let host = HostGraph::paley(Arc::new(f)).unwrap();
    assert_eq!(host.order(), 81);
}
