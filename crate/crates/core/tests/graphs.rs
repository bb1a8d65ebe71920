use proptest::prelude::*;
use unigraph::graphs::{
    canonical_form, canonical_graph, enumerate_graphs, enumerate_trees, find_embedding, is_isomorphic, parse_graph6,
    to_graph6, Mode, SimpleGraph,
};
use unigraph::homomorphism::HostGraph;

fn graph(max: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for v in 1..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max: usize) -> impl Strategy<Value = (SimpleGraph, Vec<usize>)> {
    graph(max).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(12)) {
        let text = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_code_ignores_labels((g, perm) in graph_and_perm(9)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(canonical_graph(&g), canonical_graph(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn complement_changes_the_class_unless_self_complementary(g in graph(7)) {
        let c = g.complement();
        prop_assert_eq!(c.size() + g.size(), g.order() * (g.order() - 1) / 2);
        if is_isomorphic(&g, &c) {
            prop_assert_eq!(g.size(), c.size());
        }
    }

    #[test]
    fn embeddings_found_in_supergraphs(g in graph(6)) {
        // g sits induced inside its union with an extra triangle
        let host = g.disjoint_union(&SimpleGraph::complete(3).unwrap()).unwrap();
        let e = find_embedding(&g, &HostGraph::from_simple(&host), Mode::Induced, 1 << 20).unwrap().unwrap();
        prop_assert!(e.verify(&g, &HostGraph::from_simple(&host)));
    }
}

#[test]
fn enumeration_counts() {
    let graphs = [1, 1, 2, 4, 11, 34, 156];
    for (n, &c) in graphs.iter().enumerate() {
        assert_eq!(enumerate_graphs(n).unwrap().len(), c);
    }
    let trees = [0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    for (n, &c) in trees.iter().enumerate() {
        assert_eq!(enumerate_trees(n).unwrap().len(), c);
    }
}

#[test]
fn enumerated_graphs_are_pairwise_distinct() {
    let mut codes: Vec<Vec<u8>> = enumerate_graphs(6).unwrap().iter().map(|g| canonical_form(g).code).collect();
    let before = codes.len();
    codes.sort();
    codes.dedup();
    assert_eq!(codes.len(), before);
}
