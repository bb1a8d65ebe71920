use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use unigraph::graphs::SimpleGraph;
use unigraph::homomorphism::{
    chromatic_polynomial, count_hom, count_weak_hom, evaluate, w_h, x_h, HostGraph,
};

fn graph(min: usize, max: usize) -> impl Strategy<Value = SimpleGraph> {
    (min..=max).prop_flat_map(|n| {
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

// every map V(g) -> V(h), checked edge by edge
fn brute(g: &SimpleGraph, h: &SimpleGraph, weak: bool) -> u64 {
    let (n, m) = (g.order(), h.order() as u64);
    let mut count = 0;
    for code in 0..m.pow(n as u32) {
        let mut c = code;
        let f: Vec<usize> = (0..n)
            .map(|_| {
                let v = (c % m) as usize;
                c /= m;
                v
            })
            .collect();
        if g.edges().iter().all(|&(u, v)| h.has_edge(f[u], f[v]) || (weak && f[u] == f[v])) {
            count += 1;
        }
    }
    count
}

proptest! {
    #[test]
    fn counts_match_brute_force(g in graph(1, 5), h in graph(1, 5)) {
        let host = HostGraph::from_simple(&h);
        prop_assert_eq!(count_hom(&g, &host).unwrap(), BigUint::from(brute(&g, &h, false)));
        prop_assert_eq!(count_weak_hom(&g, &host).unwrap(), BigUint::from(brute(&g, &h, true)));
    }

    #[test]
    fn generating_polynomials_sum_to_counts(g in graph(1, 4), h in graph(1, 4)) {
        let host = HostGraph::from_simple(&h);
        prop_assert_eq!(x_h(&g, &host).unwrap().total(), BigInt::from(count_hom(&g, &host).unwrap()));
        prop_assert_eq!(w_h(&g, &host).unwrap().total(), BigInt::from(count_weak_hom(&g, &host).unwrap()));
    }

    #[test]
    fn chromatic_polynomial_counts_colourings(g in graph(1, 6)) {
        let chi = chromatic_polynomial(&g).unwrap();
        for n in 0..=6usize {
            let hom = count_hom(&g, &HostGraph::complete(n)).unwrap();
            prop_assert_eq!(evaluate(&chi, &BigInt::from(n)), BigInt::from(hom));
        }
    }

    #[test]
    fn counts_multiply_over_components(a in graph(1, 4), b in graph(1, 4), h in graph(2, 5)) {
        let host = HostGraph::from_simple(&h);
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(
            count_hom(&u, &host).unwrap(),
            count_hom(&a, &host).unwrap() * count_hom(&b, &host).unwrap()
        );
    }
}

#[test]
fn kneser_and_complete_hosts() {
    // proper 3-colourings of C_5
    let c5 = SimpleGraph::cycle(5).unwrap();
    assert_eq!(count_hom(&c5, &HostGraph::complete(3)).unwrap(), BigUint::from(30u32));
    let petersen = HostGraph::kneser(5, 2).unwrap();
    // the Petersen graph against an explicit edge list
    let brute_host = SimpleGraph::from_edges(
        10,
        &(0..10)
            .flat_map(|u| (u + 1..10).map(move |v| (u, v)))
            .filter(|&(u, v)| petersen.adjacent(u, v))
            .collect::<Vec<_>>(),
    )
    .unwrap();
    assert_eq!(count_hom(&c5, &petersen).unwrap(), BigUint::from(brute(&c5, &brute_host, false)));
}
