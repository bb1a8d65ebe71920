use num_bigint::BigInt;
use proptest::prelude::*;
use unigraph::graphs::{spanning_subgraphs, SimpleGraph};
use unigraph::homomorphism::{count_hom, HostGraph};
use unigraph::hypermulti::{admissible_set, admits, enumerate_classes, HyperMultigraph};
use unigraph::symfunc::{
    chromatic_symmetric_function, direct_m_expansion, equals, m_mul, p_to_m, specialize_ones, theorem2_expansion,
    SymFunc,
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

fn classes_k2(max_edges: usize) -> Vec<HyperMultigraph> {
    (1..=max_edges).flat_map(|n| enumerate_classes(n, 2, false).unwrap()).collect()
}

/// `mu` arises from `lambda` by identifying points: some surjection of
/// points maps the hyperedge multiset of `lambda` onto that of `mu`.
fn is_quotient(mu: &HyperMultigraph, lambda: &HyperMultigraph) -> bool {
    let (m, l) = (mu.vertex_count(), lambda.vertex_count());
    if mu.edge_count() != lambda.edge_count() || m > l {
        return false;
    }
    let mut target: Vec<u64> = mu.edge_masks().to_vec();
    target.sort();
    let mut f = vec![0usize; l];
    loop {
        let image: Option<Vec<u64>> = lambda
            .edge_masks()
            .iter()
            .map(|&e| {
                let mask = (0..l).filter(|&p| e >> p & 1 == 1).fold(0u64, |a, p| a | 1 << f[p]);
                (mask.count_ones() == e.count_ones()).then_some(mask)
            })
            .collect();
        if let Some(mut image) = image {
            image.sort();
            if image == target {
                return true;
            }
        }
        let mut i = 0;
        while i < l {
            f[i] += 1;
            if f[i] < m {
                break;
            }
            f[i] = 0;
            i += 1;
        }
        if i == l {
            return false;
        }
    }
}

#[test]
fn power_sums_are_triangular() {
    for lambda in classes_k2(4) {
        let m = p_to_m(&SymFunc::power_sum(&lambda)).unwrap();
        assert!(m.coefficient_of(&lambda) >= BigInt::from(1));
        for key in m.terms().keys() {
            let mu = HyperMultigraph::from_key(&key[0]);
            assert!(is_quotient(&mu, &lambda), "{} is not a quotient of {}", mu.to_latex(), lambda.to_latex());
        }
    }
}

#[test]
fn products_commute() {
    let classes = classes_k2(2);
    for a in &classes {
        for b in &classes {
            let (ma, mb) = (SymFunc::monomial(a), SymFunc::monomial(b));
            assert_eq!(m_mul(&ma, &mb).unwrap(), m_mul(&mb, &ma).unwrap());
        }
    }
}

#[test]
fn products_associate() {
    let classes = classes_k2(1).into_iter().chain(classes_k2(2)).collect::<Vec<_>>();
    for a in &classes {
        for b in &classes {
            for c in classes.iter().take(3) {
                let (ma, mb, mc) = (SymFunc::monomial(a), SymFunc::monomial(b), SymFunc::monomial(c));
                let left = m_mul(&m_mul(&ma, &mb).unwrap(), &mc).unwrap();
                let right = m_mul(&ma, &m_mul(&mb, &mc).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn multiplicative_over_components(a in graph(1, 3), b in graph(1, 3), k in 1usize..=2) {
        let u = a.disjoint_union(&b).unwrap();
        let prod = m_mul(&direct_m_expansion(&a, k).unwrap(), &direct_m_expansion(&b, k).unwrap()).unwrap();
        prop_assert_eq!(direct_m_expansion(&u, k).unwrap(), prod);
    }

    #[test]
    fn k1_is_the_chromatic_symmetric_function(g in graph(1, 5)) {
        let x = direct_m_expansion(&g, 1).unwrap();
        prop_assert!(equals(&x, &chromatic_symmetric_function(&g).unwrap()).unwrap());
        for n in 1..=6u64 {
            let hom = count_hom(&g, &HostGraph::complete(n as usize)).unwrap();
            prop_assert_eq!(specialize_ones(&x, n).unwrap(), BigInt::from(hom));
        }
    }

    #[test]
    fn spanning_sum_matches_direct(g in graph(1, 4), k in 1usize..=2) {
        let t = theorem2_expansion(&g, k).unwrap();
        prop_assert!(equals(&t, &direct_m_expansion(&g, k).unwrap()).unwrap());
    }

    #[test]
    fn admissible_sets_shrink_with_more_edges(g in graph(1, 4)) {
        prop_assume!(g.is_connected());
        let classes = admissible_set(&g, 2).unwrap();
        for h in &classes {
            prop_assert_eq!(h.edge_count(), g.order());
            for (_, gs) in spanning_subgraphs(&g).unwrap() {
                prop_assert!(admits(&gs, h));
            }
        }
    }
}
