//! End-to-end acceptance checks, one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use unigraph::galois::bounds::{lemma54, lemma58, thm52, upper_bs};
use unigraph::galois::{bipartite_embed, even_cycle_embed, odd_cycle_embed, subfield_embedding, EvenTarget, Field};
use unigraph::graphs::{enumerate_graphs, enumerate_trees, spanning_subgraphs, stanley_pair, SimpleGraph};
use unigraph::homomorphism::{chromatic_polynomial, count_hom, hom_profile, w_h, x_h, HostGraph, MonomialPoly};
use unigraph::hypermulti::{canonicalize, enumerate_classes, ClassKey, HyperMultigraph};
use unigraph::indices::{pancyclicity_certificate, subgraph_index, tree_conjecture_scan, SeriesSpec};
use unigraph::symfunc::{
    direct_m_expansion, equals, kneser_slice_expansion, p_to_m, specialize_ones, theorem2_expansion,
    theorem2_expansion_unit_weights,
};

type Outcome = Result<Vec<String>, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_graphs(max: usize) -> Vec<SimpleGraph> {
    (1..=max).flat_map(|n| enumerate_graphs(n).unwrap()).collect()
}

fn class(k: usize, edges: &[&[u64]]) -> HyperMultigraph {
    canonicalize(k, &edges.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn p_key(parts: &[&HyperMultigraph]) -> Vec<ClassKey> {
    let mut key: Vec<ClassKey> = parts.iter().map(|h| h.key().clone()).collect();
    key.sort();
    key
}

// n (n-1)^(m-1), constant term first
fn tree_polynomial(m: usize) -> Vec<BigInt> {
    let mut poly = vec![BigInt::from(0), BigInt::from(1)];
    for _ in 1..m {
        let mut next = vec![BigInt::from(0); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c;
        }
        poly = next;
    }
    poly
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for m in 1..=9 {
        let expected = tree_polynomial(m);
        for t in enumerate_trees(m).unwrap() {
            let got = chromatic_polynomial(&t).unwrap();
            ensure(got == expected, || format!("tree on {m} vertices: {got:?}"))?;
            checked += 1;
        }
    }
    Ok(vec![format!("{checked} trees on 1..=9 vertices")])
}

fn criterion_2() -> Outcome {
    let (g1, g2) = stanley_pair();
    let (a1, b1) = (direct_m_expansion(&g1, 1).unwrap(), direct_m_expansion(&g2, 1).unwrap());
    ensure(a1 == b1, || "k = 1 expansions differ".into())?;
    let (a2, b2) = (direct_m_expansion(&g1, 2).unwrap(), direct_m_expansion(&g2, 2).unwrap());
    let mut keys: Vec<&Vec<ClassKey>> = a2.terms().keys().chain(b2.terms().keys()).collect();
    keys.sort();
    keys.dedup();
    let diff: Vec<&&Vec<ClassKey>> = keys.iter().filter(|k| a2.coefficient(k) != b2.coefficient(k)).collect();
    ensure(!diff.is_empty(), || "k = 2 expansions agree".into())?;
    let k = diff[0];
    let h = HyperMultigraph::from_key(&k[0]);
    // the class of {12,13,34,56,56}
    let named = class(2, &[&[1, 2], &[1, 3], &[3, 4], &[5, 6], &[5, 6]]);
    Ok(vec![
        format!("k = 1: equal, {} monomial classes", a1.len()),
        format!(
            "k = 2: {} differing classes, first {} with coefficients {} vs {}",
            diff.len(),
            h.to_latex(),
            a2.coefficient(k),
            b2.coefficient(k)
        ),
        format!(
            "class {{12,13,34,56,56}}: {} vs {}",
            a2.coefficient_of(&named),
            b2.coefficient_of(&named)
        ),
    ])
}

fn criterion_3() -> Outcome {
    let graphs = small_graphs(5);
    for g in &graphs {
        for k in 1..=2 {
            let t = p_to_m(&theorem2_expansion(g, k).unwrap()).unwrap();
            let d = direct_m_expansion(g, k).unwrap();
            let s = kneser_slice_expansion(g, k, k * g.order()).unwrap();
            ensure(t == d, || format!("spanning sum vs direct differ on {:?}, k = {k}", g.edges()))?;
            ensure(d == s, || format!("direct vs slice differ on {:?}, k = {k}", g.edges()))?;
        }
    }
    Ok(vec![format!("{} graph classes on 1..=5 vertices, k = 1, 2", graphs.len())])
}

fn criterion_4() -> Outcome {
    let e = class(2, &[&[0, 1]]);
    let path2 = class(2, &[&[0, 1], &[1, 2]]);
    let dbl = class(2, &[&[0, 1], &[0, 1]]);
    let p4 = class(2, &[&[0, 1], &[1, 2], &[2, 3]]);
    let star = class(2, &[&[0, 1], &[0, 2], &[0, 3]]);
    let tri = class(2, &[&[0, 1], &[1, 2], &[0, 2]]);
    let triple = class(2, &[&[0, 1], &[0, 1], &[0, 1]]);
    let chain = class(2, &[&[0, 1], &[1, 2], &[1, 2]]);
    let names: Vec<(&str, Vec<ClassKey>)> = vec![
        ("3 disjoint edges", p_key(&[&e, &e, &e])),
        ("2-path + edge", p_key(&[&path2, &e])),
        ("doubled edge + edge", p_key(&[&dbl, &e])),
        ("4-path", p_key(&[&p4])),
        ("3-star", p_key(&[&star])),
        ("triangle", p_key(&[&tri])),
        ("tripled edge", p_key(&[&triple])),
    ];
    let displayed: [(&str, SimpleGraph, [i64; 7]); 2] = [
        ("P_3", SimpleGraph::path(3).unwrap(), [1, -2, -2, 1, 1, 1, 1]),
        ("K_3", SimpleGraph::complete(3).unwrap(), [1, -3, -3, 3, 2, 2, 2]),
    ];
    let mut lines = Vec::new();
    for (name, g, coeffs) in displayed {
        let literal = theorem2_expansion_unit_weights(&g, 2).unwrap();
        let weighted = theorem2_expansion(&g, 2).unwrap();
        let oracle = direct_m_expansion(&g, 2).unwrap();
        for ((label, key), c) in names.iter().zip(coeffs) {
            let got = literal.coefficient(key);
            lines.push(format!(
                "{name} {label}: displayed {c}, unit-weight sum {got} ({}), weighted sum {}",
                if got == BigInt::from(c) { "agrees" } else { "DISAGREES" },
                weighted.coefficient(key)
            ));
            ensure(got == BigInt::from(c), || format!("{name} {label}: displayed {c}, computed {got}"))?;
        }
        let chain_key = p_key(&[&chain]);
        let extra: Vec<&Vec<ClassKey>> =
            literal.terms().keys().filter(|k| !names.iter().any(|(_, n)| n == *k)).collect();
        ensure(extra == vec![&chain_key], || format!("{name}: unexpected extra terms {extra:?}"))?;
        lines.push(format!(
            "{name} chain (edge + doubled edge): not displayed; unit-weight sum {}, weighted sum {}",
            literal.coefficient(&chain_key),
            weighted.coefficient(&chain_key)
        ));
        let literal_ok = equals(&literal, &oracle).unwrap();
        let weighted_ok = equals(&weighted, &oracle).unwrap();
        ensure(weighted_ok, || format!("{name}: weighted sum differs from the direct expansion"))?;
        lines.push(format!(
            "{name}: unit-weight sum {} the direct expansion; weighted sum matches it",
            if literal_ok { "matches" } else { "does NOT match" }
        ));
    }
    Ok(lines)
}

fn criterion_5() -> Outcome {
    let totals: Vec<usize> = (1..=5).map(|n| enumerate_classes(n, 2, false).unwrap().len()).collect();
    let connected: Vec<usize> = (1..=5).map(|n| enumerate_classes(n, 2, true).unwrap().len()).collect();
    ensure(totals == [1, 3, 8, 23, 66], || format!("totals {totals:?}"))?;
    ensure(connected == [1, 2, 5, 12, 33], || format!("connected {connected:?}"))?;
    Ok(vec![format!("totals {totals:?}, connected {connected:?}")])
}

fn criterion_6() -> Outcome {
    let graphs = small_graphs(5);
    for g in &graphs {
        let x = direct_m_expansion(g, 1).unwrap();
        for n in 1..=6u64 {
            let s = specialize_ones(&x, n).unwrap();
            let h = BigInt::from(count_hom(g, &HostGraph::complete(n as usize)).unwrap());
            ensure(s == h, || format!("{:?} at n = {n}: {s} vs {h}", g.edges()))?;
        }
    }
    Ok(vec![format!("{} graphs, n = 1..=6", graphs.len())])
}

fn criterion_7() -> Outcome {
    let graphs = small_graphs(4);
    let mut pairs = 0;
    for g in &graphs {
        for h in &graphs {
            let host = HostGraph::from_simple(h);
            let co = HostGraph::from_simple(&h.complement());
            let mut sum = MonomialPoly::zero(g.order());
            for (subset, gs) in spanning_subgraphs(g).unwrap() {
                let w = w_h(&gs, &co).unwrap();
                sum = if subset.len() % 2 == 0 { sum.add(&w) } else { sum.sub(&w) }.unwrap();
            }
            let x = x_h(g, &host).unwrap();
            ensure(x == sum, || format!("G {:?}, H {:?}", g.edges(), h.edges()))?;
            pairs += 1;
        }
    }
    Ok(vec![format!("{pairs} pairs (G, H) on 1..=4 vertices")])
}

fn criterion_8() -> Outcome {
    let f5 = Field::of_order(5, 1).unwrap();
    let f125 = Field::of_order(5, 3).unwrap();
    let emb = subfield_embedding(&f5, &f125).unwrap();
    let small = HostGraph::paley(Arc::new(f5)).unwrap();
    let big = HostGraph::paley(Arc::new(f125)).unwrap();
    let image: Vec<usize> = emb.image().iter().map(|e| e.0 as usize).collect();
    for a in 0..5 {
        for b in 0..5 {
            if a != b {
                ensure(small.adjacent(a, b) == big.adjacent(image[a], image[b]), || format!("pair {a}, {b}"))?;
            }
        }
    }
    let mut sorted = image.clone();
    sorted.sort();
    sorted.dedup();
    ensure(sorted.len() == 5, || "embedding not injective".into())?;
    Ok(vec!["all 10 pairs of P(5) preserved in P(125)".into()])
}

fn criterion_9() -> Outcome {
    let f5 = Field::of_order(5, 1).unwrap();
    let host = HostGraph::paley(Arc::new(Field::of_order(5, 4).unwrap())).unwrap();
    let bound = lemma54(5).unwrap();
    ensure(bound == BigUint::from(225u32) && 625u32 > 225, || format!("bound {bound}"))?;
    let mut lines = vec![format!("bound {bound} < 625")];
    let found = [
        ("K_{4,4}", bipartite_embed(&f5, &host).unwrap()),
        ("C_8", even_cycle_embed(&f5, &host, EvenTarget::Cycle(8)).unwrap()),
        ("C_6", even_cycle_embed(&f5, &host, EvenTarget::Cycle(6)).unwrap()),
        ("P_7", even_cycle_embed(&f5, &host, EvenTarget::Path(7)).unwrap()),
    ];
    for (name, c) in found {
        let c = c.ok_or_else(|| format!("{name} not found"))?;
        ensure(c.embedding.verify(&c.pattern, &host), || format!("{name} fails verification"))?;
        lines.push(format!("{name}: verified induced copy on {} vertices", c.pattern.order()));
    }
    Ok(lines)
}

fn criterion_10() -> Outcome {
    let f5 = Field::of_order(5, 1).unwrap();
    let host = HostGraph::paley(Arc::new(Field::of_order(5, 8).unwrap())).unwrap();
    let bound = lemma58(5).unwrap();
    let c = odd_cycle_embed(&f5, &host, 4).unwrap().ok_or("C_9 not found")?;
    ensure(c.pattern.order() == 9 && c.embedding.verify(&c.pattern, &host), || "C_9 fails verification".into())?;
    Ok(vec![format!("verified induced C_9 in P(390625); bound {bound}")])
}

fn criterion_11() -> Outcome {
    let mut lines = Vec::new();
    for (p, d) in [(13, 1), (17, 1), (5, 2), (29, 1), (37, 1), (41, 1)] {
        let host = HostGraph::paley(Arc::new(Field::of_order(p, d).unwrap())).unwrap();
        let r = pancyclicity_certificate(&host, 1 << 26).unwrap();
        for (len, c) in &r.cycles {
            let ok = c.len() == *len && (0..*len).all(|i| host.adjacent(c[i], c[(i + 1) % len]));
            ensure(ok, || format!("P({}) length {len} cycle invalid", host.order()))?;
        }
        ensure(r.is_pancyclic(), || format!("P({}): absent {:?}, undecided {:?}", host.order(), r.absent, r.undecided))?;
        lines.push(format!("P({}): lengths 3..={}", host.order(), host.order()));
    }
    let p5 = HostGraph::paley(Arc::new(Field::of_order(5, 1).unwrap())).unwrap();
    let r = pancyclicity_certificate(&p5, 1 << 26).unwrap();
    ensure(r.absent == [3, 4] && r.cycles.contains_key(&5), || format!("P(5): {r:?}"))?;
    lines.push("P(5): lengths 3, 4 refuted, 5 found".into());
    Ok(lines)
}

fn criterion_12() -> Outcome {
    let series = SeriesSpec::Paley { p: 5, m: 0 };
    for k in 3..=25usize {
        // least n with 25^(3^n) >= k
        let mut n = 0;
        let mut order: u128 = 25;
        while order < k as u128 {
            order = order.pow(3);
            n += 1;
        }
        for g in [SimpleGraph::cycle(k).unwrap(), SimpleGraph::path(k).unwrap()] {
            let r = subgraph_index(&g, series, 3, 1 << 26).unwrap();
            ensure(r.level() == Some(n), || format!("k = {k}: {:?}", r.value))?;
            let w = r.witness.as_ref().ok_or_else(|| format!("k = {k}: no witness"))?;
            ensure(w.embedding.verify(&g, &w.host), || format!("k = {k}: bad witness"))?;
        }
    }
    Ok(vec!["C_k and P_k for k = 3..=25: level 0, witnessed in P(25)".into()])
}

fn criterion_13() -> Outcome {
    let (a, b, c) = (thm52(5, 5).unwrap(), lemma54(5).unwrap(), upper_bs(5, 5).unwrap());
    ensure(a == BigInt::from(1), || format!("thm52 {a}"))?;
    ensure(b == BigUint::from(225u32), || format!("lemma54 {b}"))?;
    ensure(c == BigInt::from(0), || format!("upperBS {c}"))?;
    Ok(vec![format!("thm52 = {a}, lemma54 = {b}, upperBS = {c}")])
}

fn criterion_14() -> Outcome {
    let graphs = small_graphs(5);
    let profiles: Vec<_> = graphs.iter().map(|g| hom_profile(g, 5).unwrap()).collect();
    let mut needed = 0;
    let mut escalated = 0;
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            let order = match profiles[i].first_difference(&profiles[j]) {
                Some(_) => {
                    // least host order that separates
                    (1..=5)
                        .find(|&m| {
                            profiles[i]
                                .hosts
                                .iter()
                                .zip(profiles[i].counts.iter().zip(&profiles[j].counts))
                                .any(|(h, (a, b))| h.order() <= m && a != b)
                        })
                        .unwrap()
                }
                None => {
                    escalated += 1;
                    let (a, b) = (hom_profile(&graphs[i], 6).unwrap(), hom_profile(&graphs[j], 6).unwrap());
                    ensure(a.first_difference(&b).is_some(), || format!("pair {i}, {j} collides up to order 6"))?;
                    6
                }
            };
            needed = needed.max(order);
        }
    }
    Ok(vec![format!(
        "{} graphs, all pairs separated; largest host order needed {needed}, escalations {escalated}",
        graphs.len()
    )])
}

fn criterion_15() -> Outcome {
    let scan = tree_conjecture_scan(9).unwrap();
    let per: BTreeMap<usize, usize> = scan.orders.iter().map(|o| (o.order, o.trees)).collect();
    ensure(scan.collisions() == 0, || format!("{} collisions", scan.collisions()))?;
    ensure(per[&9] == 47, || format!("{} trees on 9 vertices", per[&9]))?;
    Ok(vec![format!("0 collisions; trees per order {:?}", per.values().collect::<Vec<_>>())])
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 15] = [
        ("chromatic polynomials of trees", criterion_1),
        ("Stanley pair at k = 1 and k = 2", criterion_2),
        ("three expansions agree", criterion_3),
        ("displayed expansions for P_3 and K_3", criterion_4),
        ("multigraph class counts", criterion_5),
        ("specialisation to chromatic polynomials", criterion_6),
        ("complement expansion of X_H", criterion_7),
        ("P(5) inside P(125)", criterion_8),
        ("constructions in P(625)", criterion_9),
        ("induced C_9 in P(5^8)", criterion_10),
        ("pancyclicity certificates", criterion_11),
        ("subgraph index of cycles and paths", criterion_12),
        ("bound calculators", criterion_13),
        ("homomorphism profiles separate", criterion_14),
        ("tree scan", criterion_15),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(lines) => {
                println!("criterion {:>2} PASS  {name} ({secs:.1}s)", i + 1);
                for l in lines {
                    println!("    {l}");
                }
            }
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s)", i + 1);
                println!("    {msg}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 15 criteria passed");
}
