//! Three independent routes to `X_{K_{N,k}}(G)`: the alternating sum over
//! spanning subgraphs of admissible power sums, direct counting of proper
//! hyperedge assignments per monomial class, and brute force over a finite
//! Kneser slice.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use super::{Basis, SymFunc};
use crate::error::{Error, Result};
use crate::graphs::{canonical_form, spanning_subgraphs, BitIter, SimpleGraph};
use crate::homomorphism::{HostGraph, HostKind};
use crate::hypermulti::{
    admissible_set, assignments, falling, from_masks, ClassKey, HyperMultigraph, Relation, MAX_ADMISSIBLE_ORDER,
    MAX_UNIFORMITY,
};

/// Edge cap for the spanning-subgraph sum (it has `2^|E|` terms).
pub const MAX_EXPANSION_EDGES: usize = 10;

/// Raw map count `C(n,k)^|V|` accepted by the Kneser brute force.
pub const MAX_KNESER_MAPS: u64 = 1 << 31;

/// Image multisets `C(C(n,k) + |V| - 1, |V|)` accepted by the Kneser brute
/// force, which keeps one counter per multiset.
pub const MAX_KNESER_MULTISETS: u64 = 1 << 22;

fn check_pattern(g: &SimpleGraph, k: usize) -> Result<()> {
    if k == 0 || k > MAX_UNIFORMITY {
        return Err(Error::capacity("uniformity", k, MAX_UNIFORMITY as u64));
    }
    if g.order() > MAX_ADMISSIBLE_ORDER {
        return Err(Error::capacity("pattern order", g.order(), MAX_ADMISSIBLE_ORDER as u64));
    }
    Ok(())
}

/// `sum_S (-1)^|S| W(G_S)` over edge subsets `S`, where `W(G_S)` sums the
/// power sums of the admissible classes of `G_S` (products over components),
/// each weighted by its number of witnessing bijections. These weights are
/// the multiplicities with which weak homomorphisms into the intersection
/// graph hit each monomial; with them the sum equals `X_{K_{N,k}}(G)`.
pub fn theorem2_expansion(g: &SimpleGraph, k: usize) -> Result<SymFunc> {
    spanning_sum(g, k, true)
}

/// The same alternating sum with every admissible class counted once. This
/// agrees with [`theorem2_expansion`] for `k = 1` but in general not for
/// `k >= 2`, where a class may be admitted by several bijections.
pub fn theorem2_expansion_unit_weights(g: &SimpleGraph, k: usize) -> Result<SymFunc> {
    spanning_sum(g, k, false)
}

fn spanning_sum(g: &SimpleGraph, k: usize, weighted: bool) -> Result<SymFunc> {
    check_pattern(g, k)?;
    let edges = g.edges();
    if edges.len() > MAX_EXPANSION_EDGES {
        return Err(Error::capacity("edge count for the spanning-subgraph sum", edges.len(), MAX_EXPANSION_EDGES as u64));
    }
    // component classes of every spanning subgraph
    let mut reps: BTreeMap<Vec<u8>, SimpleGraph> = BTreeMap::new();
    let mut spanning: Vec<(bool, Vec<Vec<u8>>)> = Vec::with_capacity(1 << edges.len());
    for (subset, gs) in spanning_subgraphs(g)? {
        let mut codes = Vec::new();
        for c in gs.connected_components() {
            let code = canonical_form(&c).code;
            reps.entry(code.clone()).or_insert(c);
            codes.push(code);
        }
        spanning.push((subset.len() % 2 == 1, codes));
    }
    let admissible: HashMap<Vec<u8>, Vec<(ClassKey, BigInt)>> = reps
        .into_par_iter()
        .map(|(code, c)| {
            let set = admissible_set(&c, k)?;
            let weighted = set
                .into_iter()
                .map(|h| {
                    let w = if weighted { maps_onto(&c, h.key(), Relation::Intersect) } else { 1 };
                    (h.key().clone(), BigInt::from(w))
                })
                .collect();
            Ok((code, weighted))
        })
        .collect::<Result<_>>()?;

    let total = spanning
        .par_iter()
        .map(|(odd, codes)| {
            let mut part = SymFunc::zero(k, Basis::P);
            let sign = if *odd { -BigInt::one() } else { BigInt::one() };
            let sets: Vec<&Vec<(ClassKey, BigInt)>> = codes.iter().map(|c| &admissible[c]).collect();
            let mut pick = vec![0usize; sets.len()];
            loop {
                let mut coeff = sign.clone();
                let mut key = Vec::with_capacity(sets.len());
                for (s, &i) in sets.iter().zip(&pick) {
                    key.push(s[i].0.clone());
                    coeff *= &s[i].1;
                }
                key.sort();
                part.add_term(key, coeff);
                // odometer over the product of component sets
                let mut i = 0;
                while i < sets.len() {
                    pick[i] += 1;
                    if pick[i] < sets[i].len() {
                        break;
                    }
                    pick[i] = 0;
                    i += 1;
                }
                if i == sets.len() {
                    break;
                }
            }
            part
        })
        .reduce(|| SymFunc::zero(k, Basis::P), |a, b| a.add(&b).expect("same k and basis"));
    Ok(total)
}

/// Edge cap for [`chromatic_symmetric_function`].
pub const MAX_STANLEY_EDGES: usize = 24;

/// The chromatic symmetric function (`k = 1`) in the power-sum basis, as
/// the sum over edge subsets `S` of `(-1)^|S| p_{component sizes of G_S}`.
/// Unlike [`theorem2_expansion`] this needs no admissible-set search, so it
/// reaches larger patterns.
pub fn chromatic_symmetric_function(g: &SimpleGraph) -> Result<SymFunc> {
    let edges = g.edges();
    if edges.len() > MAX_STANLEY_EDGES {
        return Err(Error::capacity("edge count for the chromatic symmetric function", edges.len(), MAX_STANLEY_EDGES as u64));
    }
    let n = g.order();
    let sums: HashMap<Vec<usize>, i64> = (0u64..1 << edges.len())
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Vec<usize>, i64>, s| {
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while p[r] != r {
                    r = p[r];
                }
                let mut y = x;
                while p[y] != r {
                    let next = p[y];
                    p[y] = r;
                    y = next;
                }
                r
            }
            for i in BitIter(s) {
                let (a, b) = (find(&mut parent, edges[i].0), find(&mut parent, edges[i].1));
                parent[a] = b;
            }
            let mut sizes = vec![0usize; n];
            for v in 0..n {
                let r = find(&mut parent, v);
                sizes[r] += 1;
            }
            let mut parts: Vec<usize> = sizes.into_iter().filter(|&c| c > 0).collect();
            parts.sort_unstable();
            *acc.entry(parts).or_default() += if s.count_ones() % 2 == 1 { -1 } else { 1 };
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    let mut part_key: HashMap<usize, ClassKey> = HashMap::new();
    let mut out = SymFunc::zero(1, Basis::P);
    for (parts, c) in sums {
        let mut key = Vec::with_capacity(parts.len());
        for r in parts {
            if let std::collections::hash_map::Entry::Vacant(e) = part_key.entry(r) {
                e.insert(from_masks(1, &vec![1; r])?.key().clone());
            }
            key.push(part_key[&r].clone());
        }
        key.sort();
        out.add_term(key, BigInt::from(c));
    }
    Ok(out)
}

/// Coefficient of `m_lambda` = number of maps from `V(g)` onto the hyperedge
/// multiset of a representative of `lambda` (each hyperedge hit as often as
/// it occurs) sending adjacent vertices to disjoint hyperedges.
pub fn direct_m_expansion(g: &SimpleGraph, k: usize) -> Result<SymFunc> {
    check_pattern(g, k)?;
    let mut classes: BTreeSet<ClassKey> = BTreeSet::new();
    let mut memo: HashSet<Vec<u64>> = HashSet::new();
    let mut err = None;
    assignments(g, k, Relation::Disjoint, &mut |sets| {
        let mut sorted = sets.to_vec();
        sorted.sort_unstable();
        if !memo.insert(sorted) {
            return;
        }
        match from_masks(k, sets) {
            Ok(h) => {
                classes.insert(h.key().clone());
            }
            Err(e) => err = Some(e),
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    let counts: Vec<(ClassKey, u64)> = classes
        .into_par_iter()
        .map(|key| {
            let c = maps_onto(g, &key, Relation::Disjoint);
            (key, c)
        })
        .collect();
    let mut out = SymFunc::zero(k, Basis::M);
    for (key, c) in counts {
        let term = if key.is_empty() { vec![] } else { vec![key] };
        out.add_term(term, BigInt::from(c));
    }
    Ok(out)
}

/// Maps from `V(g)` onto the hyperedge multiset of `key`, each hyperedge hit
/// as often as it occurs, with `rel` holding across every edge of `g`.
fn maps_onto(g: &SimpleGraph, key: &ClassKey, rel: Relation) -> u64 {
    let mut distinct: Vec<(u64, usize)> = Vec::new();
    for e in key.edge_masks() {
        match distinct.last_mut() {
            Some((d, r)) if *d == e => *r += 1,
            _ => distinct.push((e, 1)),
        }
    }
    let mut left: Vec<usize> = distinct.iter().map(|&(_, r)| r).collect();
    let mut image = vec![0u64; g.order()];
    count_onto(g, rel, 0, &distinct, &mut left, &mut image)
}

fn count_onto(
    g: &SimpleGraph,
    rel: Relation,
    v: usize,
    distinct: &[(u64, usize)],
    left: &mut [usize],
    image: &mut [u64],
) -> u64 {
    if v == image.len() {
        return 1;
    }
    let earlier = g.row(v) & ((1u64 << v) - 1);
    let mut total = 0;
    for (i, &(e, _)) in distinct.iter().enumerate() {
        let clash = |u: usize| match rel {
            Relation::Disjoint => image[u] & e != 0,
            Relation::Intersect => image[u] & e == 0,
        };
        if left[i] == 0 || BitIter(earlier).any(clash) {
            continue;
        }
        left[i] -= 1;
        image[v] = e;
        total += count_onto(g, rel, v + 1, distinct, left, image);
        left[i] += 1;
    }
    total
}

fn binomial(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `X_{K_{n,k}}(g)` by brute force over all maps from `V(g)` to the
/// `k`-subsets of `{1..n}` that send adjacent vertices to disjoint subsets,
/// with monomials grouped by class. Fails with an internal error if two
/// monomials of one class get different coefficients, or if a class with a
/// nonzero coefficient is not fully covered; neither can happen when
/// `n >= k |V(g)|`.
pub fn kneser_slice_expansion(g: &SimpleGraph, k: usize, n: usize) -> Result<SymFunc> {
    check_pattern(g, k)?;
    let v = g.order();
    let host = HostGraph::kneser(n, k)?;
    let subsets: Vec<u64> = match host.kind() {
        HostKind::KneserSlice { subsets, .. } => subsets.clone(),
        _ => unreachable!("kneser constructor"),
    };
    let s = subsets.len() as u64;
    let maps = (s as u128).checked_pow(v as u32).unwrap_or(u128::MAX);
    if maps > MAX_KNESER_MAPS as u128 {
        return Err(Error::capacity("maps into the Kneser slice", u64::try_from(maps).unwrap_or(u64::MAX), MAX_KNESER_MAPS));
    }
    if v == 0 {
        return Ok(SymFunc::one(k, Basis::M));
    }
    let total = binomial(s + v as u64 - 1, v as u64);
    if total > MAX_KNESER_MULTISETS as u128 {
        return Err(Error::capacity("image multisets", u64::try_from(total).unwrap_or(u64::MAX), MAX_KNESER_MULTISETS));
    }
    let total = total as usize;
    // binom[i][x] = C(x, i + 1) for the colex rank of a sorted multiset
    let binom: Vec<Vec<u64>> = (0..v)
        .map(|i| (0..s + v as u64).map(|x| binomial(x, i as u64 + 1) as u64).collect())
        .collect();
    let rank = |sorted: &[u32]| -> usize {
        sorted
            .iter()
            .enumerate()
            .map(|(i, &a)| binom[i][a as usize + i] as usize)
            .sum()
    };

    let threads = rayon::current_num_threads().max(1);
    let chunk = (s as usize).div_ceil(threads);
    let counts: Vec<u32> = (0..s as usize)
        .collect::<Vec<_>>()
        .par_chunks(chunk.max(1))
        .map(|firsts| {
            let mut acc = vec![0u32; total];
            let mut image = vec![0u32; v];
            let mut sorted = vec![0u32; v];
            for &f in firsts {
                image[0] = f as u32;
                brute(g, &subsets, 1, &mut image, &mut sorted, &mut acc, &rank);
            }
            acc
        })
        .reduce(
            || vec![0u32; total],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );

    // group monomials by class
    let mut normal: HashMap<Vec<u64>, ClassKey> = HashMap::new();
    let mut by_class: BTreeMap<ClassKey, (u32, u64)> = BTreeMap::new();
    let mut tuple = vec![0u32; v];
    let mut failure: Option<Error> = None;
    for_each_multiset(s as u32, &mut tuple, 0, 0, &mut |t| {
        if failure.is_some() {
            return;
        }
        let c = counts[rank(t)];
        if c == 0 {
            return;
        }
        let masks: Vec<u64> = t.iter().map(|&i| subsets[i as usize]).collect();
        let key = match normal.get(&first_appearance(&masks)) {
            Some(key) => key.clone(),
            None => match from_masks(k, &masks) {
                Ok(h) => {
                    normal.insert(first_appearance(&masks), h.key().clone());
                    h.key().clone()
                }
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            },
        };
        let slot = by_class.entry(key.clone()).or_insert((c, 0));
        if slot.0 != c {
            failure = Some(Error::Internal(format!(
                "monomials of class {key:?} have coefficients {} and {c}",
                slot.0
            )));
        }
        slot.1 += 1;
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let mut out = SymFunc::zero(k, Basis::M);
    for (key, (c, members)) in by_class {
        let h = HyperMultigraph::from_key(&key);
        let expected: BigUint = falling(n as u64, h.vertex_count()) / h.aut_order();
        if expected.to_u64() != Some(members) {
            return Err(Error::Internal(format!(
                "class {key:?} covered by {members} of its {expected} monomials on {n} points"
            )));
        }
        out.add_term(vec![key], BigInt::from(c));
    }
    Ok(out)
}

fn brute(
    g: &SimpleGraph,
    subsets: &[u64],
    pos: usize,
    image: &mut [u32],
    sorted: &mut [u32],
    acc: &mut [u32],
    rank: &dyn Fn(&[u32]) -> usize,
) {
    if pos == image.len() {
        sorted.copy_from_slice(image);
        sorted.sort_unstable();
        acc[rank(sorted)] += 1;
        return;
    }
    let earlier = g.row(pos) & ((1u64 << pos) - 1);
    for (i, &set) in subsets.iter().enumerate() {
        if BitIter(earlier).all(|u| subsets[image[u] as usize] & set == 0) {
            image[pos] = i as u32;
            brute(g, subsets, pos + 1, image, sorted, acc, rank);
        }
    }
}

/// Nondecreasing tuples over `0..s`.
fn for_each_multiset(s: u32, tuple: &mut [u32], pos: usize, from: u32, f: &mut dyn FnMut(&[u32])) {
    if pos == tuple.len() {
        f(tuple);
        return;
    }
    for x in from..s {
        tuple[pos] = x;
        for_each_multiset(s, tuple, pos + 1, x, f);
    }
}

/// Relabels points in order of first appearance, a cheap memo key for
/// canonicalisation.
fn first_appearance(masks: &[u64]) -> Vec<u64> {
    let mut map = [u8::MAX; 64];
    let mut next = 0u8;
    masks
        .iter()
        .map(|&m| {
            BitIter(m).fold(0u64, |acc, p| {
                if map[p] == u8::MAX {
                    map[p] = next;
                    next += 1;
                }
                acc | 1 << map[p]
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypermulti::canonicalize;
    use crate::symfunc::p_to_m;

    fn class(k: usize, edges: &[&[u64]]) -> HyperMultigraph {
        canonicalize(k, &edges.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn single_edge_patterns() {
        let k2 = SimpleGraph::complete(2).unwrap();
        let t = theorem2_expansion(&k2, 1).unwrap();
        assert_eq!(t.coefficient_of(&class(1, &[&[0], &[1]])), BigInt::from(1));
        assert_eq!(t.coefficient_of(&class(1, &[&[0], &[0]])), BigInt::from(-1));
        assert_eq!(t.len(), 2);

        let d = direct_m_expansion(&k2, 2).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.coefficient_of(&class(2, &[&[0, 1], &[2, 3]])), BigInt::from(2));
        assert_eq!(kneser_slice_expansion(&k2, 2, 4).unwrap(), d);

        let d1 = direct_m_expansion(&k2, 1).unwrap();
        assert_eq!(d1.len(), 1);
        assert_eq!(d1.coefficient_of(&class(1, &[&[0], &[1]])), BigInt::from(2));

        let e2 = direct_m_expansion(&SimpleGraph::empty(2).unwrap(), 1).unwrap();
        assert_eq!(e2.coefficient_of(&class(1, &[&[0], &[1]])), BigInt::from(2));
        assert_eq!(e2.coefficient_of(&class(1, &[&[0], &[0]])), BigInt::from(1));
    }

    #[test]
    fn one_vertex() {
        let k1 = SimpleGraph::empty(1).unwrap();
        let t = theorem2_expansion(&k1, 2).unwrap();
        assert_eq!(t, SymFunc::power_sum(&class(2, &[&[0, 1]])));
        let ks = kneser_slice_expansion(&k1, 1, 3).unwrap();
        assert_eq!(ks, SymFunc::monomial(&class(1, &[&[0]])));
    }

    #[test]
    fn three_routes_agree_on_the_triangle() {
        let k3 = SimpleGraph::complete(3).unwrap();
        for k in 1..=2 {
            let t = p_to_m(&theorem2_expansion(&k3, k).unwrap()).unwrap();
            assert_eq!(t, direct_m_expansion(&k3, k).unwrap());
            assert_eq!(t, kneser_slice_expansion(&k3, k, 3 * k).unwrap());
        }
    }

    #[test]
    fn small_slices_are_rejected_or_flagged() {
        let p3 = SimpleGraph::path(3).unwrap();
        // three disjoint pairs do not fit on five points, but every class
        // that fits is still complete
        let small = kneser_slice_expansion(&p3, 2, 5).unwrap();
        let full = kneser_slice_expansion(&p3, 2, 6).unwrap();
        assert!(small.len() < full.len());
        for (key, c) in small.terms() {
            assert_eq!(full.coefficient(key), *c);
        }
        assert!(kneser_slice_expansion(&SimpleGraph::empty(6).unwrap(), 2, 12).is_err());
    }

    #[test]
    fn unit_weights_on_the_path() {
        let p3 = SimpleGraph::path(3).unwrap();
        let u = theorem2_expansion_unit_weights(&p3, 2).unwrap();
        let e = class(2, &[&[0, 1]]);
        let pk = |parts: &[&HyperMultigraph]| {
            let mut key: Vec<ClassKey> = parts.iter().map(|h| h.key().clone()).collect();
            key.sort();
            key
        };
        let path2 = class(2, &[&[0, 1], &[1, 2]]);
        let dbl = class(2, &[&[0, 1], &[0, 1]]);
        assert_eq!(u.coefficient(&pk(&[&e, &e, &e])), BigInt::from(1));
        assert_eq!(u.coefficient(&pk(&[&path2, &e])), BigInt::from(-2));
        assert_eq!(u.coefficient(&pk(&[&dbl, &e])), BigInt::from(-2));
        for h in admissible_set(&p3, 2).unwrap() {
            assert_eq!(u.coefficient_of(&h), BigInt::from(1));
        }
        assert_eq!(u.len(), 8);
        // the unit-weight sum is not the Kneser expansion once k >= 2
        assert!(!crate::symfunc::equals(&u, &direct_m_expansion(&p3, 2).unwrap()).unwrap());
        assert!(crate::symfunc::equals(
            &theorem2_expansion_unit_weights(&p3, 1).unwrap(),
            &direct_m_expansion(&p3, 1).unwrap()
        )
        .unwrap());
    }

    #[test]
    fn chain_class_coefficients() {
        let chain = class(2, &[&[0, 1], &[1, 2], &[1, 2]]);
        let p3 = SimpleGraph::path(3).unwrap();
        let k3 = SimpleGraph::complete(3).unwrap();
        assert_eq!(theorem2_expansion_unit_weights(&p3, 2).unwrap().coefficient_of(&chain), BigInt::from(1));
        assert_eq!(theorem2_expansion_unit_weights(&k3, 2).unwrap().coefficient_of(&chain), BigInt::from(2));
        assert_eq!(theorem2_expansion(&p3, 2).unwrap().coefficient_of(&chain), BigInt::from(3));
        assert_eq!(theorem2_expansion(&k3, 2).unwrap().coefficient_of(&chain), BigInt::from(6));
    }

    #[test]
    fn stanley_formula_matches_the_spanning_sum() {
        for g in [
            SimpleGraph::path(4).unwrap(),
            SimpleGraph::cycle(4).unwrap(),
            SimpleGraph::complete(4).unwrap(),
            SimpleGraph::empty(3).unwrap(),
        ] {
            assert_eq!(chromatic_symmetric_function(&g).unwrap(), theorem2_expansion(&g, 1).unwrap());
        }
    }

    #[test]
    fn slice_stabilises() {
        let p3 = SimpleGraph::path(3).unwrap();
        assert_eq!(kneser_slice_expansion(&p3, 2, 6).unwrap(), kneser_slice_expansion(&p3, 2, 7).unwrap());
        let k2 = SimpleGraph::complete(2).unwrap();
        assert_eq!(kneser_slice_expansion(&k2, 1, 2).unwrap(), kneser_slice_expansion(&k2, 1, 5).unwrap());
    }

    #[test]
    fn stanley_pair_at_two_uniformities() {
        let (g1, g2) = crate::graphs::stanley_pair();
        let eq = |k| crate::symfunc::equals(&direct_m_expansion(&g1, k).unwrap(), &direct_m_expansion(&g2, k).unwrap()).unwrap();
        assert!(eq(1));
        assert!(!eq(2));
    }
}
