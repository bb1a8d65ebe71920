//! Class enumeration and admissible sets.

use std::collections::{BTreeMap, HashSet};

use super::{from_masks, ClassKey, HyperMultigraph};
use crate::error::{Error, Result};
use crate::graphs::{BitIter, SimpleGraph};

pub const MAX_UNIFORMITY: usize = 3;

/// Largest pattern order for admissible sets and assignment searches.
pub const MAX_ADMISSIBLE_ORDER: usize = 6;

fn max_edges(k: usize) -> Option<usize> {
    match k {
        1 => Some(20),
        2 => Some(7),
        3 => Some(4),
        _ => None,
    }
}

/// One representative of every class with `n` hyperedges, sorted by key.
/// Classes are grown one hyperedge at a time: the new hyperedge takes `j`
/// existing points and `k - j` fresh ones.
pub fn enumerate_classes(n: usize, k: usize, connected_only: bool) -> Result<Vec<HyperMultigraph>> {
    let cap = max_edges(k).ok_or_else(|| Error::capacity("uniformity for class enumeration", k, MAX_UNIFORMITY as u64))?;
    if n > cap {
        return Err(Error::capacity("hyperedge count for class enumeration", n, cap as u64));
    }
    let mut level: Vec<HyperMultigraph> = vec![from_masks(k, &[])?];
    for _ in 0..n {
        let mut seen: HashSet<ClassKey> = HashSet::new();
        let mut next = Vec::new();
        for parent in &level {
            let m = parent.vertex_count();
            for j in 0..=k.min(m) {
                let fresh: u64 = ((1u64 << (k - j)) - 1) << m;
                for_each_subset(m, j, &mut |old| {
                    let mut edges = parent.edge_masks().to_vec();
                    edges.push(old | fresh);
                    let child = from_masks(k, &edges).expect("within enumeration caps");
                    if seen.insert(child.key().clone()) {
                        next.push(child);
                    }
                });
            }
        }
        level = next;
    }
    level.retain(|c| !connected_only || c.is_connected());
    level.sort_by(|a, b| a.key().cmp(b.key()));
    Ok(level)
}

/// Calls `f` with every `j`-subset of `0..m` as a mask.
fn for_each_subset(m: usize, j: usize, f: &mut dyn FnMut(u64)) {
    fn rec(start: usize, m: usize, j: usize, acc: u64, f: &mut dyn FnMut(u64)) {
        if j == 0 {
            f(acc);
            return;
        }
        for p in start..=m - j {
            rec(p + 1, m, j - 1, acc | 1 << p, f);
        }
    }
    if j <= m {
        rec(0, m, j, 0, f);
    }
}

/// Constraint between the hyperedges assigned to adjacent vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Relation {
    Intersect,
    Disjoint,
}

/// Calls `visit` with one assignment of a `k`-subset to each vertex of `g`
/// (indexed by vertex) for every way of satisfying `rel` on the edges, up
/// to renaming points. Points with the same membership signature so far are
/// interchangeable, so only the count taken from each signature class is
/// branched on. Different branches may still produce isomorphic results.
pub(crate) fn assignments(g: &SimpleGraph, k: usize, rel: Relation, visit: &mut dyn FnMut(&[u64])) -> Result<()> {
    let n = g.order();
    if k == 0 || k > MAX_UNIFORMITY {
        return Err(Error::capacity("uniformity", k, MAX_UNIFORMITY as u64));
    }
    if n > MAX_ADMISSIBLE_ORDER {
        return Err(Error::capacity("pattern order for hyperedge assignments", n, MAX_ADMISSIBLE_ORDER as u64));
    }
    let mut sets = vec![0u64; n];
    assign_rec(g, k, rel, 0, 0, &mut sets, visit);
    Ok(())
}

fn assign_rec(
    g: &SimpleGraph,
    k: usize,
    rel: Relation,
    pos: usize,
    used: usize,
    sets: &mut [u64],
    visit: &mut dyn FnMut(&[u64]),
) {
    if pos == sets.len() {
        visit(sets);
        return;
    }
    // group used points by the set of earlier positions containing them
    let mut classes: Vec<(u64, Vec<usize>)> = Vec::new();
    for p in 0..used {
        let sig = (0..pos).filter(|&i| sets[i] >> p & 1 == 1).fold(0u64, |a, i| a | 1 << i);
        match classes.iter_mut().find(|(s, _)| *s == sig) {
            Some((_, pts)) => pts.push(p),
            None => classes.push((sig, vec![p])),
        }
    }
    let mut picks = vec![0usize; classes.len()];
    choose_counts(g, k, rel, pos, used, sets, &classes, 0, k, &mut picks, visit);
}

#[allow(clippy::too_many_arguments)]
fn choose_counts(
    g: &SimpleGraph,
    k: usize,
    rel: Relation,
    pos: usize,
    used: usize,
    sets: &mut [u64],
    classes: &[(u64, Vec<usize>)],
    c: usize,
    left: usize,
    picks: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[u64]),
) {
    if c == classes.len() {
        let mut set = ((1u64 << left) - 1) << used;
        for (i, &t) in picks.iter().enumerate() {
            for &p in &classes[i].1[..t] {
                set |= 1 << p;
            }
        }
        let ok = (0..pos).all(|j| {
            !g.has_edge(pos, j)
                || match rel {
                    Relation::Intersect => set & sets[j] != 0,
                    Relation::Disjoint => set & sets[j] == 0,
                }
        });
        if ok {
            sets[pos] = set;
            assign_rec(g, k, rel, pos + 1, used + left, sets, visit);
        }
        return;
    }
    for t in 0..=left.min(classes[c].1.len()) {
        picks[c] = t;
        choose_counts(g, k, rel, pos, used, sets, classes, c + 1, left - t, picks, visit);
    }
    picks[c] = 0;
}

/// The classes with `|V(g)|` hyperedges admitting a bijection from the
/// vertices of `g` onto the hyperedges under which adjacent vertices get
/// intersecting hyperedges. `g` must be connected.
pub fn admissible_set(g: &SimpleGraph, k: usize) -> Result<Vec<HyperMultigraph>> {
    if !g.is_connected() || g.order() == 0 {
        return Err(Error::Disconnected);
    }
    let mut found: BTreeMap<ClassKey, HyperMultigraph> = BTreeMap::new();
    let mut err = None;
    assignments(g, k, Relation::Intersect, &mut |sets| match from_masks(k, sets) {
        Ok(h) => {
            found.entry(h.key().clone()).or_insert(h);
        }
        Err(e) => err = Some(e),
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(found.into_values().collect())
}

/// Exhaustive check for a bijection from the vertices of `g` onto the
/// hyperedge multiset of `h` sending edges to intersecting hyperedges.
pub fn admits(g: &SimpleGraph, h: &HyperMultigraph) -> bool {
    if g.order() != h.edge_count() {
        return false;
    }
    let mut distinct: Vec<u64> = h.edge_masks().to_vec();
    distinct.dedup();
    let mut left: Vec<usize> = h.multiplicities();
    let mut image = vec![0u64; g.order()];
    admits_rec(g, 0, &distinct, &mut left, &mut image)
}

fn admits_rec(g: &SimpleGraph, v: usize, distinct: &[u64], left: &mut [usize], image: &mut [u64]) -> bool {
    if v == image.len() {
        return true;
    }
    for i in 0..distinct.len() {
        if left[i] == 0 {
            continue;
        }
        let e = distinct[i];
        if BitIter(g.row(v) & ((1u64 << v) - 1)).any(|u| image[u] & e == 0) {
            continue;
        }
        left[i] -= 1;
        image[v] = e;
        let ok = admits_rec(g, v + 1, distinct, left, image);
        left[i] += 1;
        if ok {
            return true;
        }
    }
    false
}
