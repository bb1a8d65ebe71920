//! Isomorph-free generation by canonical augmentation.
//!
//! A child on `n` vertices is kept iff the vertex just added lies in the
//! automorphism orbit of the child's canonical deletion vertex. That makes
//! the parent class of every kept child unique, so only children of the same
//! parent can collide, and those are deduplicated per parent.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::canonical_labeling;
use super::simple::{mask_below, BitIter, SimpleGraph};
use crate::error::{Error, Result};

pub const MAX_GRAPH_ORDER: usize = 8;
pub const MAX_TREE_ORDER: usize = 16;

/// One representative per isomorphism class of graphs on `n` vertices, in
/// canonical form. Counts for n = 0..=8: 1, 1, 2, 4, 11, 34, 156, 1044, 12346.
pub fn enumerate_graphs(n: usize) -> Result<Vec<SimpleGraph>> {
    if n > MAX_GRAPH_ORDER {
        return Err(Error::capacity("graph enumeration order", n, MAX_GRAPH_ORDER as u64));
    }
    let mut level = vec![SimpleGraph::empty(0)?];
    for m in 1..=n {
        level = augment(&level, m, |g: &SimpleGraph| mask_below(g.order()), |parent_order| {
            (0u64..1 << parent_order).collect()
        });
    }
    Ok(level)
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<SimpleGraph>> {
    if n > MAX_TREE_ORDER {
        return Err(Error::capacity("tree enumeration order", n, MAX_TREE_ORDER as u64));
    }
    match n {
        0 => return Ok(vec![]),
        1 => return Ok(vec![SimpleGraph::empty(1)?]),
        _ => {}
    }
    let mut level = vec![SimpleGraph::complete(2)?];
    for m in 3..=n {
        level = augment(
            &level,
            m,
            |g: &SimpleGraph| (0..g.order()).filter(|&v| g.degree(v) == 1).fold(0u64, |a, v| a | 1 << v),
            |parent_order| (0..parent_order).map(|v| 1u64 << v).collect(),
        );
    }
    Ok(level)
}

/// Extends every parent by one vertex with each neighbourhood from
/// `neighbourhoods`. `deletable` picks the vertices that the canonical
/// deletion may remove; the canonical one is the deletable vertex with the
/// largest canonical position.
fn augment(
    parents: &[SimpleGraph],
    m: usize,
    deletable: impl Fn(&SimpleGraph) -> u64 + Sync,
    neighbourhoods: impl Fn(usize) -> Vec<u64> + Sync,
) -> Vec<SimpleGraph> {
    let new = m - 1;
    let mut children: Vec<SimpleGraph> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            let mut seen: HashSet<Vec<u64>> = HashSet::new();
            let mut kept = Vec::new();
            for nbrs in neighbourhoods(parent.order()) {
                let mut rows: Vec<u64> = parent.rows().to_vec();
                for u in BitIter(nbrs) {
                    rows[u] |= 1 << new;
                }
                rows.push(nbrs);
                let child = SimpleGraph::from_rows(m, rows);
                let lab = canonical_labeling(child.rows(), &vec![0; m]);
                let candidates = deletable(&child);
                let del = lab
                    .order
                    .iter()
                    .rev()
                    .copied()
                    .find(|&v| candidates >> v & 1 == 1)
                    .expect("at least one deletable vertex");
                let orbits = lab.orbits();
                if orbits[del] != orbits[new] {
                    continue;
                }
                if seen.insert(lab.rows.clone()) {
                    kept.push(SimpleGraph::from_rows(m, lab.rows));
                }
            }
            kept
        })
        .collect();
    children.sort();
    children
}
