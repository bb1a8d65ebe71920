//! Backtracking homomorphism enumeration over bitset hosts.
//!
//! Pattern vertices are visited in BFS order from a highest-degree vertex,
//! so every vertex after the first has an already placed neighbour and its
//! candidates are the intersection of the placed neighbours' host rows.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::host::DenseGraph;
use crate::error::{Error, Result};
use crate::graphs::{BitIter, SimpleGraph};

/// Homomorphisms (strict) or weak homomorphisms (edges may collapse).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Rule {
    Strict,
    Weak,
}

pub(crate) struct Plan {
    /// Pattern vertices in visiting order.
    pub order: Vec<usize>,
    /// For each position, the earlier positions adjacent to it.
    pub back: Vec<Vec<usize>>,
}

/// BFS order over a connected pattern, starting at the least vertex of
/// highest degree; neighbours are queued by decreasing degree.
pub(crate) fn plan(g: &SimpleGraph) -> Plan {
    let n = g.order();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut seen = 0u64;
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| seen >> v & 1 == 0)
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        seen |= 1 << start;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let u = order[head];
            head += 1;
            let mut next: Vec<usize> = BitIter(g.row(u) & !seen).collect();
            next.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
            for v in next {
                seen |= 1 << v;
                order.push(v);
            }
        }
    }
    let pos: Vec<usize> = {
        let mut p = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    let back = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let mut b: Vec<usize> = BitIter(g.row(v)).map(|u| pos[u]).filter(|&j| j < i).collect();
            b.sort_unstable();
            b
        })
        .collect();
    Plan { order, back }
}

struct Budget<'a> {
    used: &'a AtomicU64,
    limit: u64,
}

impl Budget<'_> {
    fn spend(&self, n: u64) -> Result<()> {
        let total = self.used.fetch_add(n, Ordering::Relaxed) + n;
        if total > self.limit {
            return Err(Error::BudgetExceeded { budget: self.limit });
        }
        Ok(())
    }
}

fn candidates(h: &DenseGraph, rule: Rule, plan: &Plan, pos: usize, images: &[usize], buf: &mut [u64]) {
    let words = h.words();
    let mut first = true;
    for &j in &plan.back[pos] {
        let img = images[j];
        let row = h.row(img);
        if first {
            buf.copy_from_slice(row);
            if rule == Rule::Weak {
                buf[img / 64] |= 1 << (img % 64);
            }
            first = false;
        } else {
            for w in 0..words {
                let mut r = row[w];
                if rule == Rule::Weak && img / 64 == w {
                    r |= 1 << (img % 64);
                }
                buf[w] &= r;
            }
        }
    }
    if first {
        // no placed neighbour: every host vertex
        for (w, slot) in buf.iter_mut().enumerate() {
            let lo = w * 64;
            *slot = if lo + 64 <= h.order() {
                u64::MAX
            } else if lo >= h.order() {
                0
            } else {
                (1u64 << (h.order() - lo)) - 1
            };
        }
    }
}

/// Number of homomorphisms of the pattern described by `plan`, with the
/// first `fixed.len()` positions already mapped to `fixed`.
pub(crate) fn count_from(
    h: &DenseGraph,
    rule: Rule,
    plan: &Plan,
    fixed: &[usize],
    used: &AtomicU64,
    limit: u64,
) -> Result<u128> {
    let n = plan.order.len();
    let budget = Budget { used, limit };
    let mut images = vec![0usize; n];
    images[..fixed.len()].copy_from_slice(fixed);
    let mut bufs = vec![vec![0u64; h.words()]; n - fixed.len()];
    count_rec(h, rule, plan, fixed.len(), &mut images, &mut bufs, &budget)
}

fn count_rec(
    h: &DenseGraph,
    rule: Rule,
    plan: &Plan,
    pos: usize,
    images: &mut [usize],
    bufs: &mut [Vec<u64>],
    budget: &Budget,
) -> Result<u128> {
    let n = plan.order.len();
    if pos == n {
        return Ok(1);
    }
    let (buf, rest) = bufs.split_first_mut().expect("one buffer per position");
    candidates(h, rule, plan, pos, images, buf);
    budget.spend(1)?;
    if pos + 1 == n {
        return Ok(buf.iter().map(|w| w.count_ones() as u128).sum());
    }
    let mut total: u128 = 0;
    for (w, &word) in buf.iter().enumerate() {
        for b in BitIter(word) {
            images[pos] = w * 64 + b;
            let sub = count_rec(h, rule, plan, pos + 1, images, rest, budget)?;
            total = total
                .checked_add(sub)
                .ok_or_else(|| Error::capacity("homomorphism count (128-bit)", u64::MAX, u64::MAX))?;
        }
    }
    Ok(total)
}

/// Calls `visit` with the image vector (indexed by pattern vertex) of every
/// homomorphism.
pub(crate) fn enumerate(
    g: &SimpleGraph,
    h: &DenseGraph,
    rule: Rule,
    limit: u64,
    visit: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    let plan = plan(g);
    let n = plan.order.len();
    let used = AtomicU64::new(0);
    let budget = Budget { used: &used, limit };
    let mut images = vec![0usize; n];
    let mut by_vertex = vec![0usize; n];
    let mut bufs = vec![vec![0u64; h.words()]; n];
    enum_rec(h, rule, &plan, 0, &mut images, &mut by_vertex, &mut bufs, &budget, visit)
}

#[allow(clippy::too_many_arguments)]
fn enum_rec(
    h: &DenseGraph,
    rule: Rule,
    plan: &Plan,
    pos: usize,
    images: &mut [usize],
    by_vertex: &mut [usize],
    bufs: &mut [Vec<u64>],
    budget: &Budget,
    visit: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    if pos == plan.order.len() {
        visit(by_vertex);
        return Ok(());
    }
    let (buf, rest) = bufs.split_first_mut().expect("one buffer per position");
    candidates(h, rule, plan, pos, images, buf);
    for (w, &word) in buf.iter().enumerate() {
        for b in BitIter(word) {
            budget.spend(1)?;
            images[pos] = w * 64 + b;
            by_vertex[plan.order[pos]] = w * 64 + b;
            enum_rec(h, rule, plan, pos + 1, images, by_vertex, rest, budget, visit)?;
        }
    }
    Ok(())
}

/// `|Hom(g, h)|` for a connected pattern. With `transitive`, the first
/// pattern vertex is pinned to host vertex 0 and the count scaled by the
/// host order; otherwise root candidates are split across threads.
pub(crate) fn count_connected(
    g: &SimpleGraph,
    h: &DenseGraph,
    rule: Rule,
    transitive: bool,
    used: &AtomicU64,
    limit: u64,
) -> Result<u128> {
    let plan = plan(g);
    if plan.order.len() == 1 {
        return Ok(h.order() as u128);
    }
    if transitive {
        let c = count_from(h, rule, &plan, &[0], used, limit)?;
        return c
            .checked_mul(h.order() as u128)
            .ok_or_else(|| Error::capacity("homomorphism count (128-bit)", u64::MAX, u64::MAX));
    }
    let parts: Vec<u128> = (0..h.order())
        .into_par_iter()
        .map(|r| count_from(h, rule, &plan, &[r], used, limit))
        .collect::<Result<_>>()?;
    parts
        .into_iter()
        .try_fold(0u128, |a, b| a.checked_add(b))
        .ok_or_else(|| Error::capacity("homomorphism count (128-bit)", u64::MAX, u64::MAX))
}
