//! Explicit cycles of every length in a host.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::homomorphism::{DenseGraph, HostGraph, DENSE_LIMIT};

/// Largest host order accepted for a full certificate.
pub const MAX_CERTIFY_ORDER: usize = 200;

/// Cycles found per length, lengths refuted by exhaustive search, and
/// lengths whose search ran out of budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PancyclicityReport {
    pub order: usize,
    pub cycles: BTreeMap<usize, Vec<usize>>,
    pub absent: Vec<usize>,
    pub undecided: Vec<usize>,
}

impl PancyclicityReport {
    pub fn is_pancyclic(&self) -> bool {
        self.order >= 3 && self.cycles.len() == self.order - 2
    }

    /// Every length was either found or refuted.
    pub fn is_complete(&self) -> bool {
        self.undecided.is_empty()
    }

    pub fn to_json(&self, host: &HostGraph) -> Value {
        let cycles: serde_json::Map<String, Value> = self
            .cycles
            .iter()
            .map(|(len, c)| (len.to_string(), json!(c.iter().map(|&v| host.vertex_label(v)).collect::<Vec<_>>())))
            .collect();
        json!({
            "operation": "pancyclic",
            "inputs": host.describe(),
            "value": self.is_pancyclic(),
            "flags": if self.is_complete() { json!([]) } else { json!(["incomplete"]) },
            "cycles": cycles,
            "absent": self.absent,
            "undecided": self.undecided,
        })
    }
}

/// Searches for a cycle of every length `3..=|V(host)|`, lengths in
/// parallel, each with its own node budget.
pub fn pancyclicity_certificate(host: &HostGraph, budget: u64) -> Result<PancyclicityReport> {
    let n = host.order();
    if n > MAX_CERTIFY_ORDER {
        return Err(Error::capacity("host order for a pancyclicity certificate", n, MAX_CERTIFY_ORDER as u64));
    }
    let results: Vec<(usize, Result<Option<Vec<usize>>>)> =
        (3..=n).into_par_iter().map(|len| (len, find_cycle(host, len, budget))).collect();
    let mut report = PancyclicityReport {
        order: n,
        cycles: BTreeMap::new(),
        absent: vec![],
        undecided: vec![],
    };
    for (len, r) in results {
        match r {
            Ok(Some(c)) => {
                report.cycles.insert(len, c);
            }
            Ok(None) => report.absent.push(len),
            Err(Error::BudgetExceeded { .. }) => report.undecided.push(len),
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// A cycle of length `len` as a vertex list, `Ok(None)` after exhaustive
/// refutation, or a budget error.
///
/// Each cycle is grown from its least vertex (any vertex, on
/// vertex-transitive hosts) by depth-first search that always tries the
/// neighbour with the fewest free neighbours first, so the first descent is
/// a greedy long path. Paths that can no longer close are cut.
pub fn find_cycle(host: &HostGraph, len: usize, budget: u64) -> Result<Option<Vec<usize>>> {
    let n = host.order();
    if len < 3 || len > n {
        return Ok(None);
    }
    let dense = host
        .dense()
        .ok_or_else(|| Error::capacity("host order for cycle search", n, DENSE_LIMIT as u64))?;
    let starts = if host.is_vertex_transitive() { 1 } else { n - len + 1 };
    let mut search = CycleSearch {
        g: dense,
        words: dense.words(),
        len,
        budget,
        nodes: 0,
        path: Vec::with_capacity(len),
        free: vec![0; dense.words()],
        start: 0,
    };
    for s in 0..starts {
        search.start = s;
        search.free.iter_mut().for_each(|w| *w = 0);
        let lo = if host.is_vertex_transitive() { 0 } else { s + 1 };
        for v in lo..n {
            if v != s {
                search.free[v / 64] |= 1 << (v % 64);
            }
        }
        search.path.clear();
        search.path.push(s);
        if search.dfs()? {
            let cycle = search.path.clone();
            let closed = (0..len).all(|i| host.adjacent(cycle[i], cycle[(i + 1) % len]));
            if !closed {
                return Err(Error::Internal(format!("cycle search returned a non-cycle of length {len}")));
            }
            return Ok(Some(cycle));
        }
    }
    Ok(None)
}

struct CycleSearch<'a> {
    g: &'a DenseGraph,
    words: usize,
    len: usize,
    budget: u64,
    nodes: u64,
    path: Vec<usize>,
    // vertices still available
    free: Vec<u64>,
    start: usize,
}

impl CycleSearch<'_> {
    fn free_neighbours(&self, v: usize) -> u32 {
        self.g.row(v).iter().zip(&self.free).map(|(a, b)| (a & b).count_ones()).sum()
    }

    fn dfs(&mut self) -> Result<bool> {
        let last = *self.path.last().expect("path starts at the root");
        if self.path.len() == self.len {
            return Ok(self.g.adjacent(last, self.start));
        }
        let closing = self.path.len() == self.len - 1;
        if !closing && self.free_neighbours(self.start) == 0 {
            return Ok(false);
        }
        let row = self.g.row(last);
        let start_row = self.g.row(self.start);
        let mut cands: Vec<(u32, usize)> = Vec::new();
        for w in 0..self.words {
            let mut bits = row[w] & self.free[w];
            if closing {
                bits &= start_row[w];
            }
            while bits != 0 {
                let v = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                cands.push((self.free_neighbours(v), v));
            }
        }
        cands.sort_unstable();
        for (_, v) in cands {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            self.free[v / 64] &= !(1 << (v % 64));
            self.path.push(v);
            if self.dfs()? {
                return Ok(true);
            }
            self.path.pop();
            self.free[v / 64] |= 1 << (v % 64);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::{find_irreducible, paley_graph};
    use crate::graphs::SimpleGraph;

    #[test]
    fn small_paley_hosts() {
        let p5 = paley_graph(find_irreducible(5, 1).unwrap()).unwrap();
        let r = pancyclicity_certificate(&p5, 1 << 20).unwrap();
        assert_eq!(r.absent, vec![3, 4]);
        assert!(r.cycles.contains_key(&5));
        assert!(!r.is_pancyclic() && r.is_complete());

        let p13 = paley_graph(find_irreducible(13, 1).unwrap()).unwrap();
        let r = pancyclicity_certificate(&p13, 1 << 20).unwrap();
        assert!(r.is_pancyclic());
    }

    #[test]
    fn non_transitive_hosts() {
        // a triangle with a pendant path: only length 3
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        let r = pancyclicity_certificate(&HostGraph::from_simple(&g), 1 << 20).unwrap();
        assert_eq!(r.cycles.keys().copied().collect::<Vec<_>>(), vec![3]);
        assert_eq!(r.absent, vec![4, 5]);
        let c6 = SimpleGraph::cycle(6).unwrap();
        let r = pancyclicity_certificate(&HostGraph::from_simple(&c6), 1 << 20).unwrap();
        assert_eq!(r.absent, vec![3, 4, 5]);
    }

    #[test]
    fn budget_leaves_lengths_undecided() {
        let p13 = paley_graph(find_irreducible(13, 1).unwrap()).unwrap();
        let r = pancyclicity_certificate(&p13, 2).unwrap();
        assert!(!r.is_complete());
    }
}
