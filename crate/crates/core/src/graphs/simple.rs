use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Maximum number of vertices of a pattern graph. Adjacency rows are single
/// `u64` words.
pub const MAX_ORDER: usize = 64;

/// A finite simple graph on vertices `0..n` with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::capacity("pattern order", n, MAX_ORDER as u64));
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        SimpleGraph { n, adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Parameter(format!(
                "edge {{{u},{v}}} out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Parameter(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in BitIter(self.adj[u] & !mask_below(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> SimpleGraph {
        let full = mask_below(self.n);
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1 << v))
            .collect();
        SimpleGraph { n: self.n, adj }
    }

    /// The graph `σ·G` where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        SimpleGraph { n: self.n, adj }
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut adj = vec![0u64; vertices.len()];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        SimpleGraph {
            n: vertices.len(),
            adj,
        }
    }

    /// Disjoint union, vertices of `other` shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let n = self.n + other.n;
        let mut g = SimpleGraph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_masks().len() == 1
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in BitIter(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Connected components as standalone graphs (vertices relabelled in
    /// increasing order), ordered by least original vertex.
    pub fn connected_components(&self) -> Vec<SimpleGraph> {
        self.component_masks()
            .into_iter()
            .map(|m| self.induced(&BitIter(m).collect::<Vec<_>>()))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let edges: Vec<Value> = self.edges().iter().map(|&(u, v)| json!([u, v])).collect();
        json!({ "n": self.n, "edges": edges })
    }

    // Named families used throughout.

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            g.adj[u] = mask_below(n) & !(1 << u);
        }
        Ok(g)
    }

    /// Cycle `C_n` on `0..n` (n ≥ 3).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Parameter(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// Path `P_n` with `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Self::from_edges(a + b, &edges)
    }

    pub fn star(leaves: usize) -> Result<Self> {
        Self::complete_bipartite(1, leaves)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_of_small_graphs() {
        let g = SimpleGraph::from_edges(3, &[(0, 1)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], SimpleGraph::complete(2).unwrap());
        assert_eq!(comps[1], SimpleGraph::empty(1).unwrap());

        let c5 = SimpleGraph::cycle(5).unwrap();
        assert_eq!(c5.connected_components(), vec![c5.clone()]);

        let e3 = SimpleGraph::empty(3).unwrap();
        assert_eq!(e3.connected_components(), vec![SimpleGraph::empty(1).unwrap(); 3]);
    }

    #[test]
    fn rejects_loops_and_oversize() {
        assert!(SimpleGraph::from_edges(2, &[(1, 1)]).is_err());
        assert!(SimpleGraph::empty(65).is_err());
        assert!(SimpleGraph::empty(64).is_ok());
    }

    #[test]
    fn complement_of_cycle5_is_cycle5_shaped() {
        let c = SimpleGraph::cycle(5).unwrap().complement();
        assert_eq!(c.size(), 5);
        assert!((0..5).all(|v| c.degree(v) == 2));
    }

    #[test]
    fn json_edges_sorted() {
        let g = SimpleGraph::from_edges(4, &[(3, 1), (2, 0), (1, 0)]).unwrap();
        assert_eq!(
            g.to_json().to_string(),
            r#"{"edges":[[0,1],[0,2],[1,3]],"n":4}"#
        );
    }
}
