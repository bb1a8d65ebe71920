//! Host graphs: explicit adjacency or implicit oracles for complete graphs,
//! Kneser slices and Paley graphs.

use std::sync::{Arc, OnceLock};

use num_integer::binomial;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::graphs::{mask_below, BitIter, SimpleGraph};

/// Hosts up to this order can be materialised as bitset adjacency matrices.
pub const DENSE_LIMIT: usize = 1 << 13;
/// Largest implicit host accepted at all.
pub const HOST_LIMIT: usize = 1 << 24;

/// Bitset adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl DenseGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > DENSE_LIMIT {
            return Err(Error::capacity("explicit host order", n, DENSE_LIMIT as u64));
        }
        let words = n.div_ceil(64).max(1);
        Ok(DenseGraph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::Parameter(format!("invalid host edge {{{u},{v}}} on {n} vertices")));
            }
            g.set(u, v);
            g.set(v, u);
        }
        Ok(g)
    }

    fn from_oracle(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set(u, v);
                    g.set(v, u);
                }
            }
        }
        Ok(g)
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| BitIter(w).map(move |b| i * 64 + b))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> DenseGraph {
        let mut g = DenseGraph::empty(self.n).expect("same order");
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.adjacent(u, v) {
                    g.set(u, v);
                }
            }
        }
        g
    }
}

impl From<&SimpleGraph> for DenseGraph {
    fn from(g: &SimpleGraph) -> Self {
        DenseGraph::from_edges(g.order(), &g.edges()).expect("pattern graphs fit")
    }
}

#[derive(Clone, Debug)]
pub enum HostKind {
    Explicit(DenseGraph),
    Complete(usize),
    /// k-subsets of a ground set of size `n`, adjacent when disjoint.
    /// Vertices are the subsets in colex order, stored as bitmasks.
    KneserSlice { n: usize, k: usize, subsets: Vec<u64> },
    Paley(Arc<Field>),
}

/// A finite host graph with an adjacency oracle and a vertex enumerator
/// over `0..order()`.
#[derive(Debug)]
pub struct HostGraph {
    kind: HostKind,
    dense: OnceLock<Option<DenseGraph>>,
    squares: OnceLock<Vec<FieldElement>>,
}

impl Clone for HostGraph {
    fn clone(&self) -> Self {
        HostGraph::from_kind(self.kind.clone())
    }
}

impl HostGraph {
    fn from_kind(kind: HostKind) -> Self {
        HostGraph {
            kind,
            dense: OnceLock::new(),
            squares: OnceLock::new(),
        }
    }

    pub fn explicit(g: DenseGraph) -> Self {
        Self::from_kind(HostKind::Explicit(g))
    }

    pub fn from_simple(g: &SimpleGraph) -> Self {
        Self::explicit(g.into())
    }

    pub fn complete(n: usize) -> Self {
        Self::from_kind(HostKind::Complete(n))
    }

    /// The Kneser slice on the k-subsets of an `n`-set.
    pub fn kneser(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Parameter("Kneser slices need k >= 1".into()));
        }
        if n > 64 {
            return Err(Error::capacity("Kneser ground set", n, 64));
        }
        let count: u128 = binomial(n as u128, k as u128);
        if count > HOST_LIMIT as u128 {
            return Err(Error::capacity("Kneser slice order", u64::try_from(count).unwrap_or(u64::MAX), HOST_LIMIT as u64));
        }
        let mut subsets = Vec::with_capacity(count as usize);
        if k <= n {
            // Gosper's hack walks k-subsets in colex order
            let mut s: u64 = mask_below(k);
            let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            loop {
                subsets.push(s);
                let c = s & s.wrapping_neg();
                let r = s.wrapping_add(c);
                if r == 0 {
                    break;
                }
                let next = (((r ^ s) >> 2) / c) | r;
                if next > limit || next < s {
                    break;
                }
                s = next;
            }
        }
        Ok(Self::from_kind(HostKind::KneserSlice { n, k, subsets }))
    }

    /// The Paley graph on `field`, which must have order 1 mod 4.
    pub fn paley(field: Arc<Field>) -> Result<Self> {
        let q = field.order();
        if q % 4 != 1 {
            return Err(Error::Parameter(format!(
                "Paley graphs need q = 1 mod 4 for a symmetric relation, got q = {q}"
            )));
        }
        if q as usize > HOST_LIMIT {
            return Err(Error::capacity("Paley host order", q, HOST_LIMIT as u64));
        }
        Ok(Self::from_kind(HostKind::Paley(field)))
    }

    pub fn kind(&self) -> &HostKind {
        &self.kind
    }

    pub fn field(&self) -> Option<&Arc<Field>> {
        match &self.kind {
            HostKind::Paley(f) => Some(f),
            _ => None,
        }
    }

    pub fn order(&self) -> usize {
        match &self.kind {
            HostKind::Explicit(g) => g.order(),
            HostKind::Complete(n) => *n,
            HostKind::KneserSlice { subsets, .. } => subsets.len(),
            HostKind::Paley(f) => f.order() as usize,
        }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        match &self.kind {
            HostKind::Explicit(g) => g.adjacent(u, v),
            HostKind::Complete(_) => u != v,
            HostKind::KneserSlice { subsets, .. } => subsets[u] & subsets[v] == 0,
            HostKind::Paley(f) => {
                f.is_square(f.sub(FieldElement(u as u32), FieldElement(v as u32))) == Some(true)
            }
        }
    }

    /// True for the implicit families, whose automorphism groups act
    /// transitively on vertices.
    pub fn is_vertex_transitive(&self) -> bool {
        !matches!(self.kind, HostKind::Explicit(_))
    }

    /// Bitset adjacency, materialised on first use for hosts of order at
    /// most [`DENSE_LIMIT`].
    pub fn dense(&self) -> Option<&DenseGraph> {
        self.dense
            .get_or_init(|| match &self.kind {
                HostKind::Explicit(g) => Some(g.clone()),
                _ if self.order() <= DENSE_LIMIT => {
                    Some(DenseGraph::from_oracle(self.order(), |u, v| self.adjacent(u, v)).expect("within limit"))
                }
                _ => None,
            })
            .as_ref()
    }

    pub fn degree(&self, v: usize) -> usize {
        match &self.kind {
            HostKind::Explicit(g) => g.degree(v),
            HostKind::Complete(n) => n - 1,
            HostKind::KneserSlice { n, k, .. } => binomial(n - k, *k),
            HostKind::Paley(f) => (f.order() as usize - 1) / 2,
        }
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        if let Some(d) = self.dense() {
            return d.neighbors(v).collect();
        }
        match &self.kind {
            HostKind::Explicit(g) => g.neighbors(v).collect(),
            HostKind::Complete(n) => (0..*n).filter(|&u| u != v).collect(),
            HostKind::KneserSlice { subsets, .. } => {
                let s = subsets[v];
                (0..subsets.len()).filter(|&u| subsets[u] & s == 0).collect()
            }
            HostKind::Paley(f) => {
                let squares = self.squares.get_or_init(|| {
                    f.elements().filter(|&e| f.is_square(e) == Some(true)).collect()
                });
                let x = FieldElement(v as u32);
                let mut out: Vec<usize> = squares.iter().map(|&s| f.add(x, s).0 as usize).collect();
                out.sort_unstable();
                out
            }
        }
    }

    /// The complement host, materialised explicitly.
    pub fn complement(&self) -> Result<HostGraph> {
        let d = self
            .dense()
            .ok_or_else(|| Error::capacity("host order for complement", self.order(), DENSE_LIMIT as u64))?;
        Ok(HostGraph::explicit(d.complement()))
    }

    /// JSON identifier of a host vertex: an integer, a sorted 1-based
    /// subset, or a coefficient array.
    pub fn vertex_label(&self, v: usize) -> Value {
        match &self.kind {
            HostKind::Explicit(_) | HostKind::Complete(_) => json!(v),
            HostKind::KneserSlice { subsets, .. } => {
                json!(BitIter(subsets[v]).map(|i| i + 1).collect::<Vec<_>>())
            }
            HostKind::Paley(f) => f.element_json(FieldElement(v as u32)),
        }
    }

    pub fn describe(&self) -> Value {
        match &self.kind {
            HostKind::Explicit(g) => json!({ "kind": "explicit", "order": g.order() }),
            HostKind::Complete(n) => json!({ "kind": "complete", "order": n }),
            HostKind::KneserSlice { n, k, subsets } => {
                json!({ "kind": "kneser", "n": n, "k": k, "order": subsets.len() })
            }
            HostKind::Paley(f) => json!({ "kind": "paley", "field": f.spec().to_json(), "order": f.order() }),
        }
    }

    /// Index of a subset mask in a Kneser slice.
    pub fn kneser_vertex(&self, mask: u64) -> Option<usize> {
        match &self.kind {
            HostKind::KneserSlice { subsets, .. } => subsets.binary_search(&mask).ok(),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kneser_slices() {
        let h = HostGraph::kneser(4, 2).unwrap();
        assert_eq!(h.order(), 6);
        // {1,2} and {3,4} are the only disjoint partners
        let a = h.kneser_vertex(0b0011).unwrap();
        let b = h.kneser_vertex(0b1100).unwrap();
        assert_eq!(h.neighbors(a), vec![b]);
        let petersen = HostGraph::kneser(5, 2).unwrap();
        assert_eq!(petersen.order(), 10);
        assert!((0..10).all(|v| petersen.neighbors(v).len() == 3));
        assert_eq!(HostGraph::kneser(3, 1).unwrap().order(), 3);
        assert_eq!(HostGraph::kneser(64, 1).unwrap().order(), 64);
    }

    #[test]
    fn paley_five_is_a_pentagon() {
        let f = Arc::new(Field::of_order(5, 1).unwrap());
        let h = HostGraph::paley(f).unwrap();
        assert_eq!(h.neighbors(0), vec![1, 4]);
        assert!(HostGraph::paley(Arc::new(Field::of_order(7, 1).unwrap())).is_err());
    }
}
