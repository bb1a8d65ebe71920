//! k-uniform hyper-multigraphs without isolated vertices, up to relabelling
//! of their points. These index the monomial and power-sum bases.

mod enumerate;

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graphs::canon::{canonical_labeling, UnionFind};
use crate::graphs::BitIter;

pub use enumerate::{admissible_set, admits, enumerate_classes, MAX_ADMISSIBLE_ORDER, MAX_UNIFORMITY};
pub(crate) use enumerate::{assignments, Relation};

/// Points plus hyperedge nodes must fit the 64-vertex labelling engine.
pub const MAX_INCIDENCE_ORDER: usize = 64;

/// Canonical byte code of a class: `[k, points, edges]` followed by the
/// points of every hyperedge, hyperedges in lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey(Vec<u8>);

impl ClassKey {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0[0] as usize
    }

    pub fn vertex_count(&self) -> usize {
        self.0[1] as usize
    }

    pub fn edge_count(&self) -> usize {
        self.0[2] as usize
    }

    /// Hyperedges of the canonical representative as point masks.
    pub fn edge_masks(&self) -> Vec<u64> {
        let k = self.k();
        self.0[3..]
            .chunks(k.max(1))
            .take(self.edge_count())
            .map(|c| c.iter().fold(0u64, |m, &p| m | 1 << p))
            .collect()
    }

    /// The class with no hyperedges, the unit of both bases.
    pub fn empty(k: usize) -> ClassKey {
        ClassKey(vec![k as u8, 0, 0])
    }

    pub fn is_empty(&self) -> bool {
        self.edge_count() == 0
    }
}

impl fmt::Debug for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<Vec<usize>> = self.edge_masks().into_iter().map(|m| BitIter(m).collect()).collect();
        write!(f, "{edges:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperMultigraph {
    k: usize,
    vertices: usize,
    edges: Vec<u64>,
    aut_order: BigUint,
    key: ClassKey,
}

impl HyperMultigraph {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Hyperedges of the canonical representative, each as sorted points.
    pub fn hyperedges(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&m| BitIter(m).collect()).collect()
    }

    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    /// Number of point permutations preserving the hyperedge multiset.
    pub fn aut_order(&self) -> &BigUint {
        &self.aut_order
    }

    pub fn key(&self) -> &ClassKey {
        &self.key
    }

    pub fn is_connected(&self) -> bool {
        component_masks(&self.edges).len() <= 1
    }

    /// Multiplicities of the distinct hyperedges, in canonical edge order.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 && self.edges[i - 1] == *e {
                *out.last_mut().expect("previous run") += 1;
            } else {
                out.push(1);
            }
        }
        out
    }

    pub fn connected_components(&self) -> Vec<HyperMultigraph> {
        component_masks(&self.edges)
            .into_iter()
            .map(|points| {
                let part: Vec<u64> = self.edges.iter().copied().filter(|e| e & points != 0).collect();
                from_masks(self.k, &part).expect("a component of a valid class is valid")
            })
            .collect()
    }

    pub fn from_key(key: &ClassKey) -> HyperMultigraph {
        from_masks(key.k(), &key.edge_masks()).expect("keys describe valid classes")
    }

    /// Disjoint union of two classes of equal uniformity.
    pub fn disjoint_union(&self, other: &HyperMultigraph) -> Result<HyperMultigraph> {
        if self.k != other.k {
            return Err(Error::MismatchedUniformity {
                left: self.k,
                right: other.k,
            });
        }
        if self.vertices + other.vertices > 64 {
            return Err(Error::capacity("points in a disjoint union", self.vertices + other.vertices, 64));
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| e << self.vertices));
        from_masks(self.k, &edges)
    }

    pub fn to_json(&self) -> Value {
        json!({ "k": self.k, "vertices": self.vertices, "hyperedges": self.hyperedges() })
    }

    /// Edge list such as `\{0,1\},\{1,2\}` for LaTeX subscripts.
    pub fn to_latex(&self) -> String {
        self.hyperedges()
            .iter()
            .map(|e| {
                let pts: Vec<String> = e.iter().map(|p| p.to_string()).collect();
                format!("\\{{{}\\}}", pts.join(","))
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Canonical form of a multiset of `k`-subsets with arbitrary point labels.
pub fn canonicalize(k: usize, hyperedges: &[Vec<u64>]) -> Result<HyperMultigraph> {
    let mut labels: Vec<u64> = hyperedges.iter().flatten().copied().collect();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() > 64 {
        return Err(Error::capacity("points of a hyper-multigraph", labels.len(), 64));
    }
    let mut masks = Vec::with_capacity(hyperedges.len());
    for e in hyperedges {
        let mut pts = e.clone();
        pts.sort_unstable();
        pts.dedup();
        if pts.len() != k || e.len() != k {
            return Err(Error::Uniformity {
                expected: k,
                found: pts.len(),
            });
        }
        masks.push(
            pts.iter()
                .fold(0u64, |m, p| m | 1 << labels.binary_search(p).expect("label collected above")),
        );
    }
    from_masks(k, &masks)
}

/// Canonical form of hyperedges given as point masks; unused points are
/// dropped.
pub(crate) fn from_masks(k: usize, masks: &[u64]) -> Result<HyperMultigraph> {
    if k == 0 {
        return Err(Error::Parameter("uniformity must be at least 1".into()));
    }
    if k > u8::MAX as usize || masks.len() > u8::MAX as usize {
        return Err(Error::capacity("hyperedge count", masks.len(), u8::MAX as u64));
    }
    if let Some(e) = masks.iter().find(|e| e.count_ones() as usize != k) {
        return Err(Error::Uniformity {
            expected: k,
            found: e.count_ones() as usize,
        });
    }
    let used = masks.iter().fold(0u64, |a, e| a | e);
    let points: Vec<usize> = BitIter(used).collect();
    let m = points.len();
    let e = masks.len();
    if m + e > MAX_INCIDENCE_ORDER {
        return Err(Error::capacity("points plus hyperedges", m + e, MAX_INCIDENCE_ORDER as u64));
    }
    let mut compress = [0usize; 64];
    for (i, &p) in points.iter().enumerate() {
        compress[p] = i;
    }
    // incidence graph: points 0..m, hyperedge nodes m..m+e
    let mut adj = vec![0u64; m + e];
    for (j, &mask) in masks.iter().enumerate() {
        for p in BitIter(mask) {
            let i = compress[p];
            adj[i] |= 1 << (m + j);
            adj[m + j] |= 1 << i;
        }
    }
    let colors: Vec<u32> = (0..m + e).map(|v| u32::from(v >= m)).collect();
    let lab = canonical_labeling(&adj, &colors);
    let mut pos = vec![0usize; m + e];
    for (p, &v) in lab.order.iter().enumerate() {
        pos[v] = p;
    }
    let mut edges: Vec<u64> = (m..m + e)
        .map(|node| BitIter(adj[node]).fold(0u64, |a, i| a | 1 << pos[i]))
        .collect();
    edges.sort_unstable_by_key(|&mask| lex_key(mask));

    let mut key = vec![k as u8, m as u8, e as u8];
    for &mask in &edges {
        key.extend(BitIter(mask).map(|p| p as u8));
    }
    // twin hyperedge nodes contribute prod mult! to the incidence group
    let mut aut = lab.aut_order;
    let mut run = 1u32;
    for i in 1..=edges.len() {
        if i < edges.len() && edges[i] == edges[i - 1] {
            run += 1;
            aut /= BigUint::from(run);
        } else {
            run = 1;
        }
    }
    Ok(HyperMultigraph {
        k,
        vertices: m,
        edges,
        aut_order: aut,
        key: ClassKey(key),
    })
}

/// Sort key giving the lexicographic order of sorted point lists.
fn lex_key(mask: u64) -> Vec<u32> {
    BitIter(mask).map(|p| p as u32).collect()
}

/// Point sets of the connected components (hyperedges sharing a point are
/// linked), ordered by least point.
fn component_masks(edges: &[u64]) -> Vec<u64> {
    let mut uf = UnionFind::new(64);
    for &e in edges {
        let first = e.trailing_zeros() as usize;
        for p in BitIter(e) {
            uf.union(first, p);
        }
    }
    let used = edges.iter().fold(0u64, |a, e| a | e);
    let mut comps: Vec<u64> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for p in BitIter(used) {
        let r = uf.find(p);
        match roots.iter().position(|&x| x == r) {
            Some(i) => comps[i] |= 1 << p,
            None => {
                roots.push(r);
                comps.push(1 << p);
            }
        }
    }
    comps
}

/// `n (n-1) ... (n-m+1)`.
pub(crate) fn falling(n: u64, m: usize) -> BigUint {
    if (m as u64) > n {
        return BigUint::ZERO;
    }
    (0..m as u64).fold(BigUint::one(), |acc, i| acc * (n - i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(k: usize, edges: &[&[u64]]) -> HyperMultigraph {
        canonicalize(k, &edges.iter().map(|e| e.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn relabelling_and_multiplicity() {
        assert_eq!(h(2, &[&[7, 9], &[9, 3]]).key(), h(2, &[&[0, 1], &[1, 2]]).key());
        let double = h(2, &[&[1, 2], &[1, 2]]);
        assert_eq!(*double.aut_order(), BigUint::from(2u32));
        assert_eq!(double.multiplicities(), vec![2]);
        let part = h(1, &[&[1], &[1], &[2]]);
        let mut mult = part.multiplicities();
        mult.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(mult, vec![2, 1]);
        assert!(matches!(canonicalize(2, &[vec![1, 2, 3]]), Err(Error::Uniformity { .. })));
        assert!(matches!(canonicalize(2, &[vec![1, 1]]), Err(Error::Uniformity { .. })));
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(*h(2, &[&[0, 1], &[1, 2], &[0, 2]]).aut_order(), BigUint::from(6u32));
        assert_eq!(*h(2, &[&[0, 1], &[1, 2], &[2, 3]]).aut_order(), BigUint::from(2u32));
        assert_eq!(*h(2, &[&[0, 1], &[0, 1], &[0, 1]]).aut_order(), BigUint::from(2u32));
        // partition (2,1,1): the two singletons may swap
        assert_eq!(*h(1, &[&[0], &[0], &[1], &[2]]).aut_order(), BigUint::from(2u32));
    }

    #[test]
    fn components() {
        assert_eq!(h(2, &[&[0, 1], &[2, 3]]).connected_components().len(), 2);
        assert_eq!(h(2, &[&[0, 1], &[1, 2]]).connected_components().len(), 1);
        let parts = h(1, &[&[0], &[0], &[1]]).connected_components();
        let mut sizes: Vec<usize> = parts.iter().map(|p| p.edge_count()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2]);
    }

    #[test]
    fn keys_round_trip() {
        let x = h(3, &[&[4, 5, 6], &[6, 7, 8], &[4, 5, 6]]);
        assert_eq!(HyperMultigraph::from_key(x.key()), x);
        let u = x.disjoint_union(&h(3, &[&[0, 1, 2]])).unwrap();
        assert_eq!(u.edge_count(), 4);
        assert_eq!(u.connected_components().len(), 2);
    }
}
