//! Backtracking search for (induced) subgraph embeddings into a host.

use serde_json::{json, Value};

use super::simple::SimpleGraph;
use crate::error::{Error, Result};
use crate::homomorphism::{DenseGraph, HostGraph, HostKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Induced,
    Subgraph,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Induced => "induced",
            Mode::Subgraph => "subgraph",
        }
    }
}

/// An injective vertex map from a pattern into a host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// `map[v]` is the host vertex assigned to pattern vertex `v`.
    pub map: Vec<usize>,
    pub mode: Mode,
}

impl Embedding {
    /// Checks injectivity, edge preservation and, in induced mode,
    /// non-edge preservation.
    pub fn verify(&self, g: &SimpleGraph, host: &HostGraph) -> bool {
        let n = g.order();
        if self.map.len() != n || self.map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        for u in 0..n {
            for v in u + 1..n {
                if self.map[u] == self.map[v] {
                    return false;
                }
                let e = host.adjacent(self.map[u], self.map[v]);
                match (g.has_edge(u, v), self.mode) {
                    (true, _) if !e => return false,
                    (false, Mode::Induced) if e => return false,
                    _ => {}
                }
            }
        }
        true
    }

    pub fn to_json(&self, g: &SimpleGraph, host: &HostGraph) -> Value {
        let map: Vec<Value> = self
            .map
            .iter()
            .enumerate()
            .map(|(v, &h)| json!([v, host.vertex_label(h)]))
            .collect();
        json!({ "mode": self.mode.as_str(), "pattern": g.to_json(), "map": map })
    }
}

trait Adjacency {
    fn order(&self) -> usize;
    fn adjacent(&self, u: usize, v: usize) -> bool;
    fn neighbors(&self, v: usize) -> Vec<usize>;
    fn degree(&self, v: usize) -> usize;
}

impl Adjacency for DenseGraph {
    fn order(&self) -> usize {
        DenseGraph::order(self)
    }
    fn adjacent(&self, u: usize, v: usize) -> bool {
        DenseGraph::adjacent(self, u, v)
    }
    fn neighbors(&self, v: usize) -> Vec<usize> {
        DenseGraph::neighbors(self, v).collect()
    }
    fn degree(&self, v: usize) -> usize {
        DenseGraph::degree(self, v)
    }
}

impl Adjacency for HostGraph {
    fn order(&self) -> usize {
        HostGraph::order(self)
    }
    fn adjacent(&self, u: usize, v: usize) -> bool {
        HostGraph::adjacent(self, u, v)
    }
    fn neighbors(&self, v: usize) -> Vec<usize> {
        HostGraph::neighbors(self, v)
    }
    fn degree(&self, v: usize) -> usize {
        HostGraph::degree(self, v)
    }
}

/// Searches for an embedding of `g` into `host`. Returns `Ok(None)` only
/// after an exhaustive search; every candidate assignment counts as one
/// node against `budget`.
///
/// Pattern vertices are placed most-constrained first and host candidates
/// are tried in increasing order, so the result is deterministic. On
/// vertex-transitive hosts the first pattern vertex is pinned to vertex 0.
pub fn find_embedding(g: &SimpleGraph, host: &HostGraph, mode: Mode, budget: u64) -> Result<Option<Embedding>> {
    if budget == 0 {
        return Err(Error::BudgetExceeded { budget });
    }
    let n = g.order();
    if n > host.order() {
        return Ok(None);
    }
    if let HostKind::Complete(_) = host.kind() {
        let ok = mode == Mode::Subgraph || g.size() == n * n.saturating_sub(1) / 2;
        return Ok(ok.then(|| Embedding {
            map: (0..n).collect(),
            mode,
        }));
    }
    let search = Search::new(g, mode, budget, host.is_vertex_transitive());
    let map = match host.dense() {
        Some(d) => search.run(d)?,
        None => search.run(host)?,
    };
    Ok(map.map(|map| Embedding { map, mode }))
}

struct Search<'a> {
    g: &'a SimpleGraph,
    mode: Mode,
    budget: u64,
    pin_root: bool,
    order: Vec<usize>,
    // for each position, earlier positions adjacent / non-adjacent in g
    back_adj: Vec<Vec<usize>>,
    back_non: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a SimpleGraph, mode: Mode, budget: u64, pin_root: bool) -> Self {
        let order = constraint_order(g);
        let mut back_adj = Vec::with_capacity(order.len());
        let mut back_non = Vec::with_capacity(order.len());
        for (i, &v) in order.iter().enumerate() {
            let (a, b): (Vec<usize>, Vec<usize>) = (0..i).partition(|&j| g.has_edge(v, order[j]));
            back_adj.push(a);
            back_non.push(b);
        }
        Search {
            g,
            mode,
            budget,
            pin_root,
            order,
            back_adj,
            back_non,
        }
    }

    fn run<A: Adjacency>(&self, host: &A) -> Result<Option<Vec<usize>>> {
        let n = self.order.len();
        if n == 0 {
            return Ok(Some(vec![]));
        }
        let mut images = vec![usize::MAX; n];
        let mut nodes = 0u64;
        if self.extend(host, 0, &mut images, &mut nodes)? {
            let mut map = vec![0; n];
            for (i, &v) in self.order.iter().enumerate() {
                map[v] = images[i];
            }
            return Ok(Some(map));
        }
        Ok(None)
    }

    fn extend<A: Adjacency>(
        &self,
        host: &A,
        pos: usize,
        images: &mut [usize],
        nodes: &mut u64,
    ) -> Result<bool> {
        if pos == self.order.len() {
            return Ok(true);
        }
        let v = self.order[pos];
        let need_degree = self.g.degree(v);
        let candidates: Vec<usize> = match self.back_adj[pos].first() {
            Some(&j) => host.neighbors(images[j]),
            None if pos == 0 && self.pin_root => vec![0],
            None => (0..host.order()).collect(),
        };
        for c in candidates {
            if images[..pos].contains(&c) {
                continue;
            }
            if !self.back_adj[pos].iter().all(|&j| host.adjacent(images[j], c)) {
                continue;
            }
            if self.mode == Mode::Induced && self.back_non[pos].iter().any(|&j| host.adjacent(images[j], c)) {
                continue;
            }
            if host.degree(c) < need_degree {
                continue;
            }
            *nodes += 1;
            if *nodes > self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            images[pos] = c;
            if self.extend(host, pos + 1, images, nodes)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Highest degree first, then repeatedly the vertex with the most already
/// placed neighbours (ties: higher degree, lower index).
fn constraint_order(g: &SimpleGraph) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| g.has_edge(u, v)).count();
                (links, g.degree(v), std::cmp::Reverse(v))
            })
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}
