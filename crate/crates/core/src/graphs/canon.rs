//! Canonical labelling of vertex-coloured graphs on at most 64 vertices.
//!
//! Individualisation-refinement: the ordered partition is refined to an
//! equitable one, then the search branches on the first smallest
//! non-singleton cell. The canonical labelling is the leaf whose permuted
//! adjacency rows are lexicographically least. Automorphisms found at
//! equivalent leaves prune sibling branches in the same orbit, and the
//! orbit sizes along the first path multiply to `|Aut|`.

use num_bigint::BigUint;
use num_traits::One;

use crate::graphs::simple::BitIter;

/// Output of [`canonical_labeling`].
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `order[p]` is the original vertex placed at canonical position `p`.
    pub order: Vec<usize>,
    /// Adjacency rows of the relabelled graph, indexed by position.
    pub rows: Vec<u64>,
    pub aut_order: BigUint,
    /// Automorphisms found during the search, as vertex maps. They generate
    /// the full automorphism group.
    pub generators: Vec<Vec<usize>>,
}

impl Labeling {
    /// Orbit representative (least vertex) of every vertex under the
    /// automorphism group.
    pub fn orbits(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.order.len());
        for g in &self.generators {
            for (x, &y) in g.iter().enumerate() {
                uf.union(x, y);
            }
        }
        (0..self.order.len()).map(|v| uf.min_of(v)).collect()
    }
}

/// Canonically labels the graph with adjacency `adj` and vertex colours
/// `colors`. Colours are respected: positions are grouped by ascending
/// colour, so two inputs with the same colour multiset get identical
/// `rows` iff they are colour-preserving isomorphic.
pub fn canonical_labeling(adj: &[u64], colors: &[u32]) -> Labeling {
    let n = adj.len();
    assert!(n <= 64, "canonical labelling supports at most 64 vertices");
    assert_eq!(colors.len(), n);
    if n == 0 {
        return Labeling {
            order: vec![],
            rows: vec![],
            aut_order: BigUint::one(),
            generators: vec![],
        };
    }
    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Vec<u64> = palette
        .iter()
        .map(|&c| {
            (0..n)
                .filter(|&v| colors[v] == c)
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect();

    let mut search = Search {
        adj,
        first: None,
        best: None,
        generators: Vec::new(),
        level_orbits: Vec::new(),
    };
    let mut seq = Vec::new();
    search.descend(cells, &mut seq, true);

    let best = search.best.expect("search visits at least one leaf");
    let aut_order = search
        .level_orbits
        .iter()
        .fold(BigUint::one(), |acc, &s| acc * BigUint::from(s));
    Labeling {
        order: best.order,
        rows: best.rows,
        aut_order,
        generators: search.generators,
    }
}

#[derive(Clone)]
struct Leaf {
    seq: Vec<usize>,
    order: Vec<usize>,
    rows: Vec<u64>,
}

struct Search<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    level_orbits: Vec<usize>,
}

impl Search<'_> {
    /// Returns `Some(level)` when the search should unwind to the node at
    /// depth `level`.
    fn descend(&mut self, mut cells: Vec<u64>, seq: &mut Vec<usize>, first_path: bool) -> Option<usize> {
        refine(self.adj, &mut cells);
        if cells.len() == self.adj.len() {
            return self.leaf(&cells, seq);
        }

        let (t, target) = cells
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|&(i, c)| (c.count_ones(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let level = seq.len();
        let mut explored: Vec<usize> = Vec::new();
        let mut orbit_cache: Option<(usize, UnionFind)> = None;

        for w in BitIter(target) {
            if !explored.is_empty() {
                let stale = orbit_cache
                    .as_ref()
                    .is_none_or(|(count, _)| *count != self.generators.len());
                if stale {
                    orbit_cache = Some((self.generators.len(), self.orbits_fixing(seq)));
                }
                let uf = &mut orbit_cache.as_mut().unwrap().1;
                if explored.iter().any(|&e| uf.same(e, w)) {
                    continue;
                }
            }
            let on_first = first_path && explored.is_empty();
            explored.push(w);

            let mut child = cells.clone();
            individualize(&mut child, t, w);
            seq.push(w);
            let jump = self.descend(child, seq, on_first);
            seq.pop();
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }

        if first_path {
            let first_child = target.trailing_zeros() as usize;
            let mut uf = self.orbits_fixing(seq);
            let size = BitIter(target).filter(|&v| uf.same(v, first_child)).count();
            if self.level_orbits.len() <= level {
                self.level_orbits.resize(level + 1, 1);
            }
            self.level_orbits[level] = size;
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], seq: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let rows = permuted_rows(self.adj, &order);
        let leaf = Leaf {
            seq: seq.to_vec(),
            order,
            rows,
        };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        if leaf.rows == first.rows {
            let jump = common_prefix(&leaf.seq, &first.seq);
            let gen = mapping(&first.order, &leaf.order);
            self.push_generator(gen);
            return Some(jump);
        }
        let best = self.best.as_ref().unwrap();
        match leaf.rows.cmp(&best.rows) {
            std::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let jump = common_prefix(&leaf.seq, &best.seq);
                let gen = mapping(&best.order, &leaf.order);
                self.push_generator(gen);
                Some(jump)
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    fn push_generator(&mut self, gen: Vec<usize>) {
        if gen.iter().enumerate().any(|(i, &j)| i != j) {
            self.generators.push(gen);
        }
    }

    fn orbits_fixing(&self, seq: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.adj.len());
        for g in &self.generators {
            if seq.iter().all(|&v| g[v] == v) {
                for (x, &y) in g.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        uf
    }
}

fn mapping(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut g = vec![0; from.len()];
    for (p, &v) in from.iter().enumerate() {
        g[v] = to[p];
    }
    g
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

pub(crate) fn permuted_rows(adj: &[u64], order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; order.len()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    order
        .iter()
        .map(|&v| BitIter(adj[v]).fold(0u64, |m, u| m | 1 << pos[u]))
        .collect()
}

fn individualize(cells: &mut Vec<u64>, t: usize, w: usize) {
    let rest = cells[t] & !(1 << w);
    cells[t] = 1 << w;
    cells.insert(t + 1, rest);
}

/// Refines the ordered partition until it is equitable. Fragments of a
/// split cell replace it in place, ordered by neighbour count.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell.count_ones() < 2 {
                    i += 1;
                    continue;
                }
                let mut groups: Vec<(u32, u64)> = Vec::new();
                for v in BitIter(cell) {
                    let c = (adj[v] & splitter).count_ones();
                    match groups.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, m)) => *m |= 1 << v,
                        None => groups.push((c, 1 << v)),
                    }
                }
                if groups.len() == 1 {
                    i += 1;
                    continue;
                }
                groups.sort_unstable_by_key(|&(c, _)| c);
                let len = groups.len();
                cells.splice(i..=i, groups.into_iter().map(|(_, m)| m));
                i += len;
                changed = true;
            }
            s += 1;
        }
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    // Roots are always the least element of their class.
    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }

    pub(crate) fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    fn min_of(&mut self, x: usize) -> usize {
        self.find(x)
    }
}
