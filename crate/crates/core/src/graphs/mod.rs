//! Simple graphs: representation, graph6 I/O, canonical forms, generation and
//! embedding search.

pub mod canon;
mod embed;
mod generate;
mod graph6;
mod simple;

use num_bigint::BigUint;

use crate::error::{Error, Result};

pub use embed::{find_embedding, Embedding, Mode};
pub use generate::{enumerate_graphs, enumerate_trees, MAX_GRAPH_ORDER, MAX_TREE_ORDER};
pub use graph6::{parse_graph6, to_graph6};
pub use simple::{BitIter, SimpleGraph, MAX_ORDER};

pub(crate) use simple::mask_below;

/// Isomorphism-class identifier of a simple graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalCode {
    /// Order byte followed by the upper triangle of the canonical adjacency
    /// matrix, packed column by column.
    pub code: Vec<u8>,
    pub aut_order: BigUint,
}

pub fn canonical_form(g: &SimpleGraph) -> CanonicalCode {
    let lab = canon::canonical_labeling(g.rows(), &vec![0; g.order()]);
    CanonicalCode {
        code: pack_rows(&lab.rows),
        aut_order: lab.aut_order,
    }
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &SimpleGraph) -> SimpleGraph {
    let lab = canon::canonical_labeling(g.rows(), &vec![0; g.order()]);
    SimpleGraph::from_rows(g.order(), lab.rows)
}

pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a).code == canonical_form(b).code
}

fn pack_rows(rows: &[u64]) -> Vec<u8> {
    let n = rows.len();
    let mut out = vec![n as u8];
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | (rows[u] >> v & 1) as u8;
            k += 1;
            if k % 8 == 0 {
                out.push(acc);
                acc = 0;
            }
        }
    }
    if k % 8 != 0 {
        out.push(acc << (8 - k % 8));
    }
    out
}

/// The two non-isomorphic graphs on five vertices with equal chromatic
/// symmetric functions (vertices shifted to start at 0).
pub fn stanley_pair() -> (SimpleGraph, SimpleGraph) {
    let g1 = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]);
    let g2 = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4)]);
    (g1.expect("valid edges"), g2.expect("valid edges"))
}

/// Largest edge count accepted by [`spanning_subgraphs`].
pub const MAX_SPANNING_EDGES: usize = 30;

/// All `2^|E|` spanning subgraphs `G_S`, indexed by edge subsets `S` in
/// bitmask order over `g.edges()`.
pub fn spanning_subgraphs(
    g: &SimpleGraph,
) -> Result<impl Iterator<Item = (Vec<(usize, usize)>, SimpleGraph)> + '_> {
    let edges = g.edges();
    if edges.len() > MAX_SPANNING_EDGES {
        return Err(Error::capacity("edge count for spanning subgraphs", edges.len(), MAX_SPANNING_EDGES as u64));
    }
    let n = g.order();
    Ok((0u64..1 << edges.len()).map(move |mask| {
        let subset: Vec<(usize, usize)> = BitIter(mask).map(|i| edges[i]).collect();
        let gs = SimpleGraph::from_edges(n, &subset).expect("edges of g are valid");
        (subset, gs)
    }))
}
