//! Induced, subgraph and functional indices over host series, cycle
//! certificates and invariant comparisons.

mod distinguish;
mod pancyclic;

use std::sync::Arc;

use num_bigint::BigUint;
use serde_json::{json, Value};

pub use distinguish::{
    distinguish, functional_index, tree_conjecture_scan, Distinction, FunctionalIndex, FunctionalSeries,
    HostInvariant, Method, TreeScan, TreeScanOrder, MAX_SCAN_ORDER,
};
pub use pancyclic::{find_cycle, pancyclicity_certificate, PancyclicityReport, MAX_CERTIFY_ORDER};

use crate::error::{Error, Result};
use crate::galois::bounds::paley_order_level;
use crate::galois::Field;
use crate::graphs::{find_embedding, to_graph6, Embedding, Mode, SimpleGraph};
use crate::homomorphism::HostGraph;

/// Hosts above this order are skipped rather than searched.
pub const SEARCH_LIMIT: u64 = 1_000_000;

/// The closed-form subgraph index is re-derived by explicit search when the
/// host at that level has at most this many vertices.
pub const CROSS_CHECK_LIMIT: u64 = 10_000;

/// A host series `H_0, H_1, ...` (Paley) or `H_1, H_2, ...` (Kneser).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesSpec {
    /// `H_n = P((q^2)^(3^n))` with `q = p^(3^m)`.
    Paley { p: u64, m: u32 },
    /// `H_n` is the Kneser graph on `n`-subsets; a pattern on `v` vertices
    /// needs only the slice on a ground set of size `n v`.
    Kneser,
}

impl SeriesSpec {
    pub fn first_level(&self) -> u32 {
        match self {
            SeriesSpec::Paley { .. } => 0,
            SeriesSpec::Kneser => 1,
        }
    }

    /// `q = p^(3^m)`, the base of a Paley series.
    pub fn paley_base(&self) -> Option<u64> {
        match *self {
            SeriesSpec::Paley { p, m } => 3u32.checked_pow(m).and_then(|e| p.checked_pow(e)),
            SeriesSpec::Kneser => None,
        }
    }

    /// Order of `H_level` for a pattern on `pattern_order` vertices.
    pub fn host_order(&self, level: u32, pattern_order: usize) -> BigUint {
        match *self {
            SeriesSpec::Paley { p, m } => {
                let exp = BigUint::from(2u32) * BigUint::from(3u32).pow(m + level);
                match u32::try_from(&exp) {
                    Ok(e) => BigUint::from(p).pow(e),
                    // far beyond anything searchable
                    Err(_) => BigUint::from(u64::MAX),
                }
            }
            SeriesSpec::Kneser => {
                let n = level as u64 * pattern_order.max(1) as u64;
                let k = level as u64;
                (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
            }
        }
    }

    /// `H_level`, built explicitly.
    pub fn host(&self, level: u32, pattern_order: usize) -> Result<HostGraph> {
        match *self {
            SeriesSpec::Paley { p, m } => {
                let d = 2 * 3u32
                    .checked_pow(m + level)
                    .ok_or_else(|| Error::capacity("Paley series level", level, 20))?;
                HostGraph::paley(Arc::new(Field::of_order(p, d)?))
            }
            SeriesSpec::Kneser => HostGraph::kneser(level as usize * pattern_order.max(1), level as usize),
        }
    }

    pub fn to_json(&self) -> Value {
        match *self {
            SeriesSpec::Paley { p, m } => json!({ "kind": "paley", "p": p, "m": m }),
            SeriesSpec::Kneser => json!({ "kind": "kneser" }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexValue {
    Level(u32),
    /// No level up to the cap was found to work.
    ExceedsCap(u32),
}

#[derive(Clone, Debug)]
pub struct Witness {
    pub level: u32,
    pub host: HostGraph,
    pub embedding: Embedding,
}

#[derive(Clone, Debug)]
pub struct IndexResult {
    pub operation: &'static str,
    pub pattern: SimpleGraph,
    pub series: SeriesSpec,
    pub value: IndexValue,
    /// Every level below the value was refuted.
    pub exact: bool,
    pub flags: Vec<String>,
    pub witness: Option<Witness>,
    pub refuted_levels: Vec<u32>,
    /// Levels neither found nor refuted, with the reason.
    pub skipped_levels: Vec<(u32, &'static str)>,
}

impl IndexResult {
    pub fn level(&self) -> Option<u32> {
        match self.value {
            IndexValue::Level(n) => Some(n),
            IndexValue::ExceedsCap(_) => None,
        }
    }

    pub fn has_flag(&self, flag: &str) -> bool {
        self.flags.iter().any(|f| f == flag)
    }

    pub fn to_json(&self) -> Value {
        let value = match self.value {
            IndexValue::Level(n) => json!(n),
            IndexValue::ExceedsCap(c) => json!({ "exceedsCap": c }),
        };
        let witness = self.witness.as_ref().map(|w| {
            json!({
                "level": w.level,
                "host": w.host.describe(),
                "embedding": w.embedding.to_json(&self.pattern, &w.host),
            })
        });
        let skipped: Vec<Value> = self
            .skipped_levels
            .iter()
            .map(|(l, why)| json!({ "level": l, "reason": why }))
            .collect();
        json!({
            "operation": self.operation,
            "inputs": { "graph6": to_graph6(&self.pattern), "series": self.series.to_json() },
            "value": value,
            "exact": self.exact,
            "flags": self.flags,
            "witness": witness,
            "refutedLevels": self.refuted_levels,
            "skippedLevels": skipped,
        })
    }
}

/// Least level whose host contains `g` as an induced subgraph.
pub fn induced_index(g: &SimpleGraph, series: SeriesSpec, cap: u32, budget: u64) -> Result<IndexResult> {
    search_index(g, series, cap, budget, Mode::Induced)
}

/// Least level whose host contains `g` as a subgraph. Cycles and paths on a
/// Paley series use the closed form (least `n` with `(q^2)^(3^n) >= |V(g)|`),
/// re-derived by an explicit cycle search when the host is small enough.
pub fn subgraph_index(g: &SimpleGraph, series: SeriesSpec, cap: u32, budget: u64) -> Result<IndexResult> {
    if let (Some(q), Some(seq)) = (series.paley_base(), cycle_or_path(g)) {
        return closed_form_index(g, series, q, seq, cap, budget);
    }
    search_index(g, series, cap, budget, Mode::Subgraph)
}

fn search_index(g: &SimpleGraph, series: SeriesSpec, cap: u32, budget: u64, mode: Mode) -> Result<IndexResult> {
    let mut result = IndexResult {
        operation: mode.as_str(),
        pattern: g.clone(),
        series,
        value: IndexValue::ExceedsCap(cap),
        exact: false,
        flags: vec![],
        witness: None,
        refuted_levels: vec![],
        skipped_levels: vec![],
    };
    for level in series.first_level()..=cap {
        let order = series.host_order(level, g.order());
        if order < BigUint::from(g.order()) {
            result.refuted_levels.push(level);
            continue;
        }
        if order > BigUint::from(SEARCH_LIMIT) {
            result.skipped_levels.push((level, "hostTooLarge"));
            continue;
        }
        let host = series.host(level, g.order())?;
        match find_embedding(g, &host, mode, budget) {
            Ok(Some(embedding)) => {
                result.value = IndexValue::Level(level);
                result.witness = Some(Witness { level, host, embedding });
                break;
            }
            Ok(None) => result.refuted_levels.push(level),
            Err(Error::BudgetExceeded { .. }) => result.skipped_levels.push((level, "budgetExceeded")),
            Err(e) => return Err(e),
        }
    }
    finish(&mut result);
    Ok(result)
}

fn finish(result: &mut IndexResult) {
    if let IndexValue::Level(n) = result.value {
        result.exact = result.skipped_levels.iter().all(|&(l, _)| l > n);
        if !result.exact {
            result.flags.push("upperBoundOnly".into());
        }
        if n == 0 {
            result.flags.push("usedLevelZero".into());
        }
    }
}

#[derive(Clone, Debug)]
enum Shape {
    Cycle(Vec<usize>),
    Path(Vec<usize>),
}

/// The vertex sequence of `g` if it is a cycle (order >= 3) or a path.
fn cycle_or_path(g: &SimpleGraph) -> Option<Shape> {
    let n = g.order();
    if n == 0 || !g.is_connected() || (0..n).any(|v| g.degree(v) > 2) {
        return None;
    }
    let cycle = g.size() == n;
    if !cycle && g.size() != n - 1 {
        return None;
    }
    let first = if cycle { 0 } else { (0..n).find(|&v| g.degree(v) <= 1)? };
    let mut seq = vec![first];
    let mut prev = usize::MAX;
    let mut cur = first;
    while seq.len() < n {
        let next = g.neighbors(cur).find(|&w| w != prev)?;
        seq.push(next);
        prev = cur;
        cur = next;
    }
    Some(if cycle { Shape::Cycle(seq) } else { Shape::Path(seq) })
}

fn closed_form_index(
    g: &SimpleGraph,
    series: SeriesSpec,
    q: u64,
    shape: Shape,
    cap: u32,
    budget: u64,
) -> Result<IndexResult> {
    let k = g.order();
    let level = paley_order_level(q, k as u64);
    let mut result = IndexResult {
        operation: "subgraph",
        pattern: g.clone(),
        series,
        value: if level <= cap { IndexValue::Level(level) } else { IndexValue::ExceedsCap(cap) },
        exact: level <= cap,
        flags: vec!["usedClosedForm".into()],
        witness: None,
        // lower hosts have fewer than k vertices
        refuted_levels: (0..level.min(cap + 1)).collect(),
        skipped_levels: vec![],
    };
    if level > cap {
        return Ok(result);
    }
    if level == 0 {
        result.flags.push("usedLevelZero".into());
    }
    if series.host_order(level, k) > BigUint::from(CROSS_CHECK_LIMIT) {
        result.flags.push("closedFormUnverified".into());
        return Ok(result);
    }
    let host = series.host(level, k)?;
    let found = match &shape {
        Shape::Cycle(seq) => find_cycle(&host, k, budget).map(|c| c.map(|c| place(seq, &c))),
        Shape::Path(seq) if k >= 3 => find_cycle(&host, k, budget).map(|c| c.map(|c| place(seq, &c))),
        Shape::Path(_) => find_embedding(g, &host, Mode::Subgraph, budget).map(|e| e.map(|e| e.map)),
    };
    match found {
        Ok(Some(map)) => {
            let embedding = Embedding { map, mode: Mode::Subgraph };
            if !embedding.verify(g, &host) {
                return Err(Error::Internal("cross-check produced an invalid embedding".into()));
            }
            result.flags.push("closedFormCrossChecked".into());
            result.witness = Some(Witness { level, host, embedding });
        }
        Ok(None) => {
            return Err(Error::Internal(format!(
                "closed form gives level {level} but no {k}-vertex cycle exists there"
            )))
        }
        Err(Error::BudgetExceeded { .. }) => result.flags.push("crossCheckInconclusive".into()),
        Err(e) => return Err(e),
    }
    Ok(result)
}

/// Sends the `i`-th vertex of `seq` to the `i`-th vertex of a host cycle.
fn place(seq: &[usize], cycle: &[usize]) -> Vec<usize> {
    let mut map = vec![0; seq.len()];
    for (i, &v) in seq.iter().enumerate() {
        map[v] = cycle[i];
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;

    const P5: SeriesSpec = SeriesSpec::Paley { p: 5, m: 0 };

    #[test]
    fn induced_in_the_first_paley_host() {
        let c5 = SimpleGraph::cycle(5).unwrap();
        let r = induced_index(&c5, P5, 1, 1 << 24).unwrap();
        assert_eq!(r.level(), Some(0));
        assert!(r.exact && r.has_flag("usedLevelZero"));
        let w = r.witness.as_ref().unwrap();
        assert!(w.embedding.verify(&c5, &w.host));

        let k1 = SimpleGraph::empty(1).unwrap();
        assert_eq!(induced_index(&k1, SeriesSpec::Kneser, 3, 100).unwrap().level(), Some(1));
    }

    #[test]
    fn cliques_beyond_the_first_host() {
        let k6 = SimpleGraph::complete(6).unwrap();
        let r = induced_index(&k6, P5, 1, 1 << 26).unwrap();
        assert_eq!(r.refuted_levels, vec![0]);
        assert_eq!(r.level(), Some(1));
        let r = induced_index(&k6, P5, 0, 1 << 26).unwrap();
        assert_eq!(r.value, IndexValue::ExceedsCap(0));
    }

    #[test]
    fn kneser_series() {
        // K_3 needs three disjoint subsets: already there at level 1
        let k3 = SimpleGraph::complete(3).unwrap();
        assert_eq!(induced_index(&k3, SeriesSpec::Kneser, 3, 1 << 20).unwrap().level(), Some(1));
        // an edgeless pair is not induced in a complete graph
        let e2 = SimpleGraph::empty(2).unwrap();
        let r = induced_index(&e2, SeriesSpec::Kneser, 3, 1 << 20).unwrap();
        assert_eq!(r.level(), Some(2));
        assert_eq!(r.refuted_levels, vec![1]);
        assert_eq!(subgraph_index(&e2, SeriesSpec::Kneser, 3, 1 << 20).unwrap().level(), Some(1));
    }

    #[test]
    fn closed_form_cycles_and_paths() {
        let c20 = SimpleGraph::cycle(20).unwrap();
        let r = subgraph_index(&c20, P5, 3, 1 << 24).unwrap();
        assert_eq!(r.level(), Some(0));
        assert!(r.has_flag("usedClosedForm") && r.has_flag("closedFormCrossChecked"));

        let c26 = SimpleGraph::cycle(26).unwrap();
        let r = subgraph_index(&c26, P5, 3, 1 << 24).unwrap();
        assert_eq!(r.level(), Some(1));
        assert!(r.has_flag("closedFormUnverified"));
        assert!(r.witness.is_none());

        let p10 = SimpleGraph::path(10).unwrap();
        let r = subgraph_index(&p10, P5, 3, 1 << 24).unwrap();
        assert_eq!(r.level(), Some(0));
        let w = r.witness.unwrap();
        assert!(w.embedding.verify(&p10, &w.host));

        let j = subgraph_index(&c20, P5, 3, 1 << 24).unwrap().to_json();
        assert_eq!(j["value"], 0);
        assert_eq!(j["operation"], "subgraph");
    }

    #[test]
    fn shapes() {
        assert!(matches!(cycle_or_path(&SimpleGraph::cycle(4).unwrap()), Some(Shape::Cycle(_))));
        assert!(matches!(cycle_or_path(&SimpleGraph::path(4).unwrap()), Some(Shape::Path(_))));
        assert!(cycle_or_path(&SimpleGraph::star(3).unwrap()).is_none());
        let relabeled = SimpleGraph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        match cycle_or_path(&relabeled) {
            Some(Shape::Path(seq)) => assert_eq!(seq, vec![1, 3, 0, 2]),
            other => panic!("{other:?}"),
        }
    }
}
