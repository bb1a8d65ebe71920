//! Separating graphs by invariants: pairwise verdicts, the functional index
//! of a family, and the tree scan.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graphs::{canonical_form, enumerate_trees, to_graph6, SimpleGraph};
use crate::homomorphism::{chromatic_polynomial, count_hom, hom_profile, x_h, HostGraph};
use crate::hypermulti::{ClassKey, HyperMultigraph};
use crate::symfunc::{chromatic_symmetric_function, direct_m_expansion, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ChromaticPoly,
    /// The chromatic symmetric function.
    XK1,
    /// The Kneser function at `k = 2`, in the monomial basis.
    XK2,
    /// Homomorphism counts into every graph up to the given order.
    HomProfile(usize),
}

impl Method {
    pub fn name(&self) -> String {
        match self {
            Method::ChromaticPoly => "chromatic_poly".into(),
            Method::XK1 => "x_k1".into(),
            Method::XK2 => "x_k2".into(),
            Method::HomProfile(m) => format!("hom_profile({m})"),
        }
    }
}

/// Verdict of [`distinguish`]. `witness` is the first differing invariant
/// component, absent when the invariants collide.
#[derive(Clone, Debug, PartialEq)]
pub struct Distinction {
    pub method: Method,
    pub isomorphic: bool,
    pub witness: Option<Value>,
}

impl Distinction {
    pub fn separated(&self) -> bool {
        self.witness.is_some()
    }

    pub fn to_json(&self, g1: &SimpleGraph, g2: &SimpleGraph) -> Value {
        json!({
            "operation": "distinguish",
            "inputs": { "graphs": [to_graph6(g1), to_graph6(g2)], "method": self.method.name() },
            "value": if self.separated() { "separated" } else { "collides" },
            "isomorphic": self.isomorphic,
            "witness": self.witness,
        })
    }
}

fn symfunc_difference(a: &SymFunc, b: &SymFunc) -> Option<Value> {
    let mut keys: Vec<&Vec<ClassKey>> = a.terms().keys().chain(b.terms().keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().find(|k| a.coefficient(k) != b.coefficient(k)).map(|k| {
        let classes: Vec<Value> = k.iter().map(|c| HyperMultigraph::from_key(c).to_json()).collect();
        json!({
            "basis": a.basis().as_str(),
            "classes": classes,
            "left": a.coefficient(k).to_string(),
            "right": b.coefficient(k).to_string(),
        })
    })
}

pub fn distinguish(g1: &SimpleGraph, g2: &SimpleGraph, method: Method) -> Result<Distinction> {
    let isomorphic = g1.order() == g2.order() && canonical_form(g1).code == canonical_form(g2).code;
    let witness = match method {
        Method::ChromaticPoly => {
            let (a, b) = (chromatic_polynomial(g1)?, chromatic_polynomial(g2)?);
            let zero = BigInt::from(0);
            (0..a.len().max(b.len()))
                .find(|&i| a.get(i).unwrap_or(&zero) != b.get(i).unwrap_or(&zero))
                .map(|i| {
                    json!({
                        "power": i,
                        "left": a.get(i).unwrap_or(&zero).to_string(),
                        "right": b.get(i).unwrap_or(&zero).to_string(),
                    })
                })
        }
        Method::XK1 => symfunc_difference(&chromatic_symmetric_function(g1)?, &chromatic_symmetric_function(g2)?),
        Method::XK2 => symfunc_difference(&direct_m_expansion(g1, 2)?, &direct_m_expansion(g2, 2)?),
        Method::HomProfile(max) => {
            let (a, b) = (hom_profile(g1, max)?, hom_profile(g2, max)?);
            a.first_difference(&b).map(|i| {
                json!({
                    "host": to_graph6(&a.hosts[i]),
                    "left": a.counts[i].to_string(),
                    "right": b.counts[i].to_string(),
                })
            })
        }
    };
    Ok(Distinction {
        method,
        isomorphic,
        witness,
    })
}

/// How the invariant at level `t` is computed.
#[derive(Clone, Debug)]
pub enum FunctionalSeries {
    /// `X_{K_{N,t}}` for `t = 1..=max_k`: the chromatic symmetric function at
    /// `t = 1`, the monomial expansion from `t = 2` on.
    Kneser { max_k: usize },
    /// One explicit host per level.
    Hosts { hosts: Vec<HostGraph>, invariant: HostInvariant },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HostInvariant {
    /// The full generating polynomial `X_H(G)`.
    XH,
    /// Its value at all ones, `|Hom(G, H)|`.
    HomCount,
}

impl FunctionalSeries {
    fn len(&self) -> usize {
        match self {
            FunctionalSeries::Kneser { max_k } => *max_k,
            FunctionalSeries::Hosts { hosts, .. } => hosts.len(),
        }
    }

    /// Exact serialisation of the level-`t` invariant (1-based).
    fn fingerprint(&self, g: &SimpleGraph, t: usize) -> Result<String> {
        Ok(match self {
            FunctionalSeries::Kneser { .. } if t == 1 => chromatic_symmetric_function(g)?.to_json().to_string(),
            FunctionalSeries::Kneser { .. } => direct_m_expansion(g, t)?.to_json().to_string(),
            FunctionalSeries::Hosts { hosts, invariant } => {
                let h = &hosts[t - 1];
                match invariant {
                    HostInvariant::XH => x_h(g, h)?.to_json(h).to_string(),
                    HostInvariant::HomCount => count_hom(g, h)?.to_string(),
                }
            }
        })
    }

    pub fn to_json(&self) -> Value {
        match self {
            FunctionalSeries::Kneser { max_k } => json!({ "kind": "kneser", "levels": max_k }),
            FunctionalSeries::Hosts { hosts, invariant } => json!({
                "kind": "hosts",
                "hosts": hosts.iter().map(|h| h.describe()).collect::<Vec<_>>(),
                "invariant": match invariant { HostInvariant::XH => "x_h", HostInvariant::HomCount => "hom_count" },
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalIndex {
    /// Least prefix length separating the family; `None` if the series ran
    /// out first.
    pub value: Option<usize>,
    pub series_length: usize,
    /// Number of invariant classes after each level.
    pub classes_per_level: Vec<usize>,
    /// A pair separated at the deciding level.
    pub last_resolved: Option<(usize, usize)>,
    /// Pairs still colliding when the series ran out.
    pub colliding: Vec<(usize, usize)>,
}

impl FunctionalIndex {
    pub fn to_json(&self, family: &[SimpleGraph], series: &FunctionalSeries) -> Value {
        let pair = |&(a, b): &(usize, usize)| json!([to_graph6(&family[a]), to_graph6(&family[b])]);
        json!({
            "operation": "functional",
            "inputs": { "family": family.iter().map(to_graph6).collect::<Vec<_>>(), "series": series.to_json() },
            "value": match self.value { Some(t) => json!(t), None => json!({ "exceedsLength": self.series_length }) },
            "flags": if family.len() <= 1 { json!(["singletonFamily"]) } else { json!([]) },
            "classesPerLevel": self.classes_per_level,
            "witness": self.last_resolved.as_ref().map(pair),
            "collidingPairs": self.colliding.iter().map(pair).collect::<Vec<_>>(),
        })
    }
}

/// Least `t` such that the invariants at levels `1..=t` separate every pair
/// of the family. A family with at most one member gets `t = 1`.
pub fn functional_index(family: &[SimpleGraph], series: &FunctionalSeries) -> Result<FunctionalIndex> {
    let mut codes: Vec<(Vec<u8>, usize)> = family.iter().enumerate().map(|(i, g)| (canonical_form(g).code, i)).collect();
    codes.sort();
    if let Some(w) = codes.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::Parameter(format!(
            "family members {} and {} are isomorphic",
            w[0].1.min(w[1].1),
            w[0].1.max(w[1].1)
        )));
    }
    let mut out = FunctionalIndex {
        value: None,
        series_length: series.len(),
        classes_per_level: vec![],
        last_resolved: None,
        colliding: vec![],
    };
    if family.len() <= 1 {
        out.value = Some(1);
        out.classes_per_level.push(family.len());
        return Ok(out);
    }
    let mut groups: Vec<Vec<usize>> = vec![(0..family.len()).collect()];
    for t in 1..=series.len() {
        let pending: Vec<usize> = groups.iter().filter(|g| g.len() > 1).flatten().copied().collect();
        let prints: BTreeMap<usize, String> = pending
            .par_iter()
            .map(|&i| Ok((i, series.fingerprint(&family[i], t)?)))
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for group in groups {
            if group.len() == 1 {
                next.push(group);
                continue;
            }
            let mut split: BTreeMap<&String, Vec<usize>> = BTreeMap::new();
            for &i in &group {
                split.entry(&prints[&i]).or_default().push(i);
            }
            if split.len() > 1 {
                let firsts: Vec<usize> = split.values().map(|g| g[0]).collect();
                out.last_resolved = Some((firsts[0].min(firsts[1]), firsts[0].max(firsts[1])));
            }
            next.extend(split.into_values());
        }
        next.sort();
        groups = next;
        out.classes_per_level.push(groups.len());
        if groups.len() == family.len() {
            out.value = Some(t);
            return Ok(out);
        }
    }
    for g in &groups {
        for (i, &a) in g.iter().enumerate() {
            for &b in &g[i + 1..] {
                out.colliding.push((a, b));
            }
        }
    }
    Ok(out)
}

/// Largest tree order accepted by [`tree_conjecture_scan`].
pub const MAX_SCAN_ORDER: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeScanOrder {
    pub order: usize,
    pub trees: usize,
    pub pairs: usize,
    /// graph6 of colliding pairs.
    pub collisions: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeScan {
    pub max_order: usize,
    pub orders: Vec<TreeScanOrder>,
}

impl TreeScan {
    pub fn collisions(&self) -> usize {
        self.orders.iter().map(|o| o.collisions.len()).sum()
    }

    pub fn to_json(&self) -> Value {
        let orders: Vec<Value> = self
            .orders
            .iter()
            .map(|o| json!({ "order": o.order, "trees": o.trees, "pairs": o.pairs, "collisions": o.collisions }))
            .collect();
        json!({
            "operation": "scanTrees",
            "inputs": { "maxOrder": self.max_order },
            "value": self.collisions(),
            "orders": orders,
        })
    }
}

/// Compares the chromatic symmetric functions of all trees of each order up
/// to `max_order`. Trees of different orders are told apart by degree alone,
/// so only pairs of equal order are counted.
pub fn tree_conjecture_scan(max_order: usize) -> Result<TreeScan> {
    if max_order > MAX_SCAN_ORDER {
        return Err(Error::capacity("tree scan order", max_order, MAX_SCAN_ORDER as u64));
    }
    let mut orders = Vec::new();
    for n in 1..=max_order {
        let trees = enumerate_trees(n)?;
        let mut prints: Vec<(BTreeMap<Vec<ClassKey>, BigInt>, usize)> = trees
            .par_iter()
            .enumerate()
            .map(|(i, t)| Ok((chromatic_symmetric_function(t)?.terms().clone(), i)))
            .collect::<Result<_>>()?;
        prints.sort();
        let mut collisions = Vec::new();
        for (i, (a, x)) in prints.iter().enumerate() {
            for (b, y) in &prints[i + 1..] {
                if a != b {
                    break;
                }
                let (x, y) = ((*x).min(*y), (*x).max(*y));
                collisions.push((to_graph6(&trees[x]), to_graph6(&trees[y])));
            }
        }
        orders.push(TreeScanOrder {
            order: n,
            trees: trees.len(),
            pairs: trees.len() * trees.len().saturating_sub(1) / 2,
            collisions,
        });
    }
    Ok(TreeScan { max_order, orders })
}
