//! Homomorphism and weak-homomorphism counting, the generating polynomials
//! `X_H` and `W_H`, chromatic polynomials and hom-count profiles.

mod count;
mod host;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::AtomicU64;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

pub use host::{DenseGraph, HostGraph, HostKind, DENSE_LIMIT, HOST_LIMIT};

use crate::error::{Error, Result};
use crate::graphs::{canonical_form, enumerate_graphs, SimpleGraph, MAX_GRAPH_ORDER};
use count::Rule;

/// Node expansions allowed by the budget-free entry points.
pub const DEFAULT_BUDGET: u64 = 1 << 36;

/// Patterns up to this order are counted into complete hosts through their
/// independent-set partitions instead of by search.
pub const PARTITION_LIMIT: usize = 14;

pub const MAX_CHROMATIC_ORDER: usize = 12;

pub const MAX_PROFILE_HOST_ORDER: usize = 6;

pub fn count_hom(g: &SimpleGraph, h: &HostGraph) -> Result<BigUint> {
    count_hom_with_budget(g, h, DEFAULT_BUDGET)
}

pub fn count_weak_hom(g: &SimpleGraph, h: &HostGraph) -> Result<BigUint> {
    count_weak_hom_with_budget(g, h, DEFAULT_BUDGET)
}

/// `|Hom(g, h)|`, or [`Error::BudgetExceeded`] once more than `budget`
/// search nodes have been expanded.
pub fn count_hom_with_budget(g: &SimpleGraph, h: &HostGraph, budget: u64) -> Result<BigUint> {
    count_with(g, h, Rule::Strict, budget)
}

/// Maps sending every edge to an edge or collapsing it to one vertex.
pub fn count_weak_hom_with_budget(g: &SimpleGraph, h: &HostGraph, budget: u64) -> Result<BigUint> {
    count_with(g, h, Rule::Weak, budget)
}

fn count_with(g: &SimpleGraph, h: &HostGraph, rule: Rule, budget: u64) -> Result<BigUint> {
    let n = g.order();
    if let HostKind::Complete(m) = h.kind() {
        match rule {
            Rule::Weak => return Ok(BigUint::from(*m).pow(n as u32)),
            Rule::Strict if n <= PARTITION_LIMIT => return Ok(complete_count(g, *m)),
            Rule::Strict => {}
        }
    }
    if g.size() == 0 {
        return Ok(BigUint::from(h.order()).pow(n as u32));
    }
    let d = dense_host(h)?;
    let used = AtomicU64::new(0);
    let mut total = BigUint::one();
    for c in g.connected_components() {
        let k = count::count_connected(&c, d, rule, h.is_vertex_transitive(), &used, budget)?;
        total *= BigUint::from(k);
        if total.is_zero() {
            break;
        }
    }
    Ok(total)
}

fn dense_host(h: &HostGraph) -> Result<&DenseGraph> {
    h.dense()
        .ok_or_else(|| Error::capacity("host order for exhaustive search", h.order(), DENSE_LIMIT as u64))
}

/// `a[j]` = number of partitions of the vertex set into `j` independent
/// sets, so that `|Hom(g, K_m)| = sum_j a[j] m(m-1)...(m-j+1)`.
fn independent_partitions(g: &SimpleGraph) -> Vec<u64> {
    let n = g.order();
    let full = (1usize << n) - 1;
    let independent: Vec<bool> = (0..=full)
        .map(|s| (0..n).all(|v| s >> v & 1 == 0 || g.row(v) & s as u64 == 0))
        .collect();
    // ways[s][j]: partitions of s into j independent blocks; the block
    // holding the lowest vertex of s is chosen first
    // at most Bell(PARTITION_LIMIT) < 2^64
    let mut ways: Vec<Vec<u64>> = vec![vec![0; n + 1]; full + 1];
    ways[0][0] = 1;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut sub = rest;
        loop {
            let block = sub | low;
            if independent[block] {
                let remaining = s ^ block;
                for j in 1..=n {
                    ways[s][j] += ways[remaining][j - 1];
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    ways.swap_remove(full)
}

fn complete_count(g: &SimpleGraph, m: usize) -> BigUint {
    let a = independent_partitions(g);
    let mut total = BigUint::zero();
    let mut falling = BigUint::one();
    for (j, aj) in a.iter().enumerate() {
        if j > 0 {
            if j > m {
                break;
            }
            falling *= BigUint::from(m - j + 1);
        }
        total += BigUint::from(*aj) * &falling;
    }
    total
}

/// A polynomial in host-vertex variables whose monomials all have degree
/// `graph_order`. Keys are sorted image multisets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPoly {
    graph_order: usize,
    terms: BTreeMap<Vec<usize>, BigInt>,
}

impl MonomialPoly {
    pub fn zero(graph_order: usize) -> Self {
        MonomialPoly {
            graph_order,
            terms: BTreeMap::new(),
        }
    }

    pub fn graph_order(&self) -> usize {
        self.graph_order
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with image multiset `image` (any order).
    pub fn coefficient(&self, image: &[usize]) -> BigInt {
        let mut key = image.to_vec();
        key.sort_unstable();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, mut image: Vec<usize>, coeff: BigInt) -> Result<()> {
        if image.len() != self.graph_order {
            return Err(Error::Parameter(format!(
                "monomial of degree {} in a polynomial of degree {}",
                image.len(),
                self.graph_order
            )));
        }
        image.sort_unstable();
        match self.terms.entry(image) {
            Entry::Vacant(e) => {
                if !coeff.is_zero() {
                    e.insert(coeff);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &MonomialPoly) -> Result<MonomialPoly> {
        self.combine(other, BigInt::one())
    }

    pub fn sub(&self, other: &MonomialPoly) -> Result<MonomialPoly> {
        self.combine(other, -BigInt::one())
    }

    fn combine(&self, other: &MonomialPoly, sign: BigInt) -> Result<MonomialPoly> {
        let mut out = self.clone();
        if other.graph_order != self.graph_order && !other.is_empty() {
            return Err(Error::Parameter(format!(
                "degrees differ: {} vs {}",
                self.graph_order, other.graph_order
            )));
        }
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c * &sign)?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> MonomialPoly {
        if factor.is_zero() {
            return MonomialPoly::zero(self.graph_order);
        }
        MonomialPoly {
            graph_order: self.graph_order,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect(),
        }
    }

    /// Sum of all coefficients, i.e. the value at `x = (1, 1, ...)`.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn to_json(&self, host: &HostGraph) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let image: Vec<Value> = k.iter().map(|&v| host.vertex_label(v)).collect();
                json!({ "image": image, "coeff": c.to_string() })
            })
            .collect();
        json!({ "graphOrder": self.graph_order, "terms": terms })
    }
}

/// `X_H(g)`: one monomial `prod_v x_{phi(v)}` per homomorphism `phi`.
pub fn x_h(g: &SimpleGraph, h: &HostGraph) -> Result<MonomialPoly> {
    generating_poly(g, h, Rule::Strict, DEFAULT_BUDGET)
}

/// `W_H(g)`: as [`x_h`] over weak homomorphisms.
pub fn w_h(g: &SimpleGraph, h: &HostGraph) -> Result<MonomialPoly> {
    generating_poly(g, h, Rule::Weak, DEFAULT_BUDGET)
}

pub fn x_h_with_budget(g: &SimpleGraph, h: &HostGraph, budget: u64) -> Result<MonomialPoly> {
    generating_poly(g, h, Rule::Strict, budget)
}

pub fn w_h_with_budget(g: &SimpleGraph, h: &HostGraph, budget: u64) -> Result<MonomialPoly> {
    generating_poly(g, h, Rule::Weak, budget)
}

fn generating_poly(g: &SimpleGraph, h: &HostGraph, rule: Rule, budget: u64) -> Result<MonomialPoly> {
    let n = g.order();
    let d = dense_host(h)?;
    let mut acc: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut key = Vec::with_capacity(n);
    count::enumerate(g, d, rule, budget, &mut |images| {
        key.clear();
        key.extend_from_slice(images);
        key.sort_unstable();
        *acc.entry(key.clone()).or_insert(0) += 1;
    })?;
    Ok(MonomialPoly {
        graph_order: n,
        terms: acc.into_iter().map(|(k, c)| (k, BigInt::from(c))).collect(),
    })
}

/// Coefficients (constant term first) of `m -> |Hom(g, K_m)|`, recovered by
/// exact interpolation through `m = 0..=|V(g)|`.
pub fn chromatic_polynomial(g: &SimpleGraph) -> Result<Vec<BigInt>> {
    let n = g.order();
    if n > MAX_CHROMATIC_ORDER {
        return Err(Error::capacity("chromatic polynomial order", n, MAX_CHROMATIC_ORDER as u64));
    }
    let values: Vec<BigRational> = (0..=n)
        .map(|m| count_hom(g, &HostGraph::complete(m)).map(|c| BigRational::from_integer(BigInt::from(c))))
        .collect::<Result<_>>()?;
    // Newton divided differences on nodes 0..=n
    let mut dd = values;
    for level in 1..=n {
        for i in (level..=n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // expand sum_i dd[i] prod_{j<i} (x - j) by Horner from the top
    let mut coeffs: Vec<BigRational> = vec![dd[n].clone()];
    for i in (0..n).rev() {
        // coeffs * (x - i) + dd[i]
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        let shift = BigRational::from_integer(BigInt::from(i));
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &shift;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Internal(format!("non-integer chromatic coefficient {c}")))
            }
        })
        .collect()
}

/// Evaluates integer coefficients (constant term first) at `x`.
pub fn evaluate(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Counts `|Hom(g, F)|` over one representative `F` of every isomorphism
/// class of order `1..=max_host_order`, hosts sorted by canonical code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomProfile {
    pub hosts: Vec<SimpleGraph>,
    pub counts: Vec<BigUint>,
}

impl HomProfile {
    /// First host on which two profiles over the same host list disagree.
    pub fn first_difference(&self, other: &HomProfile) -> Option<usize> {
        self.counts.iter().zip(&other.counts).position(|(a, b)| a != b)
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .hosts
            .iter()
            .zip(&self.counts)
            .map(|(h, c)| json!({ "host": crate::graphs::to_graph6(h), "count": c.to_string() }))
            .collect();
        json!(entries)
    }
}

/// All host classes of order `1..=max_order`, sorted by canonical code.
pub fn profile_hosts(max_order: usize) -> Result<Vec<SimpleGraph>> {
    if max_order > MAX_PROFILE_HOST_ORDER.min(MAX_GRAPH_ORDER) {
        return Err(Error::capacity("profile host order", max_order, MAX_PROFILE_HOST_ORDER as u64));
    }
    let mut hosts: Vec<(Vec<u8>, SimpleGraph)> = Vec::new();
    for m in 1..=max_order {
        for f in enumerate_graphs(m)? {
            hosts.push((canonical_form(&f).code, f));
        }
    }
    hosts.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(hosts.into_iter().map(|(_, f)| f).collect())
}

pub fn hom_profile(g: &SimpleGraph, max_host_order: usize) -> Result<HomProfile> {
    let hosts = profile_hosts(max_host_order)?;
    let counts = hosts
        .iter()
        .map(|f| count_hom(g, &HostGraph::from_simple(f)))
        .collect::<Result<_>>()?;
    Ok(HomProfile { hosts, counts })
}
