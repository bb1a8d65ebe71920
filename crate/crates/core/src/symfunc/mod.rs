//! The ring of k-fold symmetric functions in the monomial basis `m` and the
//! power-sum basis `p`, with exact integer coefficients.
//!
//! Every key is a sorted list of class keys. In the `m` basis it holds one
//! class (or none, for the unit); in the `p` basis it holds the connected
//! components, since `p_lambda` is the product of the `m` of its components.

mod expand;
mod product;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

pub use expand::{
    chromatic_symmetric_function, direct_m_expansion, kneser_slice_expansion, theorem2_expansion,
    theorem2_expansion_unit_weights, MAX_EXPANSION_EDGES, MAX_KNESER_MAPS, MAX_KNESER_MULTISETS, MAX_STANLEY_EDGES,
};
pub use product::product_table;

use crate::error::{Error, Result};
use crate::hypermulti::{falling, ClassKey, HyperMultigraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    M,
    P,
}

impl Basis {
    pub fn as_str(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::P => "p",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    k: usize,
    basis: Basis,
    terms: BTreeMap<Vec<ClassKey>, BigInt>,
}

impl SymFunc {
    pub fn zero(k: usize, basis: Basis) -> Self {
        SymFunc {
            k,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize, basis: Basis) -> Self {
        let mut f = Self::zero(k, basis);
        f.terms.insert(vec![], BigInt::one());
        f
    }

    /// `m_lambda`.
    pub fn monomial(lambda: &HyperMultigraph) -> Self {
        let mut f = Self::zero(lambda.k(), Basis::M);
        f.terms.insert(m_key(lambda.key()), BigInt::one());
        f
    }

    /// `p_lambda`.
    pub fn power_sum(lambda: &HyperMultigraph) -> Self {
        let mut f = Self::zero(lambda.k(), Basis::P);
        f.terms.insert(p_key(lambda), BigInt::one());
        f
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Vec<ClassKey>, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &[ClassKey]) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// Coefficient of `m_lambda` (basis `m`) or `p_lambda` (basis `p`).
    pub fn coefficient_of(&self, lambda: &HyperMultigraph) -> BigInt {
        match self.basis {
            Basis::M => self.coefficient(&m_key(lambda.key())),
            Basis::P => self.coefficient(&p_key(lambda)),
        }
    }

    /// Adds `coeff` to the term with `key`, which must already be sorted.
    pub(crate) fn add_term(&mut self, key: Vec<ClassKey>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &SymFunc) -> Result<()> {
        if self.k != other.k {
            return Err(Error::MismatchedUniformity {
                left: self.k,
                right: other.k,
            });
        }
        if self.basis != other.basis {
            return Err(Error::Parameter(format!(
                "cannot combine {} and {} basis expansions directly",
                self.basis, other.basis
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.add_term(key.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, factor: &BigInt) -> SymFunc {
        let mut out = SymFunc::zero(self.k, self.basis);
        if !factor.is_zero() {
            out.terms = self.terms.iter().map(|(key, c)| (key.clone(), c * factor)).collect();
        }
        out
    }

    /// The same function in the monomial basis.
    pub fn to_m(&self) -> Result<SymFunc> {
        match self.basis {
            Basis::M => Ok(self.clone()),
            Basis::P => p_to_m(self),
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(key, c)| {
                let classes: Vec<Value> = key.iter().map(|ck| HyperMultigraph::from_key(ck).to_json()).collect();
                json!({ "classes": classes, "coeff": c.to_string() })
            })
            .collect();
        json!({ "k": self.k, "basis": self.basis.as_str(), "terms": terms })
    }

    /// Terms as `c\,p_{...}` with components separated by `\sqcup`.
    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (key, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            let mag = c.magnitude();
            if key.is_empty() {
                out.push_str(&mag.to_string());
                continue;
            }
            let parts: Vec<String> = key.iter().map(|ck| HyperMultigraph::from_key(ck).to_latex()).collect();
            let body = format!("{}_{{{}}}", self.basis.as_str(), parts.join(" \\sqcup "));
            if mag.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{mag}\\,{body}"));
            }
        }
        out
    }
}

fn m_key(key: &ClassKey) -> Vec<ClassKey> {
    if key.is_empty() {
        vec![]
    } else {
        vec![key.clone()]
    }
}

fn p_key(lambda: &HyperMultigraph) -> Vec<ClassKey> {
    let mut parts: Vec<ClassKey> = lambda
        .connected_components()
        .iter()
        .map(|c| c.key().clone())
        .collect();
    parts.sort();
    parts
}

/// Product of two `m`-basis expansions.
pub fn m_mul(a: &SymFunc, b: &SymFunc) -> Result<SymFunc> {
    a.check_compatible(b)?;
    if a.basis != Basis::M {
        return Err(Error::Parameter("m_mul expects m-basis operands".into()));
    }
    let mut out = SymFunc::zero(a.k, Basis::M);
    for (ka, ca) in &a.terms {
        for (kb, cb) in &b.terms {
            let coeff = ca * cb;
            match (ka.first(), kb.first()) {
                (None, _) => out.add_term(kb.clone(), coeff),
                (_, None) => out.add_term(ka.clone(), coeff),
                (Some(x), Some(y)) => {
                    for (nu, c) in product_table(x, y)?.iter() {
                        out.add_term(vec![nu.clone()], &coeff * BigInt::from(c.clone()));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Expands every `p_lambda` as the product of the `m` of its components.
pub fn p_to_m(f: &SymFunc) -> Result<SymFunc> {
    if f.basis != Basis::P {
        return Err(Error::Parameter("p_to_m expects a p-basis expansion".into()));
    }
    let mut out = SymFunc::zero(f.k, Basis::M);
    for (key, c) in &f.terms {
        let mut prod = SymFunc::one(f.k, Basis::M);
        for part in key {
            let mut m = SymFunc::zero(f.k, Basis::M);
            m.add_term(vec![part.clone()], BigInt::one());
            prod = m_mul(&prod, &m)?;
        }
        out = out.add(&prod.scale(c))?;
    }
    Ok(out)
}

/// Value at `x_I = 1` for the `k`-subsets `I` of `{1..n}` and `0` elsewhere:
/// each `m_lambda` counts the multisets of its class on `n` points,
/// `n (n-1) ... (n - |V| + 1) / |Aut|`.
pub fn specialize_ones(f: &SymFunc, n: u64) -> Result<BigInt> {
    let m = f.to_m()?;
    let mut total = BigInt::zero();
    for (key, c) in &m.terms {
        let count = match key.first() {
            None => BigInt::one(),
            Some(ck) => {
                let h = HyperMultigraph::from_key(ck);
                BigInt::from(falling(n, h.vertex_count()) / h.aut_order())
            }
        };
        total += c * count;
    }
    Ok(total)
}

/// Equality after conversion to the monomial basis.
pub fn equals(f: &SymFunc, g: &SymFunc) -> Result<bool> {
    if f.k != g.k {
        return Err(Error::MismatchedUniformity { left: f.k, right: g.k });
    }
    Ok(f.to_m()?.terms == g.to_m()?.terms)
}
