//! Paley hosts, subfield embeddings and the explicit induced embeddings of
//! complete bipartite graphs, cycles and paths built from a small field
//! `F_q` sitting inside `F_q0`.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use super::field::{Field, FieldElement, FieldSpec};
use crate::error::{Error, Result};
use crate::graphs::{Embedding, Mode, SimpleGraph};
use crate::homomorphism::HostGraph;

/// Largest field scanned by the constructive searches.
pub const SCAN_LIMIT: u64 = 1_000_000;

/// The Paley graph `P(q)` on the field described by `spec`.
pub fn paley_graph(spec: FieldSpec) -> Result<HostGraph> {
    HostGraph::paley(Arc::new(Field::new(spec)?))
}

/// A field homomorphism `sub -> sup`, tabulated on all of `sub`.
#[derive(Clone, Debug)]
pub struct SubfieldEmbedding {
    root: FieldElement,
    image: Vec<FieldElement>,
}

impl SubfieldEmbedding {
    pub fn apply(&self, a: FieldElement) -> FieldElement {
        self.image[a.0 as usize]
    }

    /// Images of the elements of the subfield, in subfield order.
    pub fn image(&self) -> &[FieldElement] {
        &self.image
    }

    /// Where the residue class of `x` goes: the least root of the subfield
    /// modulus in the larger field.
    pub fn root(&self) -> FieldElement {
        self.root
    }
}

/// Embeds `sub` into `sup` by sending `x` to the least root of `sub`'s
/// modulus in `sup`.
pub fn subfield_embedding(sub: &Field, sup: &Field) -> Result<SubfieldEmbedding> {
    if sub.characteristic() != sup.characteristic() || !sup.degree().is_multiple_of(sub.degree()) {
        return Err(Error::Parameter(format!(
            "GF({}) is not a subfield of GF({})",
            sub.order(),
            sup.order()
        )));
    }
    if sub.order() > SCAN_LIMIT {
        return Err(Error::capacity("subfield order", sub.order(), SCAN_LIMIT));
    }
    let modulus = &sub.spec().modulus;
    let eval = |e: FieldElement| {
        modulus
            .iter()
            .rev()
            .fold(sup.zero(), |acc, &c| sup.add(sup.mul(acc, e), sup.constant(c)))
    };
    let root = sup
        .elements()
        .find(|&e| eval(e) == sup.zero())
        .ok_or_else(|| Error::Internal("subfield modulus has no root in the extension".into()))?;
    let image = sub
        .elements()
        .map(|a| {
            sub.coeffs(a)
                .iter()
                .rev()
                .fold(sup.zero(), |acc, &c| sup.add(sup.mul(acc, root), sup.constant(c)))
        })
        .collect();
    Ok(SubfieldEmbedding { root, image })
}

/// An induced copy of a pattern in a Paley graph together with the field
/// elements that generated it.
#[derive(Clone, Debug)]
pub struct Construction {
    pub pattern: SimpleGraph,
    pub embedding: Embedding,
    pub anchors: Vec<(&'static str, FieldElement)>,
}

impl Construction {
    pub fn to_json(&self, host: &HostGraph) -> Value {
        let field = host.field().expect("constructions live in Paley hosts");
        let anchors: Map<String, Value> = self
            .anchors
            .iter()
            .map(|(name, e)| (name.to_string(), field.element_json(*e)))
            .collect();
        json!({
            "embedding": self.embedding.to_json(&self.pattern, host),
            "anchors": anchors,
        })
    }
}

/// Common setup: `F_q` inside `F_q0` with `[F_q0 : F_q]` even, a
/// non-residue `x`, and `A = F_q x`.
struct Scaffold<'a> {
    big: &'a Field,
    host: &'a HostGraph,
    small: Vec<FieldElement>,
    alpha: FieldElement,
    x: FieldElement,
}

impl<'a> Scaffold<'a> {
    fn new(fq: &Field, host: &'a HostGraph) -> Result<Self> {
        let big = host
            .field()
            .ok_or_else(|| Error::Parameter("constructions need a Paley host".into()))?;
        if fq.order() < 5 {
            return Err(Error::Parameter(format!("q must be at least 5, got {}", fq.order())));
        }
        if big.characteristic() != fq.characteristic()
            || big.degree() % fq.degree() != 0
            || !(big.degree() / fq.degree()).is_multiple_of(2)
        {
            return Err(Error::Parameter(format!(
                "GF({}) must be an even-degree extension of GF({})",
                big.order(),
                fq.order()
            )));
        }
        if big.order() > SCAN_LIMIT {
            return Err(Error::capacity("host field order", big.order(), SCAN_LIMIT));
        }
        let emb = subfield_embedding(fq, big)?;
        let alpha = emb.apply(fq.primitive_element());
        let x = big
            .elements()
            .find(|&e| big.is_square(e) == Some(false))
            .expect("odd order fields have non-residues");
        Ok(Scaffold {
            big,
            host,
            small: emb.image().to_vec(),
            alpha,
            x,
        })
    }

    fn q(&self) -> usize {
        self.small.len()
    }

    fn adjacent(&self, a: FieldElement, b: FieldElement) -> bool {
        self.host.adjacent(a.0 as usize, b.0 as usize)
    }

    fn span(&self, v: FieldElement) -> Vec<FieldElement> {
        self.small.iter().map(|&a| self.big.mul(a, v)).collect()
    }

    fn alpha_pow(&self, i: usize) -> FieldElement {
        self.big.pow(self.alpha, i as u128)
    }

    /// The least `y` outside `A` whose neighbours in `A` are exactly `want`.
    fn find_exact(&self, set: &[FieldElement], want: &[FieldElement]) -> Option<FieldElement> {
        self.big.elements().find(|&y| {
            !set.contains(&y) && set.iter().all(|&a| self.adjacent(y, a) == want.contains(&a))
        })
    }

    fn finish(
        &self,
        pattern: SimpleGraph,
        vertices: Vec<FieldElement>,
        anchors: Vec<(&'static str, FieldElement)>,
    ) -> Result<Construction> {
        let embedding = Embedding {
            map: vertices.iter().map(|e| e.0 as usize).collect(),
            mode: Mode::Induced,
        };
        if !embedding.verify(&pattern, self.host) {
            return Err(Error::Internal("constructed vertex set does not induce the pattern".into()));
        }
        Ok(Construction {
            pattern,
            embedding,
            anchors,
        })
    }
}

/// Induced `K_{q-1,q-1}` on `(F_q x ∪ F_q y) \ {0}`, where `y` is adjacent
/// to every nonzero element of `F_q x` and not to `0`. `Ok(None)` when no
/// such `y` exists in `F_q0`.
pub fn bipartite_embed(fq: &Field, host: &HostGraph) -> Result<Option<Construction>> {
    let s = Scaffold::new(fq, host)?;
    let a = s.span(s.x);
    let nonzero: Vec<FieldElement> = a.iter().copied().filter(|e| e.0 != 0).collect();
    let Some(y) = s.find_exact(&a, &nonzero) else {
        return Ok(None);
    };
    let b = s.span(y);
    let q = s.q();
    let vertices: Vec<FieldElement> = nonzero
        .iter()
        .copied()
        .chain(b.iter().copied().filter(|e| e.0 != 0))
        .collect();
    let pattern = SimpleGraph::complete_bipartite(q - 1, q - 1)?;
    s.finish(pattern, vertices, vec![("x", s.x), ("y", y)]).map(Some)
}

/// Targets reachable from the alternating cycle on `(A ∪ B) \ {0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvenTarget {
    /// `C_len` for even `4 <= len <= 2(q-1)`.
    Cycle(usize),
    /// `P_len` for `1 <= len < 2(q-1)`.
    Path(usize),
}

/// Induced even cycles and paths. `y` is the least vertex whose neighbours
/// in `A = F_q x` are exactly `x` and `αx`; then
/// `x, y, αx, αy, …, α^(q-2) x, α^(q-2) y` is an induced `C_{2(q-1)}`.
/// Shorter cycles `C_{2k+2}` close up through `z = (α-1)^(-1) (y - x)`.
pub fn even_cycle_embed(fq: &Field, host: &HostGraph, target: EvenTarget) -> Result<Option<Construction>> {
    let s = Scaffold::new(fq, host)?;
    let full = 2 * (s.q() - 1);
    match target {
        EvenTarget::Cycle(len) if len < 4 || len % 2 == 1 || len > full => {
            return Err(Error::Parameter(format!("even cycle length must be in 4..={full}, got {len}")));
        }
        EvenTarget::Path(len) if len == 0 || len >= full => {
            return Err(Error::Parameter(format!("path order must be in 1..{full}, got {len}")));
        }
        _ => {}
    }
    let big = s.big;
    let a = s.span(s.x);
    let ax = big.mul(s.alpha, s.x);
    let Some(y) = s.find_exact(&a, &[s.x, ax]) else {
        return Ok(None);
    };
    let ring = |k: usize| -> Vec<FieldElement> {
        (0..k)
            .flat_map(|i| {
                let t = s.alpha_pow(i);
                [big.mul(t, s.x), big.mul(t, y)]
            })
            .collect()
    };
    match target {
        EvenTarget::Cycle(len) if len == full => {
            s.finish(SimpleGraph::cycle(len)?, ring(s.q() - 1), vec![("x", s.x), ("y", y), ("alpha", s.alpha)])
                .map(Some)
        }
        EvenTarget::Cycle(len) => {
            let k = len / 2 - 1;
            let y_shift = big.sub(y, s.x);
            let z = big.div(y_shift, big.sub(s.alpha, big.one()))?;
            let mut vertices = ring(k);
            vertices.push(big.mul(s.alpha_pow(k), z));
            vertices.push(z);
            s.finish(
                SimpleGraph::cycle(len)?,
                vertices,
                vec![("x", s.x), ("y", y), ("alpha", s.alpha), ("z", z)],
            )
            .map(Some)
        }
        EvenTarget::Path(len) => {
            let mut vertices = ring(s.q() - 1);
            vertices.truncate(len);
            s.finish(SimpleGraph::path(len)?, vertices, vec![("x", s.x), ("y", y), ("alpha", s.alpha)])
                .map(Some)
        }
    }
}

/// Induced `C_{2k+1}` for `2 <= k <= q-1`: on top of the even scaffold,
/// `z` is the least vertex whose neighbours in `A ∪ B` are exactly `0` and
/// `x`, and the cycle is `x, y, …, α^(k-2) x, α^(k-2) y, α^(k-1) x,
/// α^(k-1) z, z`.
pub fn odd_cycle_embed(fq: &Field, host: &HostGraph, k: usize) -> Result<Option<Construction>> {
    let s = Scaffold::new(fq, host)?;
    if k < 2 || k > s.q() - 1 {
        return Err(Error::Parameter(format!("k must be in 2..={}, got {k}", s.q() - 1)));
    }
    let big = s.big;
    let a = s.span(s.x);
    let ax = big.mul(s.alpha, s.x);
    let Some(y) = s.find_exact(&a, &[s.x, ax]) else {
        return Ok(None);
    };
    let mut ab = a.clone();
    ab.extend(s.span(y).into_iter().filter(|e| e.0 != 0));
    let Some(z) = s.find_exact(&ab, &[big.zero(), s.x]) else {
        return Ok(None);
    };
    let mut vertices = Vec::with_capacity(2 * k + 1);
    for i in 0..k - 1 {
        let t = s.alpha_pow(i);
        vertices.push(big.mul(t, s.x));
        vertices.push(big.mul(t, y));
    }
    let t = s.alpha_pow(k - 1);
    vertices.push(big.mul(t, s.x));
    vertices.push(big.mul(t, z));
    vertices.push(z);
    s.finish(
        SimpleGraph::cycle(2 * k + 1)?,
        vertices,
        vec![("x", s.x), ("y", y), ("alpha", s.alpha), ("z", z)],
    )
    .map(Some)
}
