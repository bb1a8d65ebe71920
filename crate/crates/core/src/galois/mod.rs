//! Finite fields GF(p^d), Paley graphs and the constructive embeddings
//! inside them.

pub mod bounds;
mod field;
mod paley;
mod poly;

pub use field::{find_irreducible, Field, FieldElement, FieldSpec, MAX_FIELD_ORDER, TABLE_LIMIT};
pub use paley::{
    bipartite_embed, even_cycle_embed, odd_cycle_embed, paley_graph, subfield_embedding, Construction,
    EvenTarget, SubfieldEmbedding, SCAN_LIMIT,
};
