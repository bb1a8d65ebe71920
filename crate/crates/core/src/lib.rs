pub mod error;
pub mod galois;
pub mod graphs;
pub mod homomorphism;
pub mod hypermulti;
pub mod indices;
pub mod symfunc;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/graphs.md")]
    pub struct Graphs;
    #[doc = include_str!("../../../book/src/hypermulti.md")]
    pub struct Hypermulti;
    #[doc = include_str!("../../../book/src/homomorphism.md")]
    pub struct Homomorphism;
    #[doc = include_str!("../../../book/src/symfunc.md")]
    pub struct Symfunc;
    #[doc = include_str!("../../../book/src/galois.md")]
    pub struct Galois;
    #[doc = include_str!("../../../book/src/indices.md")]
    pub struct Indices;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
