//! Bowtie supersaturation toolkit.
//!
//! A bowtie is two triangles sharing exactly one vertex. The largest
//! bowtie-free graphs on `n >= 5` vertices have `⌊n²/4⌋ + 1` edges; this crate
//! counts bowties, builds the extremal and near-extremal constructions,
//! evaluates the closed-form counts, minimizes them over the extremal family
//! and checks all of it by exhaustive search on tiny graphs.
//!
//! ```
//! use supersat::{constructions, counting};
//!
//! let g = constructions::extremal_bowtie_free(9, constructions::Variant::LargerPart)?;
//! assert_eq!(g.edge_count() as u128, constructions::ex_bowtie(9)?);
//! assert_eq!(counting::count_bowties(&g)?, 0);
//! # Ok::<(), supersat::Error>(())
//! ```

pub mod constructions;
pub mod counting;
mod error;
pub mod formulas;
mod graph;
pub mod io;
pub mod optimizer;
pub mod oracle;

pub use counting::{Count, CountReport};
pub use error::{Error, Location, Reason, Result};
pub use graph::{EdgeList, Graph, GraphBuilder};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/formulas.md")]
    mod formulas {}
    #[doc = include_str!("../../../book/src/optimizer.md")]
    mod optimizer {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
}
