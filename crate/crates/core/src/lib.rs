//! Graph toolkit for CIS graphs: graphs in which every maximal clique meets
//! every maximal stable set.
//!
//! The brute-force oracle in [`oracle`] decides the property for any small
//! graph. For claw-free graphs [`recognition`] decides it in polynomial
//! time and explains the answer. [`counterexample`] builds CIS graphs with
//! more than `α·ω` vertices.

pub mod bitset;
pub mod counterexample;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod line;
pub mod matching;
pub mod named;
pub mod oracle;
pub mod random;
pub mod recognition;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Graph, TwinReduction};
pub use named::NamedGraph;
