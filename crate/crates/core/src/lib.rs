//! Deciding whether a graph has a proper distinguishing 2-coloring.
//!
//! The decision procedure ([`d2c::decide_d2c`]) splits the graph into
//! components, checks each connected component through its unique
//! 2-coloring, and compares components with canonical labeling. Every verdict
//! carries a certificate that can be re-checked independently.
//!
//! [`reductions`] holds the two answer-preserving transformations between
//! "does this graph have a nontrivial automorphism" and "is this connected
//! graph not distinguishing-2-colorable", and [`oracle`] is a definition-level
//! brute force used as ground truth.

pub mod cli;
pub mod d2c;
pub mod error;
pub mod graph;
pub mod iso;
pub mod oracle;
mod perm;
pub mod reductions;

pub use error::{Error, Result};
pub use graph::{Graph, TwoColoring};
pub use perm::Permutation;
