//! Exact algorithms for deleting at most `k` vertices from a graph so that
//! every remaining block is a clique.
//!
//! The crate provides:
//! - a polynomial kernelization built from six reduction rules ([`kernel`]),
//! - a branching solver using iterative compression ([`solver`]),
//! - the structural machinery behind both: block decompositions ([`graph`]),
//!   minimal obstruction extraction ([`obstruction`]), an attachment-path
//!   packing/cover dichotomy ([`gallai`]) and a constructive expansion
//!   subroutine ([`expansion`]),
//! - a brute-force oracle and seeded instance generators for verification
//!   ([`oracle`]).

pub mod error;
pub mod expansion;
pub mod gallai;
pub mod graph;
pub mod kernel;
pub mod obstruction;
pub mod oracle;
pub mod solver;

pub use error::{Error, Result};
pub use expansion::ExpansionResult;
pub use gallai::{APath, GallaiOutcome, ProbeOutcome};
pub use graph::{BlockDecomposition, Graph, VertexId, VertexSet};
pub use kernel::{Instance, KernelResult, ReductionEvent, Rule};
pub use obstruction::Obstruction;
pub use oracle::PlantedSpec;
pub use solver::{DisjointInstance, Solution};
