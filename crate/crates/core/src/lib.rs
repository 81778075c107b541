//! Spectral and extremal graph theory toolkit: graphs, spectra, exact
//! invariants, hypergraph and signed-graph spectra, a registry of checkable
//! inequalities, and exhaustive or heuristic search over graph families.

pub mod budget;
pub mod conjectures;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod invariants;
pub mod search;
pub mod signed;
pub mod spectra;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
