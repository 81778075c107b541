//! Graph sources, batch verification and extremal search.

pub mod enumerate;
pub mod extremal;
pub mod hypercube;
pub mod source;
pub mod trees;
pub mod verify;

pub use enumerate::{all_graphs, connected_graphs, MAX_ENUM_ORDER};
pub use source::{GraphSource, GraphStream};
pub use trees::{FreeTrees, MAX_TREE_ORDER};
pub use verify::{verify, ConjectureTally, Entry, VerificationReport, VerifyOptions};
pub use extremal::{extremal, Annealing, Constraint, Direction, ExtremalResult, Method, MoveSet, Objective, Quantity, SearchProblem};
pub use hypercube::{hypercube_lambda, HypercubeSubset};
