//! Graph modification, recognition, and bounded-treewidth solvers, checked
//! against a brute-force evaluator for first-order and monadic second-order
//! graph formulas.

pub mod generate;
pub mod graph;
pub mod io;
pub mod logic;
pub mod modification;
pub mod recognition;
pub mod tw;

pub use graph::{EdgeSet, Graph, GraphError, VertexSet};
