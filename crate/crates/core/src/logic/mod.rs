//! Formula language: syntax, brute-force semantics, and the shipped catalog.

pub mod ast;
pub mod builtins;
pub mod catalog;
pub mod eval;
pub mod parse;
pub mod search;

pub use ast::{Formula, Sort};
pub use catalog::{catalog_formula, formula_catalog, CatalogError};
pub use eval::{evaluate, EvalError, Evaluator, Structure};
pub use parse::{parse_formula, FormulaError};
pub use search::{min_coloring_by_formula, min_satisfying_set, SearchCaps, SearchError, SetSolution};
