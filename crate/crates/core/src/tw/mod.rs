//! Tree decompositions and the domination / coloring solvers.

pub mod coloring;
pub mod decomposition;
pub mod domination;
pub mod exact;
pub mod nice;
pub mod problems;

pub use coloring::{min_coloring_dp, solve_coloring_dp};
pub use decomposition::{decompose, Strategy, TdError, TreeDecomposition};
pub use domination::{domination_dp_core, solve_domination_dp};
pub use exact::{min_coloring_exact, solve_coloring_exact, solve_domination_exact, ExactCaps};
pub use nice::{make_nice, NiceDecomposition, NiceKind};
pub use problems::{
    ColoringAssignment, ColoringVariant, DominationResult, DominationVariant, SolveError,
};
