//! Named formulas shipped as `.fol` assets.

use std::collections::BTreeMap;

use thiserror::Error;

use super::ast::Formula;
use super::parse::parse_formula;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog formula `{0}`")]
    Unknown(String),
}

macro_rules! assets {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../assets/formulas/", $name, ".fol")))),*]
    };
}

/// `(name, source text)` for every shipped formula.
pub const FORMULA_SOURCES: &[(&str, &str)] = assets![
    "min_vc",
    "min_dom",
    "dom",
    "connectedness",
    "chordal",
    "chordal_bipartite",
    "min_cograph_node_del",
    "min_cograph_edge_del",
    "min_split_node_del",
    "min_split_edge_del",
    "min_threshold_node_del",
    "min_threshold_edge_del",
    "min_comp_node_del",
    "min_comp_edge_del",
    "min_interval_node_del",
    "min_perm_node_del",
    "proper_vertex_coloring",
    "star_coloring",
    "cd_coloring",
    "edge_coloring",
    "rainbow_coloring",
    "total_coloring",
    "equitable_coloring",
    "connected_dom",
    "total_dom",
    "total_outer_connected_dom",
    "cycle_dom",
    "perfect_dom",
    "clique_dom",
];

pub fn formula_source(name: &str) -> Result<&'static str, CatalogError> {
    FORMULA_SOURCES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| CatalogError::Unknown(name.to_string()))
}

pub fn catalog_formula(name: &str) -> Result<Formula, CatalogError> {
    let src = formula_source(name)?;
    Ok(parse_formula(src).unwrap_or_else(|e| panic!("asset `{name}` does not parse: {e}")))
}

/// Every shipped formula, parsed.
pub fn formula_catalog() -> BTreeMap<&'static str, Formula> {
    FORMULA_SOURCES
        .iter()
        .map(|(name, _)| (*name, catalog_formula(name).expect("listed")))
        .collect()
}
