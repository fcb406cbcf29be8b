//! Problem variants, result types, and certification against the formula catalog.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use super::decomposition::TdError;
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::logic::{catalog_formula, evaluate, Structure};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("{what} is {size}, above the cap of {cap}")]
    Cap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("deadline reached")]
    Deadline,
    #[error("invalid decomposition: {0}")]
    Decomposition(#[from] TdError),
    #[error("{0}")]
    Unsupported(String),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DominationVariant {
    Dom,
    TotalDom,
    ConnectedDom,
    TotalOuterConnectedDom,
    CycleDom,
    PerfectDom,
    CliqueDom,
}

impl DominationVariant {
    pub const ALL: [DominationVariant; 7] = [
        DominationVariant::Dom,
        DominationVariant::TotalDom,
        DominationVariant::ConnectedDom,
        DominationVariant::TotalOuterConnectedDom,
        DominationVariant::CycleDom,
        DominationVariant::PerfectDom,
        DominationVariant::CliqueDom,
    ];

    /// Name of the variant, which is also its catalog formula.
    pub fn name(self) -> &'static str {
        match self {
            DominationVariant::Dom => "dom",
            DominationVariant::TotalDom => "total_dom",
            DominationVariant::ConnectedDom => "connected_dom",
            DominationVariant::TotalOuterConnectedDom => "total_outer_connected_dom",
            DominationVariant::CycleDom => "cycle_dom",
            DominationVariant::PerfectDom => "perfect_dom",
            DominationVariant::CliqueDom => "clique_dom",
        }
    }

    pub fn has_dp(self) -> bool {
        matches!(
            self,
            DominationVariant::Dom | DominationVariant::TotalDom | DominationVariant::ConnectedDom
        )
    }
}

impl fmt::Display for DominationVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DominationVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DominationVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown domination variant `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColoringVariant {
    #[serde(rename = "coloring")]
    Proper,
    Star,
    Cd,
    Edge,
    Rainbow,
    Total,
    Equitable,
}

/// What a coloring assigns colors to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColoredElements {
    Vertices,
    Edges,
    /// Vertices first, then edges.
    Both,
}

impl ColoringVariant {
    pub const ALL: [ColoringVariant; 7] = [
        ColoringVariant::Proper,
        ColoringVariant::Star,
        ColoringVariant::Cd,
        ColoringVariant::Edge,
        ColoringVariant::Rainbow,
        ColoringVariant::Total,
        ColoringVariant::Equitable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ColoringVariant::Proper => "coloring",
            ColoringVariant::Star => "star",
            ColoringVariant::Cd => "cd",
            ColoringVariant::Edge => "edge",
            ColoringVariant::Rainbow => "rainbow",
            ColoringVariant::Total => "total",
            ColoringVariant::Equitable => "equitable",
        }
    }

    pub fn formula_name(self) -> &'static str {
        match self {
            ColoringVariant::Proper => "proper_vertex_coloring",
            ColoringVariant::Star => "star_coloring",
            ColoringVariant::Cd => "cd_coloring",
            ColoringVariant::Edge => "edge_coloring",
            ColoringVariant::Rainbow => "rainbow_coloring",
            ColoringVariant::Total => "total_coloring",
            ColoringVariant::Equitable => "equitable_coloring",
        }
    }

    pub fn elements(self) -> ColoredElements {
        match self {
            ColoringVariant::Edge | ColoringVariant::Rainbow => ColoredElements::Edges,
            ColoringVariant::Total => ColoredElements::Both,
            _ => ColoredElements::Vertices,
        }
    }

    /// Number of colored elements of `g`.
    pub fn element_count(self, g: &Graph) -> usize {
        match self.elements() {
            ColoredElements::Vertices => g.n(),
            ColoredElements::Edges => g.m(),
            ColoredElements::Both => g.n() + g.m(),
        }
    }
}

impl fmt::Display for ColoringVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ColoringVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "proper" | "proper_vertex_coloring" => Ok(ColoringVariant::Proper),
            _ => ColoringVariant::ALL
                .into_iter()
                .find(|v| v.name() == s || v.formula_name() == s)
                .ok_or_else(|| format!("unknown coloring variant `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub variant: DominationVariant,
    pub set: VertexSet,
    pub size: usize,
    pub certified: bool,
}

/// A coloring; `colors` follows vertex order, canonical edge order, or
/// vertices then edges, depending on the variant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringAssignment {
    pub variant: ColoringVariant,
    pub k: usize,
    pub colors: Vec<usize>,
    pub certified: bool,
}

/// Evaluates the variant's catalog formula with `S` bound to `set`.
pub fn domination_holds(g: &Graph, variant: DominationVariant, set: &VertexSet) -> bool {
    let f = catalog_formula(variant.name()).expect("shipped formula");
    evaluate(&f, &Structure::new(g).with_vertex_set("S", set.clone()))
        .expect("catalog formula binds S only")
}

/// Evaluates the variant's catalog formula on the given coloring.
pub fn coloring_holds(g: &Graph, variant: ColoringVariant, k: usize, colors: &[usize]) -> bool {
    let f = catalog_formula(variant.formula_name()).expect("shipped formula");
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let (vc, ec) = match variant.elements() {
        ColoredElements::Vertices => (colors, &[][..]),
        ColoredElements::Edges => (&[][..], colors),
        ColoredElements::Both => colors.split_at(n),
    };
    let mut m = Structure::new(g).with_colors(k);
    if variant.elements() != ColoredElements::Edges {
        let classes = (0..k)
            .map(|c| (0..n).filter(|&v| vc[v] == c).collect::<VertexSet>())
            .collect();
        m = m.with_vertex_family("T", classes);
    }
    if variant.elements() != ColoredElements::Vertices {
        let classes = (0..k)
            .map(|c| {
                edges
                    .iter()
                    .zip(ec)
                    .filter(|&(_, &x)| x == c)
                    .map(|(&e, _)| e)
                    .collect::<EdgeSet>()
            })
            .collect();
        m = m.with_edge_family("L", classes);
    }
    evaluate(&f, &m).expect("catalog formula binds T and L only")
}

pub(crate) fn certify_domination(
    g: &Graph,
    variant: DominationVariant,
    set: VertexSet,
) -> Result<DominationResult, SolveError> {
    if !domination_holds(g, variant, &set) {
        return Err(SolveError::Internal(format!(
            "{variant} solution {set} fails its defining formula"
        )));
    }
    Ok(DominationResult {
        variant,
        size: set.len(),
        set,
        certified: true,
    })
}

pub(crate) fn certify_coloring(
    g: &Graph,
    variant: ColoringVariant,
    k: usize,
    colors: Vec<usize>,
) -> Result<ColoringAssignment, SolveError> {
    if colors.len() != variant.element_count(g) || colors.iter().any(|&c| c >= k) {
        return Err(SolveError::Internal(format!("{variant} assignment has the wrong shape")));
    }
    if !coloring_holds(g, variant, k, &colors) {
        return Err(SolveError::Internal(format!(
            "{variant} assignment {colors:?} fails its defining formula"
        )));
    }
    Ok(ColoringAssignment {
        variant,
        k,
        colors,
        certified: true,
    })
}
