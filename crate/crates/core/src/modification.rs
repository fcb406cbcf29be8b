//! Node and edge deletion toward a graph class: exact search, disjoint
//! violation packing, and a conflict-driven heuristic for the classes
//! defined by orientations.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::logic::search::next_combination;
use crate::recognition::{enumerate_violations, is_in_class, Class, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Node,
    Edge,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Node => "node",
            Mode::Edge => "edge",
        })
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "node" => Ok(Mode::Node),
            "edge" => Ok(Mode::Edge),
            _ => Err(format!("unknown mode `{s}` (expected node or edge)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    ApproxPacking,
    HeuristicConflict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Solution {
    Vertices(VertexSet),
    Edges(EdgeSet),
}

impl Solution {
    pub fn len(&self) -> usize {
        match self {
            Solution::Vertices(s) => s.len(),
            Solution::Edges(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DeletionResult {
    pub class: Class,
    pub mode: Mode,
    pub method: Method,
    pub solution: Solution,
    pub size: usize,
    pub certified: bool,
    pub ratio_bound: Option<usize>,
    pub rounds: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModError {
    #[error("{what} is {size}, above the exact-search cap of {cap}")]
    Cap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("deadline reached")]
    Deadline,
    #[error("{0}")]
    Unsupported(String),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Clone, Copy, Debug)]
pub struct DeletionCaps {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub deadline: Option<Instant>,
}

impl Default for DeletionCaps {
    fn default() -> Self {
        DeletionCaps {
            max_vertices: 16,
            max_edges: 16,
            deadline: None,
        }
    }
}

/// Whether edge deletion toward `class` is a supported problem.
pub fn edge_mode_supported(class: Class) -> bool {
    matches!(
        class,
        Class::Cograph | Class::Split | Class::Threshold | Class::Comparability
    )
}

fn residual(g: &Graph, s: &Solution) -> Graph {
    match s {
        Solution::Vertices(v) => g.delete_vertices(v).expect("solution vertices are in range"),
        Solution::Edges(e) => g.delete_edges(e).expect("solution edges are graph edges"),
    }
}

fn finish(
    g: &Graph,
    class: Class,
    mode: Mode,
    method: Method,
    solution: Solution,
    ratio_bound: Option<usize>,
    rounds: usize,
) -> Result<DeletionResult, ModError> {
    if !is_in_class(&residual(g, &solution), class).member {
        return Err(ModError::Internal(format!(
            "{method:?} {mode} deletion toward {class} left a graph outside the class"
        )));
    }
    Ok(DeletionResult {
        class,
        mode,
        method,
        size: solution.len(),
        solution,
        certified: true,
        ratio_bound,
        rounds,
    })
}

/// Minimum vertex set whose removal puts `g` in `class`; lexicographically
/// least among minimum ones.
pub fn exact_node_deletion(g: &Graph, class: Class, caps: DeletionCaps) -> Result<DeletionResult, ModError> {
    let n = g.n();
    if n > caps.max_vertices {
        return Err(ModError::Cap {
            what: "vertex count",
            size: n,
            cap: caps.max_vertices,
        });
    }
    let found = smallest_subset(n, caps.deadline, |combo| {
        let s: VertexSet = combo.iter().copied().collect();
        is_in_class(&g.delete_vertices(&s).expect("in range"), class).member
    })?;
    let s = Solution::Vertices(found.into_iter().collect());
    finish(g, class, Mode::Node, Method::Exact, s, None, 1)
}

/// Minimum edge set whose removal puts `g` in `class`.
pub fn exact_edge_deletion(g: &Graph, class: Class, caps: DeletionCaps) -> Result<DeletionResult, ModError> {
    if !edge_mode_supported(class) {
        return Err(ModError::Unsupported(format!(
            "edge deletion toward {class} is not a formulated problem"
        )));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > caps.max_edges {
        return Err(ModError::Cap {
            what: "edge count",
            size: edges.len(),
            cap: caps.max_edges,
        });
    }
    let found = smallest_subset(edges.len(), caps.deadline, |combo| {
        let s: EdgeSet = combo.iter().map(|&i| edges[i]).collect();
        is_in_class(&g.delete_edges(&s).expect("graph edges"), class).member
    })?;
    let s = Solution::Edges(found.into_iter().map(|i| edges[i]).collect());
    finish(g, class, Mode::Edge, Method::Exact, s, None, 1)
}

/// First subset of `0..universe` (by size, then lexicographically) accepted by `ok`.
fn smallest_subset(
    universe: usize,
    deadline: Option<Instant>,
    mut ok: impl FnMut(&[usize]) -> bool,
) -> Result<Vec<usize>, ModError> {
    let mut tried = 0u64;
    for size in 0..=universe {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            tried += 1;
            if tried.is_multiple_of(256) && deadline.is_some_and(|d| Instant::now() >= d) {
                return Err(ModError::Deadline);
            }
            if ok(&combo) {
                return Ok(combo);
            }
            if !next_combination(&mut combo, universe) {
                break;
            }
        }
    }
    Err(ModError::Internal("deleting everything must reach the class".into()))
}

/// Maximal family of pairwise vertex-disjoint violations, scanned in stream order.
pub fn disjoint_packing(g: &Graph, class: Class) -> Vec<Violation> {
    let mut used = vec![false; g.n()];
    let mut kept = Vec::new();
    for v in enumerate_violations(g, class) {
        if v.hit_vertices.iter().all(|x| !used[x]) {
            for x in v.hit_vertices.iter() {
                used[x] = true;
            }
            kept.push(v);
        }
    }
    kept
}

fn pattern_class(class: Class, what: &str) -> Result<usize, ModError> {
    class.max_pattern_order().ok_or_else(|| {
        ModError::Unsupported(format!(
            "{what} needs a class with finitely many forbidden patterns, not {class}"
        ))
    })
}

/// Union of a maximal disjoint packing of violations. Every violation meets
/// some kept one, so the residual is in the class; an optimum must hit each
/// kept violation separately, so the size is at most `t` times optimal for
/// patterns of order at most `t`.
pub fn approx_node_deletion(g: &Graph, class: Class) -> Result<DeletionResult, ModError> {
    let t = pattern_class(class, "packing approximation")?;
    let mut s = VertexSet::new();
    for v in disjoint_packing(g, class) {
        s = s.union(&v.hit_vertices);
    }
    finish(g, class, Mode::Node, Method::ApproxPacking, Solution::Vertices(s), Some(t), 1)
}

/// Repeats packing rounds on the residual graph, deleting the deletable
/// edges of every kept violation, until the residual is in the class.
/// No factor is claimed: deletions can create new violations.
pub fn approx_edge_deletion(g: &Graph, class: Class) -> Result<DeletionResult, ModError> {
    pattern_class(class, "packing approximation")?;
    let mut h = g.clone();
    let mut removed = EdgeSet::new();
    let mut rounds = 0;
    while !is_in_class(&h, class).member {
        rounds += 1;
        let mut batch = EdgeSet::new();
        for v in disjoint_packing(&h, class) {
            batch.extend_from(&v.hit_edges);
        }
        h = h.delete_edges(&batch).expect("violation edges are present");
        removed.extend_from(&batch);
    }
    finish(g, class, Mode::Edge, Method::ApproxPacking, Solution::Edges(removed), None, rounds)
}

/// Conflict-driven deletion for comparability, interval and permutation.
///
/// Each round runs the recognizer and takes its witness (an induced C4 or a
/// forcing conflict). Node mode deletes the least witness vertex whose
/// removal alone certifies the residual, otherwise the witness vertex of
/// largest degree. Edge mode (comparability only) deletes the least witness
/// edge that certifies, otherwise the edge whose forcing chain conflicts.
pub fn heuristic_orientation_deletion(g: &Graph, class: Class, mode: Mode) -> Result<DeletionResult, ModError> {
    if !matches!(class, Class::Comparability | Class::Interval | Class::Permutation) {
        return Err(ModError::Unsupported(format!(
            "the conflict heuristic targets comparability, interval or permutation, not {class}"
        )));
    }
    if mode == Mode::Edge && class != Class::Comparability {
        return Err(ModError::Unsupported(format!(
            "edge deletion toward {class} is not a formulated problem"
        )));
    }
    let mut rounds = 0;
    match mode {
        Mode::Node => {
            let mut removed = VertexSet::new();
            loop {
                let keep: Vec<usize> = (0..g.n()).filter(|&v| !removed.contains(v)).collect();
                let h = g.induced_subgraph(&VertexSet::from(keep.clone())).expect("in range");
                let Some(w) = is_in_class(&h, class).witness else { break };
                rounds += 1;
                let candidates: Vec<usize> = w.hit_vertices.iter().collect();
                let certifying = candidates.iter().copied().find(|&x| {
                    is_in_class(&h.delete_vertices(&VertexSet::from([x])).expect("in range"), class).member
                });
                let pick = certifying.unwrap_or_else(|| {
                    *candidates
                        .iter()
                        .max_by_key(|&&x| (h.degree(x), std::cmp::Reverse(x)))
                        .expect("witness is nonempty")
                });
                removed.insert(keep[pick]);
            }
            finish(g, class, mode, Method::HeuristicConflict, Solution::Vertices(removed), None, rounds)
        }
        Mode::Edge => {
            let mut removed = EdgeSet::new();
            let mut h = g.clone();
            while let Some(w) = is_in_class(&h, class).witness {
                rounds += 1;
                let certifying = w.hit_edges.iter().find(|&(a, b)| {
                    is_in_class(&h.delete_edges(&EdgeSet::from([(a, b)])).expect("edge"), class).member
                });
                let (a, b) = certifying.unwrap_or_else(|| {
                    let (a, b) = w.arcs[0];
                    crate::graph::norm_pair(a, b)
                });
                removed.insert(a, b);
                h = h.delete_edges(&EdgeSet::from([(a, b)])).expect("edge");
            }
            finish(g, class, mode, Method::HeuristicConflict, Solution::Edges(removed), None, rounds)
        }
    }
}

/// The polynomial solver for `(class, mode)`: packing for pattern classes,
/// the conflict heuristic for orientation classes.
pub fn polynomial_deletion(g: &Graph, class: Class, mode: Mode) -> Result<DeletionResult, ModError> {
    match (class.patterns().is_some(), mode) {
        (true, Mode::Node) => approx_node_deletion(g, class),
        (true, Mode::Edge) => approx_edge_deletion(g, class),
        (false, _) => heuristic_orientation_deletion(g, class, mode),
    }
}

pub fn exact_deletion(g: &Graph, class: Class, mode: Mode, caps: DeletionCaps) -> Result<DeletionResult, ModError> {
    match mode {
        Mode::Node => exact_node_deletion(g, class, caps),
        Mode::Edge => exact_edge_deletion(g, class, caps),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioAudit {
    pub approx: usize,
    pub exact: usize,
    pub ratio: f64,
}

/// Runs the polynomial and the exact solver; `0 / 0` counts as ratio 1.
pub fn audit_ratio(g: &Graph, class: Class, mode: Mode, caps: DeletionCaps) -> Result<RatioAudit, ModError> {
    let approx = polynomial_deletion(g, class, mode)?.size;
    let exact = exact_deletion(g, class, mode, caps)?.size;
    let ratio = if exact == 0 {
        if approx == 0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        approx as f64 / exact as f64
    };
    Ok(RatioAudit { approx, exact, ratio })
}
