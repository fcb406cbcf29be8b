//! Optimization over free variables by exhaustive enumeration.

use std::time::Instant;

use thiserror::Error;

use super::ast::{Formula, Sort};
use super::eval::{EvalError, Evaluator, Structure};
use crate::graph::{EdgeSet, Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("formula must have exactly one free variable, a vertex set or an edge set; found {0}")]
    Shape(String),
    #[error("{what} has {size} elements, above the cap of {cap}")]
    Cap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("search budget of {0} assignments exhausted")]
    Budget(u64),
    #[error("deadline reached")]
    Deadline,
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[derive(Clone, Copy, Debug)]
pub struct SearchCaps {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub deadline: Option<Instant>,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            max_vertices: 20,
            max_edges: 20,
            deadline: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetSolution {
    Vertices(VertexSet),
    Edges(EdgeSet),
}

impl SetSolution {
    pub fn len(&self) -> usize {
        match self {
            SetSolution::Vertices(s) => s.len(),
            SetSolution::Edges(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Minimum-cardinality binding of the single free set variable of `f`.
///
/// Sizes are tried in increasing order and subsets of one size in
/// lexicographic order, so the answer is the lexicographically least among
/// the minimum ones. `Ok(None)` means no binding satisfies `f`.
pub fn min_satisfying_set(
    f: &Formula,
    g: &Graph,
    caps: SearchCaps,
) -> Result<Option<SetSolution>, SearchError> {
    let mut free = f.free.iter();
    let (name, sort) = match (free.next(), free.next()) {
        (Some((name, &sort)), None) if matches!(sort, Sort::VertexSet | Sort::EdgeSet) => {
            (name.as_str(), sort)
        }
        _ => {
            let found: Vec<String> = f.free.iter().map(|(n, s)| format!("{n}: {s}")).collect();
            return Err(SearchError::Shape(format!("[{}]", found.join(", "))));
        }
    };
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let (universe, cap, what) = match sort {
        Sort::VertexSet => (g.n(), caps.max_vertices, "vertex set"),
        _ => (edges.len(), caps.max_edges, "edge set"),
    };
    if universe > cap {
        return Err(SearchError::Cap {
            what,
            size: universe,
            cap,
        });
    }
    let base = match sort {
        Sort::VertexSet => Structure::new(g).with_vertex_set(name, VertexSet::default()),
        _ => Structure::new(g).with_edge_set(name, EdgeSet::default()),
    };
    let mut ev = Evaluator::new(f, &base)?;
    let mut checked = 0u64;
    for size in 0..=universe {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            checked += 1;
            if checked.is_multiple_of(1024) && caps.deadline.is_some_and(|d| Instant::now() >= d) {
                return Err(SearchError::Deadline);
            }
            let mut mask = vec![false; universe];
            for &i in &combo {
                mask[i] = true;
            }
            let ok = if sort == Sort::VertexSet {
                ev.bind_vertex_mask(name, mask);
                ev.eval()
            } else {
                ev.bind_edge_mask(name, mask);
                ev.eval()
            };
            if ok {
                return Ok(Some(match sort {
                    Sort::VertexSet => SetSolution::Vertices(VertexSet::from(combo)),
                    _ => SetSolution::Edges(combo.iter().map(|&i| edges[i]).collect()),
                }));
            }
            if !next_combination(&mut combo, universe) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `c` to the next `|c|`-subset of `0..n` in lexicographic order.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A coloring found by [`find_coloring_by_formula`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaColoring {
    pub k: usize,
    /// Colors of vertices, when `f` has a free vertex family.
    pub vertex_colors: Option<Vec<usize>>,
    /// Colors of edges in canonical order, when `f` has a free edge family.
    pub edge_colors: Option<Vec<usize>>,
}

/// Lexicographically least `k`-coloring satisfying `f`, whose free variables
/// must be at most one vertex family and at most one edge family.
///
/// Vertices are assigned before edges. Formulas cannot name individual
/// colors, so every satisfying assignment stays satisfying under color
/// permutation; only assignments in first-occurrence normal form are tried,
/// which keeps the lexicographically least one. At most `budget` complete
/// assignments are evaluated.
pub fn find_coloring_by_formula(
    f: &Formula,
    g: &Graph,
    k: usize,
    budget: u64,
) -> Result<Option<FormulaColoring>, SearchError> {
    let mut vf = None;
    let mut ef = None;
    for (name, &sort) in &f.free {
        match sort {
            Sort::VertexFamily if vf.is_none() => vf = Some(name.clone()),
            Sort::EdgeFamily if ef.is_none() => ef = Some(name.clone()),
            _ => {
                let found: Vec<String> =
                    f.free.iter().map(|(n, s)| format!("{n}: {s}")).collect();
                return Err(SearchError::Shape(format!("[{}]", found.join(", "))));
            }
        }
    }
    let n = g.n();
    let m = g.m();
    let nv = if vf.is_some() { n } else { 0 };
    let ne = if ef.is_some() { m } else { 0 };
    let total = nv + ne;
    let mut base = Structure::new(g).with_colors(k);
    if let Some(name) = &vf {
        base = base.with_vertex_family(name, vec![VertexSet::default(); k]);
    }
    if let Some(name) = &ef {
        base = base.with_edge_family(name, vec![EdgeSet::default(); k]);
    }
    let mut ev = Evaluator::new(f, &base)?;
    if k == 0 && total > 0 {
        return Ok(None);
    }
    let mut colors = vec![0usize; total];
    let mut tried = 0u64;
    loop {
        tried += 1;
        if tried > budget {
            return Err(SearchError::Budget(budget));
        }
        if let Some(name) = &vf {
            ev.bind_vertex_coloring(name, &colors[..nv], k);
        }
        if let Some(name) = &ef {
            ev.bind_edge_coloring(name, &colors[nv..], k);
        }
        if ev.eval() {
            return Ok(Some(FormulaColoring {
                k,
                vertex_colors: vf.as_ref().map(|_| colors[..nv].to_vec()),
                edge_colors: ef.as_ref().map(|_| colors[nv..].to_vec()),
            }));
        }
        if !next_restricted_growth(&mut colors, k) {
            return Ok(None);
        }
    }
}

/// Next string in lexicographic order with `s[i] <= max(s[..i]) + 1` and all values `< k`.
fn next_restricted_growth(s: &mut [usize], k: usize) -> bool {
    let len = s.len();
    let mut i = len;
    while i > 1 {
        i -= 1;
        let bound = s[..i].iter().copied().max().unwrap_or(0) + 1;
        if s[i] + 1 < k && s[i] < bound {
            s[i] += 1;
            for x in &mut s[i + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}

/// Smallest `k` in `1..=max_k` with a satisfying coloring.
pub fn min_coloring_by_formula(
    f: &Formula,
    g: &Graph,
    max_k: usize,
    budget: u64,
) -> Result<Option<FormulaColoring>, SearchError> {
    for k in 1..=max_k {
        if let Some(c) = find_coloring_by_formula(f, g, k, budget)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}
