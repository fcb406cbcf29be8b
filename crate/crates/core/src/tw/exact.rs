//! Exhaustive solvers for every domination and coloring variant.
//!
//! Domination: subsets in order of size, then lexicographically, tested with
//! bitmask predicates. Coloring: backtracking over assignments in
//! first-occurrence normal form (a color is at most one more than every
//! color used before it), which still reaches the lexicographically least
//! valid assignment because validity never depends on the color names.

use std::collections::{HashSet, VecDeque};
use std::time::Instant;

use super::problems::{
    certify_coloring, certify_domination, ColoredElements, ColoringAssignment, ColoringVariant,
    DominationResult, DominationVariant, SolveError,
};
use crate::graph::{Graph, VertexSet};
use crate::logic::search::next_combination;

#[derive(Clone, Copy, Debug)]
pub struct ExactCaps {
    pub domination_vertices: usize,
    pub coloring_vertices: usize,
    pub coloring_edges: usize,
    pub deadline: Option<Instant>,
}

impl Default for ExactCaps {
    fn default() -> Self {
        ExactCaps {
            domination_vertices: 20,
            coloring_vertices: 10,
            coloring_edges: 10,
            deadline: None,
        }
    }
}

fn masks(g: &Graph) -> Vec<u64> {
    g.neighbor_masks()
}

fn connected_mask(nb: &[u64], s: u64) -> bool {
    if s == 0 {
        return true;
    }
    let mut seen = 1u64 << s.trailing_zeros();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros();
        frontier &= frontier - 1;
        let next = nb[v as usize] & s & !seen;
        seen |= next;
        frontier |= next;
    }
    seen == s
}

/// Whether `s` satisfies the variant, by direct bit arithmetic.
pub fn domination_predicate(nb: &[u64], variant: DominationVariant, s: u64) -> bool {
    let n = nb.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let dominated = (0..n).all(|v| s >> v & 1 == 1 || nb[v] & s != 0);
    match variant {
        DominationVariant::Dom => dominated,
        DominationVariant::TotalDom => (0..n).all(|v| nb[v] & s != 0),
        DominationVariant::ConnectedDom => dominated && connected_mask(nb, s),
        DominationVariant::TotalOuterConnectedDom => {
            (0..n).all(|v| nb[v] & s != 0) && connected_mask(nb, all & !s)
        }
        DominationVariant::CycleDom => {
            dominated
                && s.count_ones() >= 3
                && (0..n).all(|v| s >> v & 1 == 0 || (nb[v] & s).count_ones() == 2)
                && connected_mask(nb, s)
        }
        DominationVariant::PerfectDom => {
            (0..n).all(|v| s >> v & 1 == 1 || (nb[v] & s).count_ones() == 1)
        }
        DominationVariant::CliqueDom => {
            dominated && (0..n).all(|v| s >> v & 1 == 0 || (nb[v] | 1 << v) & s == s)
        }
    }
}

/// Minimum set for `variant`, lexicographically least among minimum ones;
/// `Ok(None)` when no set qualifies.
pub fn solve_domination_exact(
    g: &Graph,
    variant: DominationVariant,
    caps: ExactCaps,
) -> Result<Option<DominationResult>, SolveError> {
    let n = g.n();
    let cap = caps.domination_vertices.min(63);
    if n > cap {
        return Err(SolveError::Cap {
            what: "vertex count",
            size: n,
            cap,
        });
    }
    let nb = masks(g);
    let mut tried = 0u64;
    for size in 0..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            tried += 1;
            if tried.is_multiple_of(4096) && caps.deadline.is_some_and(|d| Instant::now() >= d) {
                return Err(SolveError::Deadline);
            }
            let s = combo.iter().fold(0u64, |acc, &v| acc | 1 << v);
            if domination_predicate(&nb, variant, s) {
                return certify_domination(g, variant, VertexSet::from(combo)).map(Some);
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Rainbow connectivity via reachability over (vertex, colors used) states:
/// a walk with distinct edge colors shortcuts to a path with distinct colors.
pub fn rainbow_connected_by_states(g: &Graph, edge_colors: &[usize]) -> bool {
    let n = g.n();
    let index = g.edge_index();
    for s in 0..n {
        let mut reached = vec![false; n];
        reached[s] = true;
        let mut seen: HashSet<(usize, u64)> = HashSet::from([(s, 0)]);
        let mut queue = VecDeque::from([(s, 0u64)]);
        while let Some((u, used)) = queue.pop_front() {
            for &w in g.neighbors(u) {
                let c = edge_colors[index[&crate::graph::norm_pair(u, w)]];
                if used >> c & 1 == 1 {
                    continue;
                }
                let next = (w, used | 1 << c);
                if seen.insert(next) {
                    reached[w] = true;
                    queue.push_back(next);
                }
            }
        }
        if reached.contains(&false) {
            return false;
        }
    }
    true
}

struct ColorSearch<'a> {
    g: &'a Graph,
    variant: ColoringVariant,
    k: usize,
    nv: usize,
    edges: Vec<(usize, usize)>,
    /// For each edge, earlier edges sharing an endpoint.
    edge_conflicts: Vec<Vec<usize>>,
    colors: Vec<usize>,
    class_size: Vec<usize>,
    steps: u64,
    deadline: Option<Instant>,
}

impl ColorSearch<'_> {
    fn vertex_ok(&self, v: usize, c: usize) -> bool {
        let col = &self.colors;
        for &u in self.g.neighbors(v) {
            if u < v && col[u] == c {
                return false;
            }
        }
        match self.variant {
            ColoringVariant::Star => {
                // no 4-vertex path through v among colored vertices uses two colors
                let g = self.g;
                let done = |x: usize| x < v;
                let colour = |x: usize| if x == v { c } else { col[x] };
                for &a in g.neighbors(v).iter().filter(|&&a| done(a)) {
                    for &b in g.neighbors(a).iter().filter(|&&b| done(b) && b != v) {
                        // v - a - b - x
                        for &x in g.neighbors(b).iter().filter(|&&x| done(x) && x != a && x != v) {
                            if colour(v) == colour(b) && colour(a) == colour(x) {
                                return false;
                            }
                        }
                    }
                    for &b in g.neighbors(v).iter().filter(|&&b| done(b) && b != a) {
                        // a - v - b - x
                        for &x in g.neighbors(b).iter().filter(|&&x| done(x) && x != a && x != v) {
                            if colour(a) == colour(b) && colour(v) == colour(x) {
                                return false;
                            }
                        }
                    }
                }
                true
            }
            ColoringVariant::Equitable => {
                let n = self.g.n();
                self.class_size[c] < n.div_ceil(self.k)
            }
            _ => true,
        }
    }

    fn edge_ok(&self, j: usize, c: usize) -> bool {
        match self.variant {
            ColoringVariant::Rainbow => true,
            _ => {
                let nv = self.nv;
                if self.edge_conflicts[j].iter().any(|&i| self.colors[nv + i] == c) {
                    return false;
                }
                if self.variant == ColoringVariant::Total {
                    let (u, w) = self.edges[j];
                    if self.colors[u] == c || self.colors[w] == c {
                        return false;
                    }
                }
                true
            }
        }
    }

    fn complete_ok(&self) -> bool {
        match self.variant {
            ColoringVariant::Cd => {
                let n = self.g.n();
                (0..self.k).all(|c| {
                    let class: Vec<usize> = (0..n).filter(|&v| self.colors[v] == c).collect();
                    (0..n).any(|u| {
                        if self.colors[u] == c {
                            class.len() == 1
                        } else {
                            class.iter().all(|&a| self.g.has_edge(u, a))
                        }
                    }) || (class.is_empty() && n == 0)
                })
            }
            ColoringVariant::Equitable => {
                let lo = self.class_size.iter().min().copied().unwrap_or(0);
                let hi = self.class_size.iter().max().copied().unwrap_or(0);
                hi <= lo + 1
            }
            ColoringVariant::Rainbow => rainbow_connected_by_states(self.g, &self.colors[self.nv..]),
            _ => true,
        }
    }

    /// Depth-first over positions; `top` is one more than the largest color used.
    fn run(&mut self, i: usize, top: usize) -> Result<bool, SolveError> {
        self.steps += 1;
        if self.steps.is_multiple_of(8192) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(SolveError::Deadline);
        }
        if i == self.colors.len() {
            return Ok(self.complete_ok());
        }
        for c in 0..self.k.min(top + 1) {
            let ok = if i < self.nv {
                self.vertex_ok(i, c)
            } else {
                self.edge_ok(i - self.nv, c)
            };
            if !ok {
                continue;
            }
            self.colors[i] = c;
            if i < self.nv {
                self.class_size[c] += 1;
            }
            if self.run(i + 1, top.max(c + 1))? {
                return Ok(true);
            }
            if i < self.nv {
                self.class_size[c] -= 1;
            }
            self.colors[i] = usize::MAX;
        }
        Ok(false)
    }
}

fn check_coloring_caps(g: &Graph, variant: ColoringVariant, caps: &ExactCaps) -> Result<(), SolveError> {
    let elements = variant.elements();
    if elements != ColoredElements::Edges && g.n() > caps.coloring_vertices {
        return Err(SolveError::Cap {
            what: "vertex count",
            size: g.n(),
            cap: caps.coloring_vertices,
        });
    }
    if elements != ColoredElements::Vertices && g.m() > caps.coloring_edges {
        return Err(SolveError::Cap {
            what: "edge count",
            size: g.m(),
            cap: caps.coloring_edges,
        });
    }
    Ok(())
}

/// Lexicographically least valid `k`-coloring, or `Ok(None)` if there is none.
pub fn solve_coloring_exact(
    g: &Graph,
    variant: ColoringVariant,
    k: usize,
    caps: ExactCaps,
) -> Result<Option<ColoringAssignment>, SolveError> {
    check_coloring_caps(g, variant, &caps)?;
    if k > 64 {
        return Err(SolveError::Cap {
            what: "color count",
            size: k,
            cap: 64,
        });
    }
    let nv = if variant.elements() == ColoredElements::Edges { 0 } else { g.n() };
    let edges: Vec<(usize, usize)> = if variant.elements() == ColoredElements::Vertices {
        Vec::new()
    } else {
        g.edges().collect()
    };
    if variant == ColoringVariant::Rainbow && !g.is_connected() {
        return Ok(None);
    }
    let total = nv + edges.len();
    if k == 0 {
        return Ok(None);
    }
    let edge_conflicts = edges
        .iter()
        .enumerate()
        .map(|(j, &(a, b))| {
            (0..j)
                .filter(|&i| {
                    let (c, d) = edges[i];
                    a == c || a == d || b == c || b == d
                })
                .collect()
        })
        .collect();
    let mut search = ColorSearch {
        g,
        variant,
        k,
        nv,
        edges,
        edge_conflicts,
        colors: vec![usize::MAX; total],
        class_size: vec![0; k],
        steps: 0,
        deadline: caps.deadline,
    };
    if search.run(0, 0)? {
        certify_coloring(g, variant, k, search.colors).map(Some)
    } else {
        Ok(None)
    }
}

/// Smallest `k >= 1` with a valid coloring; `Ok(None)` only for rainbow
/// coloring of a disconnected graph.
pub fn min_coloring_exact(
    g: &Graph,
    variant: ColoringVariant,
    caps: ExactCaps,
) -> Result<Option<ColoringAssignment>, SolveError> {
    check_coloring_caps(g, variant, &caps)?;
    if variant == ColoringVariant::Rainbow && !g.is_connected() {
        return Ok(None);
    }
    let upper = variant.element_count(g).max(1);
    for k in 1..=upper {
        if let Some(a) = solve_coloring_exact(g, variant, k, caps)? {
            return Ok(Some(a));
        }
    }
    Err(SolveError::Internal(format!(
        "{variant}: no coloring with {upper} colors"
    )))
}
