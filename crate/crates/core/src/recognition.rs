//! Class membership via forbidden induced patterns, transitive orientation,
//! and elimination orderings, with concrete witnesses on failure.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{norm_pair, EdgeSet, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternName {
    P4,
    #[serde(rename = "2K2")]
    TwoK2,
    C4,
    C5,
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternName::P4 => "P4",
            PatternName::TwoK2 => "2K2",
            PatternName::C4 => "C4",
            PatternName::C5 => "C5",
        })
    }
}

/// A small graph on positions `0..order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForbiddenPattern {
    pub name: PatternName,
    pub order: usize,
    pub edges: &'static [(usize, usize)],
    /// Pattern edges whose deletion the edge-deletion clause allows.
    pub deletable: &'static [(usize, usize)],
}

pub const P4: ForbiddenPattern = ForbiddenPattern {
    name: PatternName::P4,
    order: 4,
    edges: &[(0, 1), (1, 2), (2, 3)],
    deletable: &[(0, 1), (1, 2), (2, 3)],
};

/// Two disjoint edges, on positions (0, 2) and (1, 3).
pub const TWO_K2: ForbiddenPattern = ForbiddenPattern {
    name: PatternName::TwoK2,
    order: 4,
    edges: &[(0, 2), (1, 3)],
    deletable: &[(0, 2), (1, 3)],
};

pub const C4: ForbiddenPattern = ForbiddenPattern {
    name: PatternName::C4,
    order: 4,
    edges: &[(0, 1), (1, 2), (2, 3), (0, 3)],
    deletable: &[(0, 1), (1, 2), (2, 3), (0, 3)],
};

pub const C5: ForbiddenPattern = ForbiddenPattern {
    name: PatternName::C5,
    order: 5,
    edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
    deletable: &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
};

impl ForbiddenPattern {
    pub fn by_name(name: PatternName) -> ForbiddenPattern {
        match name {
            PatternName::P4 => P4,
            PatternName::TwoK2 => TWO_K2,
            PatternName::C4 => C4,
            PatternName::C5 => C5,
        }
    }

    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.order, self.edges.iter().copied()).expect("pattern edges are valid")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    PatternEmbedding,
    TransitivityConflict,
    /// Induced cycle that rules out a chordal class.
    InducedCycle,
}

/// Concrete evidence that a graph is outside a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Violation {
    pub kind: ViolationKind,
    pub pattern: Option<PatternName>,
    /// Pattern embeddings: image of pattern position `i` at index `i`.
    /// Conflicts: vertices of the forcing chain by first appearance.
    /// Cycles: the cycle in order.
    pub vertices: Vec<usize>,
    pub hit_vertices: VertexSet,
    pub hit_edges: EdgeSet,
    /// True when the evidence lives in the complement graph.
    pub in_complement: bool,
    /// Forcing chain for conflicts: each arc forces the next, and the last is
    /// the reverse of the first.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub arcs: Vec<(usize, usize)>,
}

impl Violation {
    fn embedding(p: &ForbiddenPattern, vertices: Vec<usize>) -> Violation {
        let hit_edges = p
            .deletable
            .iter()
            .map(|&(i, j)| norm_pair(vertices[i], vertices[j]))
            .collect();
        Violation {
            kind: ViolationKind::PatternEmbedding,
            pattern: Some(p.name),
            hit_vertices: vertices.iter().copied().collect(),
            vertices,
            hit_edges,
            in_complement: false,
            arcs: Vec::new(),
        }
    }

    fn cycle(cycle: Vec<usize>) -> Violation {
        let k = cycle.len();
        Violation {
            kind: ViolationKind::InducedCycle,
            pattern: None,
            hit_vertices: cycle.iter().copied().collect(),
            hit_edges: (0..k).map(|i| norm_pair(cycle[i], cycle[(i + 1) % k])).collect(),
            vertices: cycle,
            in_complement: false,
            arcs: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Class {
    Cograph,
    Split,
    Threshold,
    Comparability,
    Interval,
    Permutation,
    Chordal,
    ChordalBipartite,
}

impl Class {
    pub const ALL: [Class; 8] = [
        Class::Cograph,
        Class::Split,
        Class::Threshold,
        Class::Comparability,
        Class::Interval,
        Class::Permutation,
        Class::Chordal,
        Class::ChordalBipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::Cograph => "cograph",
            Class::Split => "split",
            Class::Threshold => "threshold",
            Class::Comparability => "comparability",
            Class::Interval => "interval",
            Class::Permutation => "permutation",
            Class::Chordal => "chordal",
            Class::ChordalBipartite => "chordal-bipartite",
        }
    }

    /// Forbidden patterns, for the classes characterized by finitely many.
    pub fn patterns(self) -> Option<&'static [ForbiddenPattern]> {
        match self {
            Class::Cograph => Some(&[P4]),
            Class::Split => Some(&[TWO_K2, C4, C5]),
            Class::Threshold => Some(&[TWO_K2, C4, P4]),
            _ => None,
        }
    }

    /// Largest pattern order, the approximation factor of vertex packing.
    pub fn max_pattern_order(self) -> Option<usize> {
        self.patterns().map(|ps| ps.iter().map(|p| p.order).max().unwrap_or(0))
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Class {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Class::ALL
            .into_iter()
            .find(|c| c.name() == s || (s == "chordal_bipartite" && *c == Class::ChordalBipartite))
            .ok_or_else(|| format!("unknown class `{s}`"))
    }
}

// ---------------------------------------------------------------------------
// pattern embeddings

/// Pair index of `(i, j)`, `i < j < k`, in the order (0,1), (0,2), ..., (k-2,k-1).
fn pair_bit(i: usize, j: usize, k: usize) -> usize {
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

/// `tables()[k - 4][code]` is the pattern whose induced adjacency on a sorted
/// `k`-subset has code `code`, with the lexicographically least position map.
fn tables() -> &'static [Vec<Option<(PatternName, [u8; 5])>>; 2] {
    static TABLES: OnceLock<[Vec<Option<(PatternName, [u8; 5])>>; 2]> = OnceLock::new();
    TABLES.get_or_init(|| {
        let build = |k: usize| {
            let pairs = k * (k - 1) / 2;
            let mut table = vec![None; 1 << pairs];
            let mut perms = Vec::new();
            permutations(k, &mut Vec::new(), &mut perms);
            for p in [P4, TWO_K2, C4, C5].iter().filter(|p| p.order == k) {
                for perm in &perms {
                    // perm[i] = subset index that pattern position i maps to
                    let mut code = 0usize;
                    for &(a, b) in p.edges {
                        let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
                        code |= 1 << pair_bit(x, y, k);
                    }
                    if table[code].is_none() {
                        let mut arr = [0u8; 5];
                        for (i, &x) in perm.iter().enumerate() {
                            arr[i] = x as u8;
                        }
                        table[code] = Some((p.name, arr));
                    }
                }
            }
            table
        };
        [build(4), build(5)]
    })
}

/// Permutations of `0..k` in lexicographic order.
fn permutations(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for x in 0..k {
        if !cur.contains(&x) {
            cur.push(x);
            permutations(k, cur, out);
            cur.pop();
        }
    }
}

/// If the sorted subset `vs` induces a copy of one of `patterns`, the
/// embedding with the lexicographically least vertex tuple.
pub fn match_pattern(g: &Graph, vs: &[usize], patterns: &[ForbiddenPattern]) -> Option<Violation> {
    let k = vs.len();
    if !(4..=5).contains(&k) {
        return None;
    }
    let mut code = 0usize;
    for i in 0..k {
        for j in i + 1..k {
            if g.has_edge(vs[i], vs[j]) {
                code |= 1 << pair_bit(i, j, k);
            }
        }
    }
    let (name, perm) = tables()[k - 4][code]?;
    let p = patterns.iter().find(|p| p.name == name)?;
    Some(Violation::embedding(p, (0..k).map(|i| vs[perm[i] as usize]).collect()))
}

/// Lazy stream of the induced embeddings of a class's patterns, one per
/// vertex set, ordered lexicographically by sorted vertex set.
pub struct Violations<'g> {
    g: &'g Graph,
    patterns: &'static [ForbiddenPattern],
    max_order: usize,
    cur: Vec<usize>,
    started: bool,
}

impl Violations<'_> {
    fn advance(&mut self) -> bool {
        let n = self.g.n();
        if !self.started {
            self.started = true;
            return true;
        }
        if self.cur.len() < self.max_order {
            let next = self.cur.last().map_or(0, |&l| l + 1);
            if next < n {
                self.cur.push(next);
                return true;
            }
        }
        while let Some(l) = self.cur.pop() {
            if l + 1 < n {
                self.cur.push(l + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for Violations<'_> {
    type Item = Violation;

    fn next(&mut self) -> Option<Violation> {
        while self.advance() {
            if self.cur.len() >= 4 {
                if let Some(v) = match_pattern(self.g, &self.cur, self.patterns) {
                    return Some(v);
                }
            }
        }
        None
    }
}

/// Violations of a pattern class; empty for other classes.
pub fn enumerate_violations(g: &Graph, class: Class) -> Violations<'_> {
    let patterns = class.patterns().unwrap_or(&[]);
    Violations {
        g,
        patterns,
        max_order: if patterns.is_empty() { 0 } else { class.max_pattern_order().unwrap_or(0) },
        cur: Vec::new(),
        started: false,
    }
}

// ---------------------------------------------------------------------------
// transitive orientation

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrientationError {
    #[error("arc ({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("edge ({0}, {1}) is oriented both ways")]
    BothWays(usize, usize),
    #[error("edge ({0}, {1}) is not oriented")]
    Missing(usize, usize),
}

/// Directed pairs over a graph's edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    pub arcs: BTreeSet<(usize, usize)>,
}

impl Orientation {
    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.arcs.contains(&(a, b))
    }
}

impl FromIterator<(usize, usize)> for Orientation {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        Orientation {
            arcs: iter.into_iter().collect(),
        }
    }
}

/// Orientation of every edge of a comparability graph, or a forcing conflict.
///
/// Edges are split into implication classes one at a time: orienting `a->b`
/// forces `a->c` for each remaining neighbor `c` of `a` not adjacent to `b`
/// in the remaining graph, and `c->b` for each remaining neighbor `c` of `b`
/// not adjacent to `a`. A class that contains both directions of an edge
/// proves the graph is not a comparability graph; otherwise the class is
/// oriented as found and removed.
pub fn transitive_orientation(g: &Graph) -> Result<Orientation, Violation> {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let index = g.edge_index();
    let mut remaining = vec![true; edges.len()];
    let mut adj: Vec<BTreeSet<usize>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut arcs = BTreeSet::new();
    // arc id: 2 * edge + (1 if high->low)
    let arc_of = |a: usize, b: usize| -> usize { 2 * index[&norm_pair(a, b)] + usize::from(a > b) };
    let ends = |id: usize| -> (usize, usize) {
        let (u, v) = edges[id / 2];
        if id.is_multiple_of(2) {
            (u, v)
        } else {
            (v, u)
        }
    };
    let mut parent = vec![usize::MAX; 2 * edges.len()];
    let mut in_class = vec![false; 2 * edges.len()];
    for start in 0..edges.len() {
        if !remaining[start] {
            continue;
        }
        let root = 2 * start;
        in_class[root] = true;
        parent[root] = root;
        let mut members = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(id) = queue.pop_front() {
            let (a, b) = ends(id);
            let mut forced = Vec::new();
            for &c in &adj[a] {
                if c != b && !adj[b].contains(&c) {
                    forced.push(arc_of(a, c));
                }
            }
            for &c in &adj[b] {
                if c != a && !adj[a].contains(&c) {
                    forced.push(arc_of(c, b));
                }
            }
            for f in forced {
                if in_class[f] {
                    continue;
                }
                in_class[f] = true;
                parent[f] = id;
                if in_class[f ^ 1] {
                    return Err(conflict(&parent, f, &ends));
                }
                members.push(f);
                queue.push_back(f);
            }
        }
        for &id in &members {
            let (a, b) = ends(id);
            arcs.insert((a, b));
            remaining[id / 2] = false;
        }
        for &id in &members {
            let (a, b) = ends(id);
            adj[a].remove(&b);
            adj[b].remove(&a);
        }
    }
    Ok(Orientation { arcs })
}

fn conflict(parent: &[usize], f: usize, ends: &dyn Fn(usize) -> (usize, usize)) -> Violation {
    let chain = |mut x: usize| {
        let mut out = vec![x];
        while parent[x] != x {
            x = parent[x];
            out.push(x);
        }
        out.reverse();
        out
    };
    // forcing is symmetric, so f ... root ... f^1 is a forcing walk
    let mut arcs_ids: Vec<usize> = chain(f).into_iter().rev().collect();
    arcs_ids.extend(chain(f ^ 1).into_iter().skip(1));
    let arcs: Vec<(usize, usize)> = arcs_ids.iter().map(|&x| ends(x)).collect();
    let mut vertices = Vec::new();
    let mut hit_edges = EdgeSet::new();
    for &(a, b) in &arcs {
        for v in [a, b] {
            if !vertices.contains(&v) {
                vertices.push(v);
            }
        }
        hit_edges.insert(a, b);
    }
    Violation {
        kind: ViolationKind::TransitivityConflict,
        pattern: None,
        hit_vertices: vertices.iter().copied().collect(),
        vertices,
        hit_edges,
        in_complement: false,
        arcs,
    }
}

/// Checks that `o` orients each edge of `g` exactly once; returns the
/// lexicographically least `(x, y, z)` with `x->y`, `y->z` but no `x->z`.
pub fn verify_orientation_transitive(
    g: &Graph,
    o: &Orientation,
) -> Result<Option<(usize, usize, usize)>, OrientationError> {
    for &(a, b) in &o.arcs {
        if a >= g.n() || b >= g.n() || !g.has_edge(a, b) {
            return Err(OrientationError::NotAnEdge(a, b));
        }
        if o.has_arc(b, a) {
            let (u, v) = norm_pair(a, b);
            return Err(OrientationError::BothWays(u, v));
        }
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !o.has_arc(u, v) && !o.has_arc(v, u)) {
        return Err(OrientationError::Missing(u, v));
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for &(a, b) in &o.arcs {
        out[a].push(b);
    }
    for x in 0..g.n() {
        for &y in &out[x] {
            for &z in &out[y] {
                if !o.has_arc(x, z) {
                    return Ok(Some((x, y, z)));
                }
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// chordal classes

/// Maximum cardinality search order, reversed so it is a perfect elimination
/// order exactly when the graph is chordal.
pub fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("a vertex remains");
        done[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&first) = later.iter().min_by_key(|&&w| pos[w]) else { continue };
        if later.iter().any(|&w| w != first && !g.has_edge(first, w)) {
            return false;
        }
    }
    true
}

/// An induced cycle of length at least 4, if any: for the least vertex `v`
/// with non-adjacent neighbors `u < w` joined by a path avoiding the rest of
/// `N[v]`, the cycle closes `v` with a shortest such path.
pub fn find_long_induced_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nb = g.neighbors(v);
        for (i, &u) in nb.iter().enumerate() {
            for &w in &nb[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                let blocked = |x: usize| x == v || (x != u && x != w && g.has_edge(v, x));
                let mut prev = vec![usize::MAX; n];
                prev[u] = u;
                let mut queue = VecDeque::from([u]);
                while let Some(x) = queue.pop_front() {
                    if x == w {
                        break;
                    }
                    for &y in g.neighbors(x) {
                        if prev[y] == usize::MAX && !blocked(y) {
                            prev[y] = x;
                            queue.push_back(y);
                        }
                    }
                }
                if prev[w] != usize::MAX {
                    let mut path = vec![w];
                    let mut x = w;
                    while x != u {
                        x = prev[x];
                        path.push(x);
                    }
                    path.reverse();
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// A shortest odd cycle, if the graph is not bipartite.
pub fn find_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut prev = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut order = Vec::new();
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        for (x, y) in g.edges() {
            if dist[x] == usize::MAX || dist[x] != dist[y] {
                continue;
            }
            let len = 2 * dist[x] + 1;
            if best.as_ref().is_some_and(|b| b.len() <= len) {
                continue;
            }
            let walk = |mut z: usize| {
                let mut p = vec![z];
                while z != s {
                    z = prev[z];
                    p.push(z);
                }
                p
            };
            let px = walk(x);
            let py = walk(y);
            // the two tree paths must meet only at s
            let shared = px.iter().filter(|z| py.contains(z)).count();
            if shared != 1 {
                continue;
            }
            let mut cycle: Vec<usize> = px.into_iter().rev().collect();
            cycle.extend(py.into_iter().take(dist[y]));
            best = Some(cycle);
        }
    }
    best
}

/// An induced cycle with at least `min_len` vertices, by depth-first search
/// over induced paths starting at the cycle's least vertex.
pub fn find_induced_cycle_at_least(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, min_len: usize) -> bool {
        let s = path[0];
        let last = *path.last().expect("nonempty");
        for &x in g.neighbors(last) {
            if x <= s || path.contains(&x) {
                continue;
            }
            // x may touch only `last` among the interior, and `s` only to close
            let interior = path.get(1..path.len() - 1).unwrap_or(&[]);
            if interior.iter().any(|&p| g.has_edge(p, x)) {
                continue;
            }
            if path.len() >= 2 && g.has_edge(s, x) {
                if path.len() + 1 >= min_len {
                    path.push(x);
                    return true;
                }
                continue;
            }
            path.push(x);
            if extend(g, path, min_len) {
                return true;
            }
            path.pop();
        }
        false
    }
    let min_len = min_len.max(3);
    for s in 0..g.n() {
        let mut path = vec![s];
        if extend(g, &mut path, min_len) {
            return Some(path);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// membership

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub witness: Option<Violation>,
}

impl Membership {
    fn yes() -> Self {
        Membership {
            member: true,
            witness: None,
        }
    }

    fn no(w: Violation) -> Self {
        Membership {
            member: false,
            witness: Some(w),
        }
    }
}

fn in_complement(mut v: Violation) -> Violation {
    v.in_complement = true;
    v
}

/// Membership in `class`, with a witness when the answer is no.
pub fn is_in_class(g: &Graph, class: Class) -> Membership {
    match class {
        Class::Cograph | Class::Split | Class::Threshold => {
            match enumerate_violations(g, class).next() {
                Some(v) => Membership::no(v),
                None => Membership::yes(),
            }
        }
        Class::Comparability => match transitive_orientation(g) {
            Ok(_) => Membership::yes(),
            Err(v) => Membership::no(v),
        },
        Class::Interval => {
            let c4 = enumerate_c4(g);
            if let Some(v) = c4 {
                return Membership::no(v);
            }
            match transitive_orientation(&g.complement()) {
                Ok(_) => Membership::yes(),
                Err(v) => Membership::no(in_complement(v)),
            }
        }
        Class::Permutation => {
            if let Err(v) = transitive_orientation(g) {
                return Membership::no(v);
            }
            match transitive_orientation(&g.complement()) {
                Ok(_) => Membership::yes(),
                Err(v) => Membership::no(in_complement(v)),
            }
        }
        Class::Chordal => {
            if is_perfect_elimination_order(g, &mcs_elimination_order(g)) {
                Membership::yes()
            } else {
                let cycle = find_long_induced_cycle(g).expect("non-chordal graphs have a long induced cycle");
                Membership::no(Violation::cycle(cycle))
            }
        }
        Class::ChordalBipartite => {
            if let Some(cycle) = find_odd_cycle(g) {
                return Membership::no(Violation::cycle(cycle));
            }
            match find_induced_cycle_at_least(g, 6) {
                Some(cycle) => Membership::no(Violation::cycle(cycle)),
                None => Membership::yes(),
            }
        }
    }
}

/// The first induced C4, in the order of [`enumerate_violations`].
pub fn enumerate_c4(g: &Graph) -> Option<Violation> {
    Violations {
        g,
        patterns: &[C4],
        max_order: 4,
        cur: Vec::new(),
        started: false,
    }
    .next()
}
