//! Tree decompositions: validation, PACE `.td` I/O, and elimination-order construction.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest graph the exact strategy accepts.
pub const EXACT_SMALL_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TdError {
    #[error("decomposition has no bags")]
    NoBags,
    #[error("bag {bag} holds vertex {vertex}, but the graph has {n} vertices")]
    VertexOutOfRange { bag: usize, vertex: usize, n: usize },
    #[error("tree edge ({0}, {1}) names a missing bag")]
    BadTreeEdge(usize, usize),
    #[error("bags and tree edges do not form a tree")]
    NotATree,
    #[error("vertex {0} lies in no bag")]
    VertexUncovered(usize),
    #[error("edge ({0}, {1}) lies in no bag")]
    EdgeUncovered(usize, usize),
    #[error("bags containing vertex {0} are not connected in the tree")]
    RunningIntersection(usize),
    #[error("{0}")]
    Nice(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("exact decomposition needs n <= {cap}, got {n}")]
    Cap { n: usize, cap: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    /// Tree edges between bag indices.
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Self {
        TreeDecomposition {
            bags: bags.into_iter().map(VertexSet::from).collect(),
            edges,
        }
    }

    /// Largest bag size minus one (0 when every bag is empty).
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Checks tree shape and running intersection; needs no graph.
    pub fn validate_structure(&self) -> Result<(), TdError> {
        let b = self.bags.len();
        if b == 0 {
            return Err(TdError::NoBags);
        }
        for &(x, y) in &self.edges {
            if x >= b || y >= b || x == y {
                return Err(TdError::BadTreeEdge(x, y));
            }
        }
        if self.edges.len() != b - 1 || !connected_subtree(&self.tree_adjacency(), &vec![true; b]) {
            return Err(TdError::NotATree);
        }
        let top = self.bags.iter().flat_map(|s| s.iter()).max().map_or(0, |v| v + 1);
        let adj = self.tree_adjacency();
        for v in 0..top {
            let holds: Vec<bool> = self.bags.iter().map(|s| s.contains(v)).collect();
            if !connected_subtree(&adj, &holds) {
                return Err(TdError::RunningIntersection(v));
            }
        }
        Ok(())
    }

    /// Checks vertex coverage, edge coverage and running intersection against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), TdError> {
        self.validate_structure()?;
        let n = g.n();
        let mut covered = vec![false; n];
        for (i, bag) in self.bags.iter().enumerate() {
            for v in bag.iter() {
                if v >= n {
                    return Err(TdError::VertexOutOfRange { bag: i, vertex: v, n });
                }
                covered[v] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(TdError::VertexUncovered(v));
        }
        let mut seen = BTreeSet::new();
        for bag in &self.bags {
            let members = bag.as_slice();
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if g.has_edge(u, v) {
                        seen.insert((u, v));
                    }
                }
            }
        }
        if let Some((u, v)) = g.edges().find(|e| !seen.contains(e)) {
            return Err(TdError::EdgeUncovered(u, v));
        }
        Ok(())
    }

    /// PACE `.td` text with 1-based ids.
    pub fn to_pace(&self, n: usize) -> String {
        let max_bag = self.bags.iter().map(VertexSet::len).max().unwrap_or(0);
        let mut out = format!("s td {} {} {}\n", self.bags.len(), max_bag, n);
        for (i, bag) in self.bags.iter().enumerate() {
            write!(out, "b {}", i + 1).unwrap();
            for v in bag.iter() {
                write!(out, " {}", v + 1).unwrap();
            }
            out.push('\n');
        }
        for &(a, b) in &self.edges {
            writeln!(out, "{} {}", a + 1, b + 1).unwrap();
        }
        out
    }

    /// Parses PACE `.td` text; returns the decomposition and the declared vertex count.
    pub fn from_pace(text: &str) -> Result<(TreeDecomposition, usize), TdError> {
        let mut header: Option<(usize, usize)> = None;
        let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |msg: &str| TdError::Parse {
                line,
                msg: msg.to_string(),
            };
            let words: Vec<&str> = raw.split_whitespace().collect();
            if words.is_empty() || words[0] == "c" {
                continue;
            }
            let num = |w: &str| w.parse::<usize>().map_err(|_| err(&format!("bad number `{w}`")));
            match words[0] {
                "s" => {
                    if header.is_some() {
                        return Err(err("duplicate header"));
                    }
                    if words.len() != 5 || words[1] != "td" {
                        return Err(err("expected `s td <bags> <width+1> <n>`"));
                    }
                    let b = num(words[2])?;
                    header = Some((b, num(words[4])?));
                    bags = vec![None; b];
                }
                "b" => {
                    let (b, n) = header.ok_or_else(|| err("bag before header"))?;
                    if words.len() < 2 {
                        return Err(err("bag line needs an id"));
                    }
                    let id = num(words[1])?;
                    if id == 0 || id > b {
                        return Err(err(&format!("bag id {id} out of range")));
                    }
                    let mut members = Vec::new();
                    for w in &words[2..] {
                        let v = num(w)?;
                        if v == 0 || v > n {
                            return Err(err(&format!("vertex {v} out of range")));
                        }
                        members.push(v - 1);
                    }
                    if bags[id - 1].replace(members).is_some() {
                        return Err(err(&format!("bag {id} given twice")));
                    }
                }
                _ => {
                    let (b, _) = header.ok_or_else(|| err("edge before header"))?;
                    if words.len() != 2 {
                        return Err(err("expected a tree edge `<bag> <bag>`"));
                    }
                    let (x, y) = (num(words[0])?, num(words[1])?);
                    if x == 0 || y == 0 || x > b || y > b {
                        return Err(err("tree edge names a missing bag"));
                    }
                    edges.push((x - 1, y - 1));
                }
            }
        }
        let (_, n) = header.ok_or(TdError::Parse {
            line: 0,
            msg: "missing `s td` header".into(),
        })?;
        let bags = bags
            .into_iter()
            .enumerate()
            .map(|(i, b)| {
                b.ok_or(TdError::Parse {
                    line: 0,
                    msg: format!("bag {} missing", i + 1),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((TreeDecomposition::new(bags, edges), n))
    }
}

/// Whether the tree nodes flagged in `keep` induce a connected (possibly empty) subgraph.
fn connected_subtree(adj: &[Vec<usize>], keep: &[bool]) -> bool {
    let Some(start) = keep.iter().position(|&k| k) else {
        return true;
    };
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut reached = 1;
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if keep[y] && !seen[y] {
                seen[y] = true;
                reached += 1;
                queue.push_back(y);
            }
        }
    }
    reached == keep.iter().filter(|&&k| k).count()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    #[default]
    MinDegree,
    MinFill,
    ExactSmall,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min-degree" => Ok(Strategy::MinDegree),
            "min-fill" => Ok(Strategy::MinFill),
            "exact-small" => Ok(Strategy::ExactSmall),
            _ => Err(format!(
                "unknown strategy `{s}` (expected min-degree, min-fill or exact-small)"
            )),
        }
    }
}

/// Builds a decomposition with the given strategy and checks it before returning.
pub fn decompose(g: &Graph, strategy: Strategy) -> Result<TreeDecomposition, TdError> {
    let order = match strategy {
        Strategy::MinDegree => greedy_order(g, false),
        Strategy::MinFill => greedy_order(g, true),
        Strategy::ExactSmall => exact_order(g)?,
    };
    let td = from_elimination_order(g, &order);
    td.validate(g)?;
    Ok(td)
}

/// Greedy elimination order; ties go to the smaller vertex id.
pub fn greedy_order(g: &Graph, min_fill: bool) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let score = |v: usize| -> usize {
            if !min_fill {
                return adj[v].len();
            }
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            let mut fill = 0;
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    if !adj[a].contains(&b) {
                        fill += 1;
                    }
                }
            }
            fill
        };
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (score(v), v))
            .expect("a vertex remains");
        eliminate(&mut adj, v);
        alive[v] = false;
        order.push(v);
    }
    order
}

fn eliminate(adj: &mut [BTreeSet<usize>], v: usize) {
    let nb: Vec<usize> = adj[v].iter().copied().collect();
    for (i, &a) in nb.iter().enumerate() {
        adj[a].remove(&v);
        for &b in &nb[i + 1..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    adj[v].clear();
}

/// Minimum-width elimination order by dynamic programming over vertex subsets.
///
/// `best[S]` is the least possible maximum, over the vertices eliminated so
/// far, of the number of not-yet-eliminated vertices reachable through `S`;
/// eliminating `v` after `S` costs the number of vertices outside `S + v`
/// reachable from `v` through `S`.
pub fn exact_order(g: &Graph) -> Result<Vec<usize>, TdError> {
    let n = g.n();
    if n > EXACT_SMALL_CAP {
        return Err(TdError::Cap {
            n,
            cap: EXACT_SMALL_CAP,
        });
    }
    let nb = g.neighbor_masks();
    let full = (1usize << n) - 1;
    let reach_count = |s: usize, v: usize| -> u32 {
        // vertices outside s + v reachable from v through s
        let mut seen = 1usize << v;
        let mut frontier = 1usize << v;
        let mut out = 0usize;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nbr = nb[u] as usize & !seen;
            seen |= nbr;
            out |= nbr & !s;
            frontier |= nbr & s;
        }
        out.count_ones()
    };
    let mut best = vec![u32::MAX; full + 1];
    let mut choice = vec![0u8; full + 1];
    best[0] = 0;
    for s in 1..=full {
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let cost = best[rest].max(reach_count(rest, v));
            if cost < best[s] {
                best[s] = cost;
                choice[s] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    Ok(order)
}

/// Decomposition with one bag per vertex: `v` plus its later neighbors in the
/// filled graph, attached to the bag of the earliest of those neighbors.
/// Bags of different components are chained together.
pub fn from_elimination_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::new(vec![vec![]], vec![]);
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = adj[v].iter().copied().collect();
        let mut bag = later.clone();
        bag.push(v);
        bags.push(bag);
        match later.iter().min_by_key(|&&u| pos[u]) {
            Some(&u) => edges.push((i, pos[u])),
            None => roots.push(i),
        }
        eliminate(&mut adj, v);
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition::new(bags, edges)
}
