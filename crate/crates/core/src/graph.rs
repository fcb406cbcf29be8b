//! Simple undirected graphs over dense `0..n` vertex ids.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pair {{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
}

/// Orders a pair as `(min, max)`.
#[inline]
pub fn norm_pair(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Canonically sorted set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// Membership vector of length `n`.
    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v] = true;
        }
        mask
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &b)| b.then_some(v))
                .collect(),
        )
    }

    pub fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&v) if v >= n => Err(GraphError::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Set of unordered vertex pairs, each stored as `(min, max)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(BTreeSet<(usize, usize)>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.contains(&norm_pair(u, v))
    }

    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        self.0.insert(norm_pair(u, v))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn extend_from(&mut self, other: &EdgeSet) {
        self.0.extend(other.iter());
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().map(|(u, v)| norm_pair(u, v)).collect())
    }
}

impl<const N: usize> From<[(usize, usize); N]> for EdgeSet {
    fn from(v: [(usize, usize); N]) -> Self {
        v.into_iter().collect()
    }
}

/// Simple undirected graph. Immutable once built; every transformation
/// returns a fresh graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from a list of pairs. Duplicate pairs collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("valid clique")
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    /// Index of edge `{u, v}` in canonical edge order.
    pub fn edge_index(&self) -> std::collections::HashMap<(usize, usize), usize> {
        self.edges().enumerate().map(|(i, e)| (e, i)).collect()
    }

    /// Neighborhood bitmasks; requires `n <= 64`.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask view needs n <= 64");
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |acc, &v| acc | (1 << v)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            let own = &self.adj[u];
            let mut k = 0;
            for v in 0..n {
                if v == u {
                    continue;
                }
                while k < own.len() && own[k] < v {
                    k += 1;
                }
                if k < own.len() && own[k] == v {
                    continue;
                }
                list.push(v);
            }
            m += list.len();
        }
        Graph { adj, m: m / 2 }
    }

    /// Subgraph induced by `vs`, relabeled by rank within `vs`.
    pub fn induced_subgraph(&self, vs: &VertexSet) -> Result<Graph, GraphError> {
        vs.check_range(self.n())?;
        let mut rank = vec![usize::MAX; self.n()];
        for (i, v) in vs.iter().enumerate() {
            rank[v] = i;
        }
        let adj: Vec<Vec<usize>> = vs
            .iter()
            .map(|v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (rank[w] != usize::MAX).then_some(rank[w]))
                    .collect()
            })
            .collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adj, m })
    }

    /// Removes the vertices of `vs` and relabels the rest by rank.
    pub fn delete_vertices(&self, vs: &VertexSet) -> Result<Graph, GraphError> {
        vs.check_range(self.n())?;
        let keep: VertexSet = (0..self.n()).filter(|&v| !vs.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Removes the pairs of `es`; each must be an edge.
    pub fn delete_edges(&self, es: &EdgeSet) -> Result<Graph, GraphError> {
        for (u, v) in es.iter() {
            if u >= self.n() || v >= self.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n: self.n(),
                });
            }
            if !self.has_edge(u, v) {
                return Err(GraphError::NotAnEdge(u, v));
            }
        }
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(u, list)| list.iter().copied().filter(|&v| !es.contains(u, v)).collect())
            .collect();
        Ok(Graph {
            adj,
            m: self.m - es.len(),
        })
    }

    /// True iff every vertex is reachable from vertex 0 (vacuous for `n <= 1`).
    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Whether the subgraph induced by `mask` is connected (vacuous for <= 1 member).
    pub fn is_connected_within(&self, mask: &[bool]) -> bool {
        let Some(start) = mask.iter().position(|&b| b) else {
            return true;
        };
        let total = mask.iter().filter(|&&b| b).count();
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut reached = 1;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if mask[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force isomorphism test by permutation search.
    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        fn search(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let i = map.len();
            if i == a.n() {
                return true;
            }
            for j in 0..b.n() {
                if used[j] {
                    continue;
                }
                if (0..i).all(|k| a.has_edge(k, i) == b.has_edge(map[k], j)) {
                    map.push(j);
                    used[j] = true;
                    if search(a, b, map, used) {
                        return true;
                    }
                    map.pop();
                    used[j] = false;
                }
            }
            false
        }
        a.n() == b.n() && a.m() == b.m() && search(a, b, &mut Vec::new(), &mut vec![false; b.n()])
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        assert_eq!(Graph::empty(1).complement(), Graph::empty(1));
        let c5 = Graph::cycle(5);
        let co = c5.complement();
        assert!(isomorphic(&c5, &co));
        // 0-2-4-1-3 is the cycle in the complement
        for (u, v) in [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)] {
            assert!(co.has_edge(u, v));
        }
    }

    #[test]
    fn induced_subgraph_examples() {
        let p4 = Graph::path(4);
        assert_eq!(p4.induced_subgraph(&[0, 1, 2].into()).unwrap(), Graph::path(3));
        assert_eq!(p4.induced_subgraph(&VertexSet::new()).unwrap(), Graph::empty(0));
        let c5 = Graph::cycle(5);
        assert_eq!(c5.induced_subgraph(&[0, 1, 2, 3].into()).unwrap(), Graph::path(4));
        assert_eq!(
            p4.induced_subgraph(&[0, 7].into()),
            Err(GraphError::VertexOutOfRange { vertex: 7, n: 4 })
        );
    }

    #[test]
    fn delete_edges_examples() {
        let k3 = Graph::complete(3);
        let p3 = k3.delete_edges(&[(0, 2)].into()).unwrap();
        assert_eq!(p3, Graph::path(3));
        assert_eq!(k3.delete_edges(&EdgeSet::new()).unwrap(), k3);
        let two_k2 = Graph::cycle(4).delete_edges(&[(0, 1), (2, 3)].into()).unwrap();
        assert_eq!(two_k2, Graph::from_edges(4, [(1, 2), (0, 3)]).unwrap());
        assert_eq!(
            Graph::path(3).delete_edges(&[(0, 2)].into()),
            Err(GraphError::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn construction_rejects_loops_and_collapses_duplicates() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn vertex_set_is_canonical() {
        let s: VertexSet = vec![3, 1, 3, 2].into();
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert_eq!(s.to_string(), "{1,2,3}");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (0usize..9).prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                let len = pairs.len();
                proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
                    Graph::from_edges(
                        n,
                        pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&e, _)| e),
                    )
                    .unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn adjacency_symmetric_and_counted(g in arb_graph()) {
                let mut half = 0;
                for u in 0..g.n() {
                    for &v in g.neighbors(u) {
                        prop_assert!(g.has_edge(v, u));
                        prop_assert_ne!(u, v);
                    }
                    half += g.degree(u);
                }
                prop_assert_eq!(half, 2 * g.m());
            }

            #[test]
            fn complement_is_involution(g in arb_graph()) {
                prop_assert_eq!(g.complement().complement(), g);
            }

            #[test]
            fn full_induced_subgraph_is_identity(g in arb_graph()) {
                let all: VertexSet = (0..g.n()).collect();
                prop_assert_eq!(g.induced_subgraph(&all).unwrap(), g);
            }

            #[test]
            fn delete_edges_counts(g in arb_graph(), pick in any::<u64>()) {
                let es: EdgeSet = g.edges().enumerate()
                    .filter(|(i, _)| pick >> (i % 64) & 1 == 1)
                    .map(|(_, e)| e).collect();
                let h = g.delete_edges(&es).unwrap();
                prop_assert_eq!(h.n(), g.n());
                prop_assert_eq!(h.m() + es.len(), g.m());
            }
        }
    }
}
