//! Definition-level oracles shared by the integration tests. Each one is
//! deliberately naive and shares no code with the solver it checks.
#![allow(dead_code)]

use std::collections::HashSet;

use graphlogic::logic::builtins::induces_cycle;
use graphlogic::Graph;

pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..k {
            if !cur.contains(&x) {
                cur.push(x);
                go(k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::new(), &mut out);
    out
}

/// Whether `vs` (in any order) induces a copy of `pattern`.
pub fn induces_copy(g: &Graph, vs: &[usize], pattern: &Graph) -> bool {
    let k = vs.len();
    permutations(k).iter().any(|p| {
        (0..k).all(|i| (0..k).all(|j| i == j || pattern.has_edge(i, j) == g.has_edge(vs[p[i]], vs[p[j]])))
    })
}

pub fn has_induced(g: &Graph, pattern: &Graph) -> bool {
    subsets_of_size(g.n(), pattern.n())
        .iter()
        .any(|vs| induces_copy(g, vs, pattern))
}

pub fn p4() -> Graph {
    Graph::path(4)
}

pub fn two_k2() -> Graph {
    Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()
}

/// Cographs from their recursive definition: a single vertex, and closure
/// under disjoint union and complement.
pub fn cograph_by_definition(g: &Graph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    let comps = g.components();
    let h = if comps.len() > 1 { g.clone() } else { g.complement() };
    let comps = h.components();
    if comps.len() == 1 {
        return false;
    }
    comps
        .iter()
        .all(|c| cograph_by_definition(&g.induced_subgraph(&c.clone().into()).unwrap()))
}

/// Split graphs: some vertex bipartition into a clique and an independent set.
pub fn split_by_partition(g: &Graph) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|mask| {
        let inside = |v: usize| mask >> v & 1 == 1;
        (0..n).all(|u| {
            (u + 1..n).all(|v| {
                if inside(u) && inside(v) {
                    g.has_edge(u, v)
                } else if !inside(u) && !inside(v) {
                    !g.has_edge(u, v)
                } else {
                    true
                }
            })
        })
    })
}

/// Threshold graphs: repeatedly remove an isolated or dominating vertex.
pub fn threshold_by_peeling(g: &Graph) -> bool {
    let mut alive: Vec<usize> = (0..g.n()).collect();
    while !alive.is_empty() {
        let deg = |v: usize| alive.iter().filter(|&&w| g.has_edge(v, w)).count();
        let Some(pos) = alive
            .iter()
            .position(|&v| deg(v) == 0 || deg(v) == alive.len() - 1)
        else {
            return false;
        };
        alive.remove(pos);
    }
    true
}

/// Comparability graphs: orient edges one by one, backtracking as soon as
/// two arcs `a->b`, `b->c` lack the arc `a->c`.
pub fn comparability_by_search(g: &Graph) -> bool {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    // dir[u][v]: Some(true) when u->v is chosen
    let mut dir = vec![vec![None::<bool>; n]; n];
    fn set(dir: &mut [Vec<Option<bool>>], u: usize, v: usize, val: Option<bool>) {
        dir[u][v] = val;
        dir[v][u] = val.map(|b| !b);
    }
    fn arc(dir: &[Vec<Option<bool>>], u: usize, v: usize) -> bool {
        dir[u][v] == Some(true)
    }
    fn consistent(g: &Graph, dir: &[Vec<Option<bool>>], a: usize, b: usize) -> bool {
        // the new arc a->b as first or second arc of a path of length two
        for c in 0..g.n() {
            if arc(dir, b, c) && c != a && (!g.has_edge(a, c) || arc(dir, c, a)) {
                return false;
            }
            if arc(dir, c, a) && c != b && (!g.has_edge(c, b) || arc(dir, b, c)) {
                return false;
            }
        }
        true
    }
    fn go(g: &Graph, edges: &[(usize, usize)], i: usize, dir: &mut Vec<Vec<Option<bool>>>) -> bool {
        let Some(&(u, v)) = edges.get(i) else { return true };
        for (a, b) in [(u, v), (v, u)] {
            set(dir, a, b, Some(true));
            if consistent(g, dir, a, b) && go(g, edges, i + 1, dir) {
                return true;
            }
        }
        set(dir, u, v, None);
        false
    }
    go(g, &edges, 0, &mut dir)
}

/// Interval graphs: sweep a line over an interval model, opening and
/// closing intervals one at a time. Opening `v` makes it meet every open
/// interval and requires it to miss every closed one; closing `v` requires
/// all its neighbors to have been opened.
pub fn interval_by_model(g: &Graph) -> bool {
    let n = g.n();
    let full = (1u32 << n) - 1;
    let nb: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |a, &w| a | 1 << w))
        .collect();
    let mut seen = HashSet::new();
    let mut stack = vec![(0u32, 0u32)];
    while let Some((opened, closed)) = stack.pop() {
        if opened == full && closed == full {
            return true;
        }
        if !seen.insert((opened, closed)) {
            continue;
        }
        let active = opened & !closed;
        for v in 0..n {
            let bit = 1 << v;
            if opened & bit == 0 {
                if active & !nb[v] == 0 && closed & nb[v] == 0 {
                    stack.push((opened | bit, closed));
                }
            } else if closed & bit == 0 && nb[v] & !opened == 0 {
                stack.push((opened, closed | bit));
            }
        }
    }
    false
}

/// Chordal graphs: no vertex subset of size >= 4 induces a cycle.
pub fn chordal_by_subsets(g: &Graph) -> bool {
    let n = g.n();
    (0u32..1 << n).all(|mask| {
        mask.count_ones() < 4 || !induces_cycle(g, &(0..n).map(|v| mask >> v & 1 == 1).collect::<Vec<_>>())
    })
}

pub fn bipartite_by_search(g: &Graph) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|mask| g.edges().all(|(u, v)| (mask >> u & 1) != (mask >> v & 1)))
}

pub fn chordal_bipartite_by_subsets(g: &Graph) -> bool {
    let n = g.n();
    bipartite_by_search(g)
        && (0u32..1 << n).all(|mask| {
            mask.count_ones() < 6
                || !induces_cycle(g, &(0..n).map(|v| mask >> v & 1 == 1).collect::<Vec<_>>())
        })
}

/// Smallest number of colors in a proper coloring, by trying every assignment.
pub fn chromatic_by_enumeration(g: &Graph) -> usize {
    let n = g.n();
    for k in 1..=n.max(1) {
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = vec![0usize; n];
            let mut x = code;
            for slot in c.iter_mut() {
                *slot = (x % k as u64) as usize;
                x /= k as u64;
            }
            if g.edges().all(|(u, v)| c[u] != c[v]) {
                return k;
            }
        }
    }
    unreachable!()
}

/// Class membership by the oracles above.
pub fn in_class_by_oracle(g: &Graph, class: graphlogic::recognition::Class) -> bool {
    use graphlogic::recognition::Class;
    match class {
        Class::Cograph => cograph_by_definition(g),
        Class::Split => split_by_partition(g),
        Class::Threshold => threshold_by_peeling(g),
        Class::Comparability => comparability_by_search(g),
        Class::Interval => interval_by_model(g),
        Class::Permutation => comparability_by_search(g) && comparability_by_search(&g.complement()),
        Class::Chordal => chordal_by_subsets(g),
        Class::ChordalBipartite => chordal_bipartite_by_subsets(g),
    }
}

/// Smallest number of vertices whose removal lands in the class.
pub fn node_deletion_by_subsets(g: &Graph, class: graphlogic::recognition::Class) -> usize {
    for k in 0..=g.n() {
        for s in subsets_of_size(g.n(), k) {
            let h = g.delete_vertices(&graphlogic::VertexSet::from(s)).unwrap();
            if in_class_by_oracle(&h, class) {
                return k;
            }
        }
    }
    unreachable!("the empty graph is in every class")
}

/// Smallest number of edges whose removal lands in the class.
pub fn edge_deletion_by_subsets(g: &Graph, class: graphlogic::recognition::Class) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for k in 0..=edges.len() {
        for s in subsets_of_size(edges.len(), k) {
            let es: graphlogic::EdgeSet = s.iter().map(|&i| edges[i]).collect();
            if in_class_by_oracle(&g.delete_edges(&es).unwrap(), class) {
                return k;
            }
        }
    }
    unreachable!("the edgeless graph is in every edge-deletion class")
}

/// Whether the vertices in `s` induce a connected subgraph (empty counts).
pub fn induces_connected(g: &Graph, s: &[usize]) -> bool {
    let Some(&start) = s.first() else { return true };
    let mut seen = vec![start];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        i += 1;
        for &w in g.neighbors(u) {
            if s.contains(&w) && !seen.contains(&w) {
                seen.push(w);
            }
        }
    }
    seen.len() == s.len()
}

/// Minimum dominating-set sizes by subset enumeration: (dom, total, connected).
/// `None` where no set qualifies.
pub fn domination_numbers(g: &Graph) -> [Option<usize>; 3] {
    let n = g.n();
    let mut out = [None; 3];
    for k in 0..=n {
        for s in subsets_of_size(n, k) {
            let closed = (0..n).all(|v| s.contains(&v) || g.neighbors(v).iter().any(|w| s.contains(w)));
            let open = (0..n).all(|v| g.neighbors(v).iter().any(|w| s.contains(w)));
            let checks = [closed, open, closed && induces_connected(g, &s)];
            for (slot, ok) in out.iter_mut().zip(checks) {
                if ok && slot.is_none() {
                    *slot = Some(k);
                }
            }
        }
    }
    out
}
