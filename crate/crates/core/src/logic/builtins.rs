//! Graph-algorithmic predicates exposed as atoms of the formula language.
//!
//! These are deliberately written from definitions (explicit path search,
//! exhaustive orientation search) so they stay independent of the
//! recognition and solver code they are used to check.

use crate::graph::Graph;

/// Whether the subgraph induced by `mask` is connected.
pub fn induces_connected(g: &Graph, mask: &[bool]) -> bool {
    g.is_connected_within(mask)
}

/// Whether the subgraph induced by `mask` is a single cycle (length >= 3).
pub fn induces_cycle(g: &Graph, mask: &[bool]) -> bool {
    let members = mask.iter().filter(|&&b| b).count();
    if members < 3 {
        return false;
    }
    let all_degree_two = (0..g.n())
        .filter(|&v| mask[v])
        .all(|v| g.neighbors(v).iter().filter(|&&w| mask[w]).count() == 2);
    all_degree_two && g.is_connected_within(mask)
}

/// Whether every vertex pair is joined by a vertex-simple path whose edges
/// carry pairwise distinct colors. `edge_colors` is indexed by canonical edge
/// order; uncolored edges cannot be used.
pub fn rainbow_connected(g: &Graph, edge_colors: &[Option<usize>]) -> bool {
    let n = g.n();
    let index = g.edge_index();
    let mut color_of = vec![Vec::new(); n];
    for u in 0..n {
        color_of[u] = g
            .neighbors(u)
            .iter()
            .map(|&w| edge_colors[index[&crate::graph::norm_pair(u, w)]])
            .collect();
    }
    for s in 0..n {
        let mut reached = vec![false; n];
        reached[s] = true;
        let mut on_path = vec![false; n];
        on_path[s] = true;
        let mut used = Vec::new();
        rainbow_dfs(g, &color_of, s, &mut on_path, &mut used, &mut reached);
        if reached.iter().any(|&r| !r) {
            return false;
        }
    }
    true
}

fn rainbow_dfs(
    g: &Graph,
    color_of: &[Vec<Option<usize>>],
    u: usize,
    on_path: &mut Vec<bool>,
    used: &mut Vec<usize>,
    reached: &mut Vec<bool>,
) {
    for (i, &w) in g.neighbors(u).iter().enumerate() {
        let Some(c) = color_of[u][i] else { continue };
        if on_path[w] || used.contains(&c) {
            continue;
        }
        reached[w] = true;
        on_path[w] = true;
        used.push(c);
        rainbow_dfs(g, color_of, w, on_path, used, reached);
        used.pop();
        on_path[w] = false;
    }
}

/// Exhaustive backtracking search for a transitive orientation.
///
/// Edges are oriented one at a time in canonical order; a partial orientation
/// is rejected as soon as two oriented arcs `x->y`, `y->z` exist with `x->z`
/// impossible (non-edge or oriented `z->x`).
pub fn has_transitive_orientation(g: &Graph) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return true;
    }
    let n = g.n();
    // dir[u * n + v] = 1 if u->v, 0 if unset
    let mut arc = vec![false; n * n];
    // the reverse of a transitive orientation is transitive
    orient(g, &edges, 1, &mut arc, n, Some(true))
}

fn orient(
    g: &Graph,
    edges: &[(usize, usize)],
    next: usize,
    arc: &mut Vec<bool>,
    n: usize,
    first: Option<bool>,
) -> bool {
    if let Some(forward) = first {
        let (a, b) = edges[0];
        let (x, y) = if forward { (a, b) } else { (b, a) };
        arc[x * n + y] = true;
        let ok = consistent(g, arc, n, x, y) && orient(g, edges, next, arc, n, None);
        arc[x * n + y] = false;
        return ok;
    }
    if next == edges.len() {
        return true;
    }
    let (a, b) = edges[next];
    for (x, y) in [(a, b), (b, a)] {
        arc[x * n + y] = true;
        if consistent(g, arc, n, x, y) && orient(g, edges, next + 1, arc, n, None) {
            arc[x * n + y] = false;
            return true;
        }
        arc[x * n + y] = false;
    }
    false
}

/// Checks every 2-chain through the new arc `x->y`.
fn consistent(g: &Graph, arc: &[bool], n: usize, x: usize, y: usize) -> bool {
    // x->y->z requires x->z
    for &z in g.neighbors(y) {
        if z != x && arc[y * n + z] && (!g.has_edge(x, z) || arc[z * n + x]) {
            return false;
        }
    }
    // w->x->y requires w->y
    for &w in g.neighbors(x) {
        if w != y && arc[w * n + x] && (!g.has_edge(w, y) || arc[y * n + w]) {
            return false;
        }
    }
    true
}
