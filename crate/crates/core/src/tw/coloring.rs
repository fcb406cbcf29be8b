//! Proper vertex coloring by dynamic programming over a nice decomposition;
//! a state is the tuple of colors of the bag vertices.

use std::collections::BTreeMap;

use super::nice::{NiceDecomposition, NiceKind};
use super::problems::{certify_coloring, ColoringAssignment, ColoringVariant, SolveError};
use crate::graph::Graph;

/// Upper limit on `k^(width + 1)`, the number of states per node.
pub const COLORING_STATE_CAP: u64 = 1 << 22;

#[derive(Clone, Debug)]
enum Back {
    Leaf,
    One(Vec<u8>),
    Two(Vec<u8>),
}

/// A proper `k`-coloring, or `None` when `g` is not `k`-colorable.
pub fn coloring_dp_core(
    g: &Graph,
    nd: &NiceDecomposition,
    k: usize,
) -> Result<Option<Vec<usize>>, SolveError> {
    if k == 0 {
        return Ok((g.n() == 0).then(Vec::new));
    }
    let states = (k as u64).checked_pow(nd.width() as u32 + 1).unwrap_or(u64::MAX);
    if states > COLORING_STATE_CAP || k > 255 {
        return Err(SolveError::Cap {
            what: "states per bag (k^(width+1))",
            size: states.min(usize::MAX as u64) as usize,
            cap: COLORING_STATE_CAP as usize,
        });
    }
    let mut tables: Vec<BTreeMap<Vec<u8>, Back>> = Vec::with_capacity(nd.nodes.len());
    for node in &nd.nodes {
        let mut table = BTreeMap::new();
        match node.kind {
            NiceKind::Leaf => {
                table.insert(Vec::new(), Back::Leaf);
            }
            NiceKind::Introduce(v) => {
                let p = node.bag.binary_search(&v).expect("introduced vertex in bag");
                let nbr: Vec<usize> = (0..node.bag.len())
                    .filter(|&q| q != p && g.has_edge(v, node.bag[q]))
                    .collect();
                for cs in tables[node.children[0]].keys() {
                    for c in 0..k as u8 {
                        let mut s = cs.clone();
                        s.insert(p, c);
                        if nbr.iter().all(|&q| s[q] != c) {
                            table.entry(s).or_insert_with(|| Back::One(cs.clone()));
                        }
                    }
                }
            }
            NiceKind::Forget(v) => {
                let p = nd.nodes[node.children[0]]
                    .bag
                    .binary_search(&v)
                    .expect("forgotten vertex in child bag");
                for cs in tables[node.children[0]].keys() {
                    let mut s = cs.clone();
                    s.remove(p);
                    table.entry(s).or_insert_with(|| Back::One(cs.clone()));
                }
            }
            NiceKind::Join => {
                let other = &tables[node.children[1]];
                for s in tables[node.children[0]].keys() {
                    if other.contains_key(s) {
                        table.insert(s.clone(), Back::Two(s.clone()));
                    }
                }
            }
        }
        tables.push(table);
    }
    if tables[nd.root].is_empty() {
        return Ok(None);
    }
    let mut colors = vec![usize::MAX; g.n()];
    let mut stack = vec![(nd.root, Vec::new())];
    while let Some((x, s)) = stack.pop() {
        let node = &nd.nodes[x];
        if let NiceKind::Introduce(v) = node.kind {
            let p = node.bag.binary_search(&v).expect("introduced vertex in bag");
            colors[v] = s[p] as usize;
        }
        match &tables[x][&s] {
            Back::Leaf => {}
            Back::One(c) => stack.push((node.children[0], c.clone())),
            Back::Two(c) => {
                stack.push((node.children[0], c.clone()));
                stack.push((node.children[1], c.clone()));
            }
        }
    }
    Ok(Some(colors))
}

/// Validated and certified `k`-coloring; `Ok(None)` means infeasible.
pub fn solve_coloring_dp(
    g: &Graph,
    nd: &NiceDecomposition,
    k: usize,
) -> Result<Option<ColoringAssignment>, SolveError> {
    nd.validate(g)?;
    match coloring_dp_core(g, nd, k)? {
        Some(colors) => certify_coloring(g, ColoringVariant::Proper, k, colors).map(Some),
        None => Ok(None),
    }
}

/// Chromatic number mode: the first `k = 1, 2, ...` that admits a coloring.
pub fn min_coloring_dp(g: &Graph, nd: &NiceDecomposition) -> Result<ColoringAssignment, SolveError> {
    nd.validate(g)?;
    for k in 1.. {
        if let Some(colors) = coloring_dp_core(g, nd, k)? {
            return certify_coloring(g, ColoringVariant::Proper, k, colors);
        }
    }
    unreachable!("n colors always suffice")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tw::decomposition::{decompose, Strategy};
    use crate::tw::nice::make_nice;

    fn nice(g: &Graph) -> NiceDecomposition {
        make_nice(&decompose(g, Strategy::MinDegree).unwrap()).unwrap()
    }

    #[test]
    fn cycles_and_trees() {
        let c5 = Graph::cycle(5);
        let nd = nice(&c5);
        assert_eq!(solve_coloring_dp(&c5, &nd, 2).unwrap(), None);
        assert!(solve_coloring_dp(&c5, &nd, 3).unwrap().unwrap().certified);
        let p6 = Graph::path(6);
        assert!(solve_coloring_dp(&p6, &nice(&p6), 2).unwrap().is_some());
        assert_eq!(min_coloring_dp(&c5, &nd).unwrap().k, 3);
        let k4 = Graph::complete(4);
        assert_eq!(min_coloring_dp(&k4, &nice(&k4)).unwrap().k, 4);
        let e = Graph::empty(0);
        assert_eq!(min_coloring_dp(&e, &nice(&e)).unwrap().k, 1);
    }
}
