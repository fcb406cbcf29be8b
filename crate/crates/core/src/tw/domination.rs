//! Minimum dominating, total dominating and connected dominating sets by
//! dynamic programming over a nice tree decomposition.
//!
//! A state records, per bag vertex, whether it is in the solution and whether
//! it already has a solution neighbor among the vertices processed so far
//! (for plain domination a solution vertex counts as dominated). The
//! connected variant also keeps the partition of the bag's solution vertices
//! into components of the partial solution, and a flag set once some
//! component has been completed below the bag.

use std::collections::{BTreeMap, HashMap};

use super::nice::{NiceDecomposition, NiceKind};
use super::problems::{certify_domination, DominationResult, DominationVariant, SolveError};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct State {
    inn: u64,
    dom: u64,
    /// Component label per bag position (0 outside the solution).
    comp: Vec<u8>,
    closed: bool,
}

#[derive(Clone, Debug)]
enum Back {
    Leaf,
    One(State),
    Two(State, State),
}

type Table = BTreeMap<State, (u32, Back)>;

fn offer(table: &mut Table, s: State, cost: u32, back: Back) {
    match table.get(&s) {
        Some(&(c, _)) if c <= cost => {}
        _ => {
            table.insert(s, (cost, back));
        }
    }
}

fn insert_bit(mask: u64, p: usize, bit: bool) -> u64 {
    let low = mask & ((1u64 << p) - 1);
    let high = (mask >> p) << (p + 1);
    low | high | ((bit as u64) << p)
}

fn remove_bit(mask: u64, p: usize) -> u64 {
    let low = mask & ((1u64 << p) - 1);
    let high = (mask >> (p + 1)) << p;
    low | high
}

/// Relabels components by first occurrence.
fn normalize(comp: &mut [u8]) {
    let mut map = [0u8; 256];
    let mut next = 1u8;
    for x in comp.iter_mut() {
        if *x != 0 {
            if map[*x as usize] == 0 {
                map[*x as usize] = next;
                next += 1;
            }
            *x = map[*x as usize];
        }
    }
}

/// Merges labels `a` and `b` into `a`.
fn relabel(comp: &mut [u8], from: u8, to: u8) {
    for x in comp.iter_mut() {
        if *x == from {
            *x = to;
        }
    }
}

/// Minimum solution, or `None` when the variant is infeasible on `g`.
///
/// This is the bare table computation: it neither validates `nd` against `g`
/// nor certifies the answer.
pub fn domination_dp_core(
    g: &Graph,
    nd: &NiceDecomposition,
    variant: DominationVariant,
) -> Result<Option<VertexSet>, SolveError> {
    if !variant.has_dp() {
        return Err(SolveError::Unsupported(format!(
            "no decomposition-based algorithm for {variant}"
        )));
    }
    if nd.width() >= 63 {
        return Err(SolveError::Cap {
            what: "decomposition width",
            size: nd.width(),
            cap: 62,
        });
    }
    let total = variant == DominationVariant::TotalDom;
    let connected = variant == DominationVariant::ConnectedDom;
    let mut tables: Vec<Table> = Vec::with_capacity(nd.nodes.len());
    for node in &nd.nodes {
        let mut table = Table::new();
        match node.kind {
            NiceKind::Leaf => {
                let s = State {
                    inn: 0,
                    dom: 0,
                    comp: Vec::new(),
                    closed: false,
                };
                table.insert(s, (0, Back::Leaf));
            }
            NiceKind::Introduce(v) => {
                let p = node.bag.binary_search(&v).expect("introduced vertex in bag");
                // bag positions (in the new bag) of v's neighbors
                let nbr: Vec<usize> = (0..node.bag.len())
                    .filter(|&q| q != p && g.has_edge(v, node.bag[q]))
                    .collect();
                for (cs, &(cost, _)) in &tables[node.children[0]] {
                    let inn = insert_bit(cs.inn, p, false);
                    let dom = insert_bit(cs.dom, p, false);
                    let mut comp = cs.comp.clone();
                    comp.insert(p, 0);
                    let sees_solution = nbr.iter().any(|&q| inn >> q & 1 == 1);
                    // v outside the solution
                    offer(
                        &mut table,
                        State {
                            inn,
                            dom: dom | ((sees_solution as u64) << p),
                            comp: comp.clone(),
                            closed: cs.closed,
                        },
                        cost,
                        Back::One(cs.clone()),
                    );
                    // v in the solution
                    if connected && cs.closed {
                        continue;
                    }
                    let mut dom = dom;
                    for &q in &nbr {
                        dom |= 1 << q;
                    }
                    if !total || sees_solution {
                        dom |= 1 << p;
                    }
                    if connected {
                        let fresh = 255u8;
                        comp[p] = fresh;
                        for &q in &nbr {
                            let l = comp[q];
                            if l != 0 && l != fresh {
                                relabel(&mut comp, l, fresh);
                            }
                        }
                        normalize(&mut comp);
                    }
                    offer(
                        &mut table,
                        State {
                            inn: inn | (1 << p),
                            dom,
                            comp,
                            closed: cs.closed,
                        },
                        cost + 1,
                        Back::One(cs.clone()),
                    );
                }
            }
            NiceKind::Forget(v) => {
                let child = &nd.nodes[node.children[0]];
                let p = child.bag.binary_search(&v).expect("forgotten vertex in child bag");
                for (cs, &(cost, _)) in &tables[node.children[0]] {
                    if cs.dom >> p & 1 == 0 {
                        continue;
                    }
                    let mut closed = cs.closed;
                    if connected && cs.inn >> p & 1 == 1 {
                        let label = cs.comp[p];
                        let alone = cs.comp.iter().filter(|&&l| l == label).count() == 1;
                        if alone {
                            if cs.inn.count_ones() > 1 {
                                continue;
                            }
                            closed = true;
                        }
                    }
                    let mut comp = cs.comp.clone();
                    comp.remove(p);
                    normalize(&mut comp);
                    offer(
                        &mut table,
                        State {
                            inn: remove_bit(cs.inn, p),
                            dom: remove_bit(cs.dom, p),
                            comp,
                            closed,
                        },
                        cost,
                        Back::One(cs.clone()),
                    );
                }
            }
            NiceKind::Join => {
                let (a, b) = (node.children[0], node.children[1]);
                let mut by_inn: HashMap<u64, Vec<(&State, u32)>> = HashMap::new();
                for (s, &(c, _)) in &tables[b] {
                    by_inn.entry(s.inn).or_default().push((s, c));
                }
                for (s1, &(c1, _)) in &tables[a] {
                    let Some(partners) = by_inn.get(&s1.inn) else { continue };
                    for &(s2, c2) in partners {
                        if s1.closed && s2.closed {
                            continue;
                        }
                        let mut comp = s1.comp.clone();
                        if connected {
                            for q in 0..comp.len() {
                                for r in q + 1..comp.len() {
                                    if s2.comp[q] != 0 && s2.comp[q] == s2.comp[r] && comp[q] != comp[r] {
                                        let (from, to) = (comp[r], comp[q]);
                                        relabel(&mut comp, from, to);
                                    }
                                }
                            }
                            normalize(&mut comp);
                        }
                        offer(
                            &mut table,
                            State {
                                inn: s1.inn,
                                dom: s1.dom | s2.dom,
                                comp,
                                closed: s1.closed || s2.closed,
                            },
                            c1 + c2 - s1.inn.count_ones(),
                            Back::Two(s1.clone(), s2.clone()),
                        );
                    }
                }
            }
        }
        tables.push(table);
    }
    let root = &tables[nd.root];
    let Some((best, _)) = root.iter().min_by_key(|(_, &(c, _))| c) else {
        return Ok(None);
    };
    let mut set = VertexSet::new();
    let mut stack = vec![(nd.root, best.clone())];
    while let Some((x, s)) = stack.pop() {
        let node = &nd.nodes[x];
        if let NiceKind::Introduce(v) = node.kind {
            let p = node.bag.binary_search(&v).expect("introduced vertex in bag");
            if s.inn >> p & 1 == 1 {
                set.insert(v);
            }
        }
        match &tables[x][&s].1 {
            Back::Leaf => {}
            Back::One(c) => stack.push((node.children[0], c.clone())),
            Back::Two(c1, c2) => {
                stack.push((node.children[0], c1.clone()));
                stack.push((node.children[1], c2.clone()));
            }
        }
    }
    Ok(Some(set))
}

/// Validates `nd` against `g`, runs the DP, and certifies the result with
/// the variant's catalog formula. `Ok(None)` means infeasible.
pub fn solve_domination_dp(
    g: &Graph,
    nd: &NiceDecomposition,
    variant: DominationVariant,
) -> Result<Option<DominationResult>, SolveError> {
    nd.validate(g)?;
    match domination_dp_core(g, nd, variant)? {
        Some(set) => certify_domination(g, variant, set).map(Some),
        None => Ok(None),
    }
}
