mod common;

use std::collections::BTreeMap;

use graphlogic::generate::{gnp, gnp_with, rng};
use graphlogic::logic::ast::{Node, Quantifier};
use graphlogic::logic::builtins::rainbow_connected;
use graphlogic::logic::search::{min_coloring_by_formula, SearchCaps};
use graphlogic::logic::{
    catalog_formula, evaluate, formula_catalog, min_satisfying_set, parse_formula, Formula, SetSolution, Sort,
    Structure,
};
use graphlogic::{EdgeSet, Graph, VertexSet};
use proptest::prelude::*;
use rand::Rng;

/// Random formula over the vertex variables in scope and the free set `S`.
fn random_node(r: &mut impl Rng, scope: &mut Vec<String>, depth: usize) -> Node {
    let pick = |r: &mut dyn rand::RngCore, scope: &[String]| scope[r.gen_range(0..scope.len())].clone();
    let leaf = depth == 0 || r.gen_bool(0.25);
    if leaf && !scope.is_empty() {
        return match r.gen_range(0..4) {
            0 => Node::Adj(pick(r, scope), pick(r, scope)),
            1 => Node::Eq(pick(r, scope), pick(r, scope)),
            2 => Node::Member {
                set: "S".into(),
                args: vec![pick(r, scope)],
            },
            _ => Node::Member {
                set: "S".into(),
                args: vec![pick(r, scope), pick(r, scope)].into_iter().take(1).collect(),
            },
        };
    }
    if scope.is_empty() || r.gen_bool(0.35) {
        let var = format!("v{}", scope.len());
        scope.push(var.clone());
        let body = random_node(r, scope, depth.saturating_sub(1));
        scope.pop();
        let q = if r.gen_bool(0.5) { Quantifier::Forall } else { Quantifier::Exists };
        return Node::Quant {
            q,
            var,
            sort: Sort::Vertex,
            body: Box::new(body),
        };
    }
    let a = random_node(r, scope, depth - 1);
    let b = random_node(r, scope, depth - 1);
    match r.gen_range(0..5) {
        0 => Node::and(a, b),
        1 => Node::or(a, b),
        2 => Node::implies(a, b),
        3 => Node::iff(a, b),
        _ => Node::not(a),
    }
}

fn sentence(root: Node) -> Formula {
    Formula {
        root,
        free: BTreeMap::from([("S".to_string(), Sort::VertexSet)]),
        declared: vec![],
    }
}

#[test]
fn de_morgan_on_random_formulas() {
    let mut r = rng(7);
    for i in 0..200 {
        let a = random_node(&mut r, &mut vec![], 3);
        let b = random_node(&mut r, &mut vec![], 3);
        let g = gnp_with(r.gen_range(1..=5), 0.5, &mut r);
        let s: VertexSet = (0..g.n()).filter(|_| r.gen_bool(0.5)).collect();
        let m = Structure::new(&g).with_vertex_set("S", s);
        let lhs = sentence(Node::not(Node::and(a.clone(), b.clone())));
        let rhs = sentence(Node::or(Node::not(a.clone()), Node::not(b.clone())));
        assert_eq!(evaluate(&lhs, &m).unwrap(), evaluate(&rhs, &m).unwrap(), "case {i}: {lhs}");
        // the same pair survives a round trip through concrete syntax
        let reparsed = parse_formula(&lhs.unparse()).unwrap();
        assert_eq!(evaluate(&reparsed, &m).unwrap(), evaluate(&lhs, &m).unwrap());
    }
}

#[test]
fn catalog_set_formulas_hold_at_their_minimum() {
    let cat = formula_catalog();
    let mut r = rng(8);
    for _ in 0..40 {
        let g = gnp_with(r.gen_range(0..=8), r.gen_range(0.2..0.7), &mut r);
        for (name, f) in &cat {
            let mut free = f.free.values();
            let (Some(&sort), None) = (free.next(), free.next()) else { continue };
            if !matches!(sort, Sort::VertexSet | Sort::EdgeSet) || g.m() > 16 && sort == Sort::EdgeSet {
                continue;
            }
            let caps = SearchCaps::default();
            let Some(sol) = min_satisfying_set(f, &g, caps).unwrap() else { continue };
            let set_name = f.free.keys().next().unwrap();
            let m = match sol {
                SetSolution::Vertices(s) => Structure::new(&g).with_vertex_set(set_name, s),
                SetSolution::Edges(s) => Structure::new(&g).with_edge_set(set_name, s),
            };
            assert!(evaluate(f, &m).unwrap(), "{name}");
        }
    }
}

#[test]
fn connected_dom_is_dom_and_connectedness() {
    let cd = catalog_formula("connected_dom").unwrap();
    let dom = catalog_formula("dom").unwrap();
    let conn = catalog_formula("connectedness").unwrap();
    let mut r = rng(9);
    for _ in 0..30 {
        let g = gnp_with(r.gen_range(0..=6), 0.5, &mut r);
        for mask in 0u32..1 << g.n() {
            let s: VertexSet = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
            let a = evaluate(&cd, &Structure::new(&g).with_vertex_set("S", s.clone())).unwrap();
            let b = evaluate(&dom, &Structure::new(&g).with_vertex_set("S", s.clone())).unwrap();
            let c = evaluate(&conn, &Structure::new(&g).with_vertex_set("C", s)).unwrap();
            assert_eq!(a, b && c);
        }
    }
}

/// BFS restricted to the mask.
fn bfs_connected(g: &Graph, mask: u32) -> bool {
    let Some(start) = (0..g.n()).find(|v| mask >> v & 1 == 1) else { return true };
    let mut seen = 1u32 << start;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if mask >> w & 1 == 1 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                queue.push_back(w);
            }
        }
    }
    seen == mask
}

#[test]
fn connectedness_matches_bfs_on_all_subsets() {
    let conn = catalog_formula("connectedness").unwrap();
    let mut r = rng(10);
    for _ in 0..40 {
        let g = gnp_with(r.gen_range(0..=7), r.gen_range(0.1..0.6), &mut r);
        for mask in 0u32..1 << g.n() {
            let s: VertexSet = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
            let got = evaluate(&conn, &Structure::new(&g).with_vertex_set("C", s)).unwrap();
            assert_eq!(got, bfs_connected(&g, mask));
        }
    }
}

/// Rainbow connectivity by enumerating every vertex-simple path.
fn rainbow_by_paths(g: &Graph, colors: &[usize]) -> bool {
    let index = g.edge_index();
    let n = g.n();
    fn walk(g: &Graph, idx: &std::collections::HashMap<(usize, usize), usize>, colors: &[usize], path: &mut Vec<usize>, used: &mut Vec<usize>, hit: &mut Vec<bool>) {
        let u = *path.last().unwrap();
        hit[u] = true;
        for &w in g.neighbors(u) {
            let c = colors[idx[&(u.min(w), u.max(w))]];
            if path.contains(&w) || used.contains(&c) {
                continue;
            }
            path.push(w);
            used.push(c);
            walk(g, idx, colors, path, used, hit);
            used.pop();
            path.pop();
        }
    }
    (0..n).all(|s| {
        let mut hit = vec![false; n];
        walk(g, &index, colors, &mut vec![s], &mut vec![], &mut hit);
        hit.iter().all(|&h| h)
    })
}

#[test]
fn rainbow_matches_path_enumeration() {
    let f = catalog_formula("rainbow_coloring").unwrap();
    let mut r = rng(11);
    for _ in 0..300 {
        let g = gnp_with(r.gen_range(1..=7), 0.45, &mut r);
        let k = r.gen_range(1..=4);
        let colors: Vec<usize> = (0..g.m()).map(|_| r.gen_range(0..k)).collect();
        let expect = rainbow_by_paths(&g, &colors);
        let opt: Vec<Option<usize>> = colors.iter().map(|&c| Some(c)).collect();
        assert_eq!(rainbow_connected(&g, &opt), expect);
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let classes: Vec<EdgeSet> = (0..k)
            .map(|c| edges.iter().zip(&colors).filter(|(_, &x)| x == c).map(|(&e, _)| e).collect())
            .collect();
        let m = Structure::new(&g).with_edge_family("L", classes);
        assert_eq!(evaluate(&f, &m).unwrap(), expect);
    }
}

#[test]
fn worked_examples() {
    let vc = catalog_formula("min_vc").unwrap();
    let k2 = Graph::complete(2);
    assert!(evaluate(&vc, &Structure::new(&k2).with_vertex_set("S", VertexSet::from([0]))).unwrap());
    assert!(!evaluate(&vc, &Structure::new(&k2).with_vertex_set("S", VertexSet::new())).unwrap());
    let dom = catalog_formula("dom").unwrap();
    let p3 = Graph::path(3);
    assert!(evaluate(&dom, &Structure::new(&p3).with_vertex_set("S", VertexSet::from([1]))).unwrap());
    assert!(parse_formula("exists X subset V. |X| <= 2 & forall y. member(y,X)").is_ok());
    let caps = SearchCaps::default();
    let c4 = Graph::cycle(4);
    assert_eq!(min_satisfying_set(&dom, &c4, caps).unwrap().unwrap().len(), 2);
    let perfect = catalog_formula("perfect_dom").unwrap();
    assert_eq!(min_satisfying_set(&perfect, &c4, caps).unwrap().unwrap().len(), 2);
    let cog = catalog_formula("min_cograph_node_del").unwrap();
    assert_eq!(min_satisfying_set(&cog, &Graph::path(4), caps).unwrap().unwrap().len(), 1);
    let proper = catalog_formula("proper_vertex_coloring").unwrap();
    assert_eq!(min_coloring_by_formula(&proper, &gnp(0, 0.5, 0), 3, 10).unwrap().unwrap().k, 1);
}

proptest! {
    #[test]
    fn unparse_round_trips_catalog(idx in 0usize..29) {
        let cat = formula_catalog();
        let f = cat.values().nth(idx).unwrap();
        prop_assert_eq!(&parse_formula(&f.unparse()).unwrap(), f);
    }
}
