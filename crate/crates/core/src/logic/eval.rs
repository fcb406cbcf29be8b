//! Brute-force model checking.
//!
//! A [`Formula`] is compiled against a [`Structure`] into a slot-addressed
//! program; quantifiers then enumerate their whole domain (vertices, edges,
//! colors, or every subset for set quantifiers).

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use super::ast::*;
use super::builtins;
use crate::graph::{norm_pair, EdgeSet, Graph, VertexSet};

/// Largest domain a set quantifier may range over.
pub const SET_QUANTIFIER_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("free {sort} `{name}` has no binding")]
    Unbound { name: String, sort: Sort },
    #[error("invalid binding for `{name}`: {msg}")]
    BadBinding { name: String, msg: String },
    #[error("{what} of size {size} exceeds the cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
}

/// The model a formula is judged against: a graph plus bindings for the free variables.
#[derive(Clone, Debug)]
pub struct Structure<'g> {
    pub graph: &'g Graph,
    pub vertex_sets: BTreeMap<String, VertexSet>,
    pub edge_sets: BTreeMap<String, EdgeSet>,
    pub vertices: BTreeMap<String, usize>,
    pub vertex_families: BTreeMap<String, Vec<VertexSet>>,
    pub edge_families: BTreeMap<String, Vec<EdgeSet>>,
    pub colors: Option<usize>,
}

impl<'g> Structure<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Structure {
            graph,
            vertex_sets: BTreeMap::new(),
            edge_sets: BTreeMap::new(),
            vertices: BTreeMap::new(),
            vertex_families: BTreeMap::new(),
            edge_families: BTreeMap::new(),
            colors: None,
        }
    }

    pub fn with_vertex_set(mut self, name: &str, set: VertexSet) -> Self {
        self.vertex_sets.insert(name.to_string(), set);
        self
    }

    pub fn with_edge_set(mut self, name: &str, set: EdgeSet) -> Self {
        self.edge_sets.insert(name.to_string(), set);
        self
    }

    pub fn with_vertex(mut self, name: &str, v: usize) -> Self {
        self.vertices.insert(name.to_string(), v);
        self
    }

    /// Binds a vertex coloring family; class `c` holds the vertices of color `c`.
    pub fn with_vertex_family(mut self, name: &str, classes: Vec<VertexSet>) -> Self {
        self.vertex_families.insert(name.to_string(), classes);
        self
    }

    pub fn with_edge_family(mut self, name: &str, classes: Vec<EdgeSet>) -> Self {
        self.edge_families.insert(name.to_string(), classes);
        self
    }

    pub fn with_colors(mut self, k: usize) -> Self {
        self.colors = Some(k);
        self
    }
}

pub fn evaluate(f: &Formula, m: &Structure) -> Result<bool, EvalError> {
    Ok(Evaluator::new(f, m)?.eval())
}

#[derive(Clone, Debug)]
struct SetVal {
    mask: Vec<bool>,
    count: usize,
}

impl SetVal {
    fn empty(len: usize) -> Self {
        SetVal {
            mask: vec![false; len],
            count: 0,
        }
    }

    fn from_mask(mask: Vec<bool>) -> Self {
        let count = mask.iter().filter(|&&b| b).count();
        SetVal { mask, count }
    }

    #[inline]
    fn flip(&mut self, i: usize) {
        self.mask[i] = !self.mask[i];
        if self.mask[i] {
            self.count += 1;
        } else {
            self.count -= 1;
        }
    }
}

#[derive(Clone, Debug)]
enum CardOp {
    Const(usize),
    Vs { slot: usize, complement: bool },
    Es { slot: usize, complement: bool },
    Vf { fam: usize, color: usize },
    Ef { fam: usize, color: usize },
}

#[derive(Clone, Debug)]
enum Op {
    Const(bool),
    Adj(usize, usize),
    EqV(usize, usize),
    EqE(usize, usize),
    EqC(usize, usize),
    InVs { set: usize, x: usize },
    InEsPair { set: usize, x: usize, y: usize },
    InEsEdge { set: usize, e: usize },
    InVf { fam: usize, x: usize, c: usize },
    InEf { fam: usize, x: usize, y: usize, c: usize },
    Inc { x: usize, e: usize },
    Card {
        lhs: (CardOp, usize),
        op: CmpOp,
        rhs: (CardOp, usize),
    },
    BuiltinV {
        pred: Builtin,
        slot: usize,
        complement: bool,
    },
    BuiltinE {
        pred: Builtin,
        slot: usize,
        complement: bool,
    },
    Rainbow { fam: usize },
    Not(Box<Op>),
    And(Box<Op>, Box<Op>),
    Or(Box<Op>, Box<Op>),
    Implies(Box<Op>, Box<Op>),
    Iff(Box<Op>, Box<Op>),
    Quant {
        q: Quantifier,
        sort: Sort,
        slot: usize,
        body: Box<Op>,
    },
}

#[derive(Clone, Debug, Default)]
struct Env {
    v: Vec<usize>,
    e: Vec<usize>,
    c: Vec<usize>,
    vs: Vec<SetVal>,
    es: Vec<SetVal>,
    vf: Vec<Vec<SetVal>>,
    ef: Vec<Vec<SetVal>>,
}

enum EdgeLookup {
    Dense(Vec<u32>),
    Sparse(HashMap<(usize, usize), usize>),
}

const NO_EDGE: u32 = u32::MAX;

struct Model<'g> {
    g: &'g Graph,
    n: usize,
    edges: Vec<(usize, usize)>,
    lookup: EdgeLookup,
    colors: usize,
}

impl Model<'_> {
    #[inline]
    fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        match &self.lookup {
            EdgeLookup::Dense(t) => {
                let id = t[u * self.n + v];
                (id != NO_EDGE).then_some(id as usize)
            }
            EdgeLookup::Sparse(map) => map.get(&norm_pair(u, v)).copied(),
        }
    }
}

/// A compiled formula bound to a structure; free set and family bindings can
/// be swapped in place for subset and assignment enumeration.
pub struct Evaluator<'g> {
    model: Model<'g>,
    program: Op,
    env: Env,
    slots: HashMap<(String, Sort), usize>,
}

struct Compiler {
    scope: Vec<(String, Sort, usize)>,
    live: HashMap<Sort, usize>,
    depth: HashMap<Sort, usize>,
}

impl Compiler {
    fn push(&mut self, sort: Sort, name: &str) -> usize {
        let live = self.live.entry(sort).or_default();
        let slot = *live;
        *live += 1;
        let d = self.depth.entry(sort).or_default();
        *d = (*d).max(slot + 1);
        self.scope.push((name.to_string(), sort, slot));
        slot
    }

    fn pop(&mut self) {
        if let Some((_, sort, _)) = self.scope.pop() {
            *self.live.get_mut(&sort).expect("pushed before") -= 1;
        }
    }

    fn find(&self, name: &str) -> (Sort, usize) {
        self.scope
            .iter()
            .rev()
            .find(|(n, _, _)| n == name)
            .map(|(_, sort, slot)| (*sort, *slot))
            .expect("parser resolved every variable")
    }

    fn slot(&self, name: &str) -> usize {
        self.find(name).1
    }

    fn card(&self, e: &CardExpr) -> (CardOp, usize) {
        let op = match &e.base {
            CardBase::Const(k) => CardOp::Const(*k),
            CardBase::Size(r) => match self.find(&r.name) {
                (Sort::VertexSet, slot) => CardOp::Vs {
                    slot,
                    complement: r.complement,
                },
                (_, slot) => CardOp::Es {
                    slot,
                    complement: r.complement,
                },
            },
            CardBase::Class { family, color } => {
                let c = self.slot(color);
                match self.find(family) {
                    (Sort::VertexFamily, fam) => CardOp::Vf { fam, color: c },
                    (_, fam) => CardOp::Ef { fam, color: c },
                }
            }
        };
        (op, e.offset)
    }

    fn compile(&mut self, node: &Node) -> Op {
        match node {
            Node::True => Op::Const(true),
            Node::False => Op::Const(false),
            Node::Adj(x, y) => Op::Adj(self.slot(x), self.slot(y)),
            Node::Eq(x, y) => {
                let (sort, a) = self.find(x);
                let b = self.slot(y);
                match sort {
                    Sort::Vertex => Op::EqV(a, b),
                    Sort::Edge => Op::EqE(a, b),
                    _ => Op::EqC(a, b),
                }
            }
            Node::Member { set, args } => {
                let (sort, s) = self.find(set);
                let a: Vec<usize> = args.iter().map(|x| self.slot(x)).collect();
                match (sort, a.as_slice()) {
                    (Sort::VertexSet, [x]) => Op::InVs { set: s, x: *x },
                    (Sort::EdgeSet, [e]) => Op::InEsEdge { set: s, e: *e },
                    (Sort::EdgeSet, [x, y]) => Op::InEsPair {
                        set: s,
                        x: *x,
                        y: *y,
                    },
                    (Sort::VertexFamily, [x, c]) => Op::InVf {
                        fam: s,
                        x: *x,
                        c: *c,
                    },
                    (Sort::EdgeFamily, [x, y, c]) => Op::InEf {
                        fam: s,
                        x: *x,
                        y: *y,
                        c: *c,
                    },
                    _ => unreachable!("parser checked membership arity"),
                }
            }
            Node::Inc(x, e) => Op::Inc {
                x: self.slot(x),
                e: self.slot(e),
            },
            Node::Card { lhs, op, rhs } => Op::Card {
                lhs: self.card(lhs),
                op: *op,
                rhs: self.card(rhs),
            },
            Node::Builtin { pred, arg } => {
                let (sort, slot) = self.find(&arg.name);
                match sort {
                    Sort::VertexSet => Op::BuiltinV {
                        pred: *pred,
                        slot,
                        complement: arg.complement,
                    },
                    Sort::EdgeSet => Op::BuiltinE {
                        pred: *pred,
                        slot,
                        complement: arg.complement,
                    },
                    _ => Op::Rainbow { fam: slot },
                }
            }
            Node::Not(a) => Op::Not(Box::new(self.compile(a))),
            Node::And(a, b) => Op::And(Box::new(self.compile(a)), Box::new(self.compile(b))),
            Node::Or(a, b) => Op::Or(Box::new(self.compile(a)), Box::new(self.compile(b))),
            Node::Implies(a, b) => {
                Op::Implies(Box::new(self.compile(a)), Box::new(self.compile(b)))
            }
            Node::Iff(a, b) => Op::Iff(Box::new(self.compile(a)), Box::new(self.compile(b))),
            Node::Quant { q, var, sort, body } => {
                let slot = self.push(*sort, var);
                let body = self.compile(body);
                self.pop();
                Op::Quant {
                    q: *q,
                    sort: *sort,
                    slot,
                    body: Box::new(body),
                }
            }
        }
    }
}

fn bad(name: &str, msg: impl Into<String>) -> EvalError {
    EvalError::BadBinding {
        name: name.to_string(),
        msg: msg.into(),
    }
}

impl<'g> Evaluator<'g> {
    pub fn new(f: &Formula, m: &Structure<'g>) -> Result<Self, EvalError> {
        let g = m.graph;
        let n = g.n();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let lookup = if n <= 2048 {
            let mut t = vec![NO_EDGE; n * n];
            for (i, &(u, v)) in edges.iter().enumerate() {
                t[u * n + v] = i as u32;
                t[v * n + u] = i as u32;
            }
            EdgeLookup::Dense(t)
        } else {
            EdgeLookup::Sparse(edges.iter().enumerate().map(|(i, &e)| (e, i)).collect())
        };

        let mut colors = m.colors;
        for (name, classes) in m
            .vertex_families
            .iter()
            .map(|(n, c)| (n, c.len()))
            .chain(m.edge_families.iter().map(|(n, c)| (n, c.len())))
        {
            match colors {
                None => colors = Some(classes),
                Some(k) if k != classes => {
                    return Err(bad(name, format!("has {classes} classes but k = {k}")))
                }
                _ => {}
            }
        }
        let model = Model {
            g,
            n,
            edges,
            lookup,
            colors: colors.unwrap_or(0),
        };

        let mut compiler = Compiler {
            scope: Vec::new(),
            live: HashMap::new(),
            depth: HashMap::new(),
        };
        let mut env = Env::default();
        let mut slots = HashMap::new();
        for (name, &sort) in &f.free {
            let slot = compiler.push(sort, name);
            slots.insert((name.clone(), sort), slot);
            let unbound = || EvalError::Unbound {
                name: name.clone(),
                sort,
            };
            match sort {
                Sort::Vertex => {
                    let v = *m.vertices.get(name).ok_or_else(unbound)?;
                    if v >= n {
                        return Err(bad(name, format!("vertex {v} out of range")));
                    }
                    env.v.push(v);
                }
                Sort::VertexSet => {
                    let s = m.vertex_sets.get(name).ok_or_else(unbound)?;
                    s.check_range(n).map_err(|e| bad(name, e.to_string()))?;
                    env.vs.push(SetVal::from_mask(s.to_mask(n)));
                }
                Sort::EdgeSet => {
                    let s = m.edge_sets.get(name).ok_or_else(unbound)?;
                    env.es.push(SetVal::from_mask(edge_mask(&model, name, s)?));
                }
                Sort::VertexFamily => {
                    let fam = m.vertex_families.get(name).ok_or_else(unbound)?;
                    let mut classes = Vec::with_capacity(fam.len());
                    for s in fam {
                        s.check_range(n).map_err(|e| bad(name, e.to_string()))?;
                        classes.push(SetVal::from_mask(s.to_mask(n)));
                    }
                    env.vf.push(classes);
                }
                Sort::EdgeFamily => {
                    let fam = m.edge_families.get(name).ok_or_else(unbound)?;
                    let mut classes = Vec::with_capacity(fam.len());
                    for s in fam {
                        classes.push(SetVal::from_mask(edge_mask(&model, name, s)?));
                    }
                    env.ef.push(classes);
                }
                Sort::Edge | Sort::Color => {
                    return Err(bad(name, "free edge and color variables are not supported"))
                }
            }
        }
        let program = compiler.compile(&f.root);
        check_set_quantifiers(&program, &model)?;
        let depth = |s: Sort| compiler.depth.get(&s).copied().unwrap_or(0);
        env.v.resize(depth(Sort::Vertex), 0);
        env.e.resize(depth(Sort::Edge), 0);
        env.c.resize(depth(Sort::Color), 0);
        env.vs.resize(depth(Sort::VertexSet), SetVal::empty(n));
        env.es.resize(depth(Sort::EdgeSet), SetVal::empty(model.edges.len()));
        Ok(Evaluator {
            model,
            program,
            env,
            slots,
        })
    }

    pub fn eval(&mut self) -> bool {
        eval(&self.program, &mut self.env, &self.model)
    }

    fn free_slot(&self, name: &str, sort: Sort) -> usize {
        *self
            .slots
            .get(&(name.to_string(), sort))
            .unwrap_or_else(|| panic!("`{name}` is not a free {sort}"))
    }

    /// Replaces a free vertex set binding; `mask` has length `n`.
    pub fn bind_vertex_mask(&mut self, name: &str, mask: Vec<bool>) {
        let slot = self.free_slot(name, Sort::VertexSet);
        self.env.vs[slot] = SetVal::from_mask(mask);
    }

    /// Replaces a free edge set binding; `mask` is indexed by canonical edge order.
    pub fn bind_edge_mask(&mut self, name: &str, mask: Vec<bool>) {
        let slot = self.free_slot(name, Sort::EdgeSet);
        self.env.es[slot] = SetVal::from_mask(mask);
    }

    /// Replaces a vertex family by a color assignment (`colors[v] < k`).
    pub fn bind_vertex_coloring(&mut self, name: &str, colors: &[usize], k: usize) {
        let slot = self.free_slot(name, Sort::VertexFamily);
        self.env.vf[slot] = classes_of(colors, k);
        self.model.colors = k;
    }

    /// Replaces an edge family by a color assignment over canonical edge order.
    pub fn bind_edge_coloring(&mut self, name: &str, colors: &[usize], k: usize) {
        let slot = self.free_slot(name, Sort::EdgeFamily);
        self.env.ef[slot] = classes_of(colors, k);
        self.model.colors = k;
    }
}

fn classes_of(colors: &[usize], k: usize) -> Vec<SetVal> {
    (0..k)
        .map(|c| SetVal::from_mask(colors.iter().map(|&x| x == c).collect()))
        .collect()
}

fn edge_mask(model: &Model, name: &str, s: &EdgeSet) -> Result<Vec<bool>, EvalError> {
    let mut mask = vec![false; model.edges.len()];
    for (u, v) in s.iter() {
        if u >= model.n || v >= model.n {
            return Err(bad(name, format!("pair {{{u}, {v}}} out of range")));
        }
        let id = model
            .edge_id(u, v)
            .ok_or_else(|| bad(name, format!("pair {{{u}, {v}}} is not an edge")))?;
        mask[id] = true;
    }
    Ok(mask)
}

fn check_set_quantifiers(op: &Op, model: &Model) -> Result<(), EvalError> {
    match op {
        Op::Quant { sort, body, .. } => {
            let size = match sort {
                Sort::VertexSet => model.n,
                Sort::EdgeSet => model.edges.len(),
                _ => 0,
            };
            if size > SET_QUANTIFIER_CAP {
                return Err(EvalError::TooLarge {
                    what: "set quantifier domain",
                    size,
                    cap: SET_QUANTIFIER_CAP,
                });
            }
            check_set_quantifiers(body, model)
        }
        Op::Not(a) => check_set_quantifiers(a, model),
        Op::And(a, b) | Op::Or(a, b) | Op::Implies(a, b) | Op::Iff(a, b) => {
            check_set_quantifiers(a, model)?;
            check_set_quantifiers(b, model)
        }
        _ => Ok(()),
    }
}

fn card_value(c: &(CardOp, usize), env: &Env, model: &Model) -> usize {
    let base = match &c.0 {
        CardOp::Const(k) => *k,
        CardOp::Vs { slot, complement } => {
            let s = env.vs[*slot].count;
            if *complement {
                model.n - s
            } else {
                s
            }
        }
        CardOp::Es { slot, complement } => {
            let s = env.es[*slot].count;
            if *complement {
                model.edges.len() - s
            } else {
                s
            }
        }
        CardOp::Vf { fam, color } => env.vf[*fam][env.c[*color]].count,
        CardOp::Ef { fam, color } => env.ef[*fam][env.c[*color]].count,
    };
    base + c.1
}

fn masked(mask: &[bool], complement: bool) -> Vec<bool> {
    mask.iter().map(|&b| b != complement).collect()
}

fn eval_builtin_v(pred: Builtin, mask: &[bool], model: &Model) -> bool {
    let g = model.g;
    match pred {
        Builtin::Connected => builtins::induces_connected(g, mask),
        Builtin::Cycle => builtins::induces_cycle(g, mask),
        Builtin::Comparability | Builtin::Cocomparability => {
            let sub = g
                .induced_subgraph(&VertexSet::from_mask(mask))
                .expect("mask within range");
            if pred == Builtin::Comparability {
                builtins::has_transitive_orientation(&sub)
            } else {
                builtins::has_transitive_orientation(&sub.complement())
            }
        }
        Builtin::Rainbow | Builtin::ComparabilityMinus => {
            unreachable!("parser restricts argument sorts")
        }
    }
}

fn eval_builtin_e(pred: Builtin, mask: &[bool], model: &Model) -> bool {
    match pred {
        Builtin::ComparabilityMinus => {
            let removed: EdgeSet = model
                .edges
                .iter()
                .zip(mask)
                .filter(|(_, &b)| b)
                .map(|(&e, _)| e)
                .collect();
            let rest = model.g.delete_edges(&removed).expect("edges of the graph");
            builtins::has_transitive_orientation(&rest)
        }
        _ => unreachable!("parser restricts argument sorts"),
    }
}

fn eval(op: &Op, env: &mut Env, model: &Model) -> bool {
    match op {
        Op::Const(b) => *b,
        Op::Adj(x, y) => {
            let (u, v) = (env.v[*x], env.v[*y]);
            u != v && model.edge_id(u, v).is_some()
        }
        Op::EqV(a, b) => env.v[*a] == env.v[*b],
        Op::EqE(a, b) => env.e[*a] == env.e[*b],
        Op::EqC(a, b) => env.c[*a] == env.c[*b],
        Op::InVs { set, x } => env.vs[*set].mask[env.v[*x]],
        Op::InEsPair { set, x, y } => {
            let (u, v) = (env.v[*x], env.v[*y]);
            u != v
                && model
                    .edge_id(u, v)
                    .is_some_and(|id| env.es[*set].mask[id])
        }
        Op::InEsEdge { set, e } => env.es[*set].mask[env.e[*e]],
        Op::InVf { fam, x, c } => env.vf[*fam][env.c[*c]].mask[env.v[*x]],
        Op::InEf { fam, x, y, c } => {
            let (u, v) = (env.v[*x], env.v[*y]);
            u != v
                && model
                    .edge_id(u, v)
                    .is_some_and(|id| env.ef[*fam][env.c[*c]].mask[id])
        }
        Op::Inc { x, e } => {
            let (a, b) = model.edges[env.e[*e]];
            let v = env.v[*x];
            v == a || v == b
        }
        Op::Card { lhs, op, rhs } => {
            op.apply(card_value(lhs, env, model), card_value(rhs, env, model))
        }
        Op::BuiltinV {
            pred,
            slot,
            complement,
        } => {
            let mask = masked(&env.vs[*slot].mask, *complement);
            eval_builtin_v(*pred, &mask, model)
        }
        Op::BuiltinE {
            pred,
            slot,
            complement,
        } => {
            let mask = masked(&env.es[*slot].mask, *complement);
            eval_builtin_e(*pred, &mask, model)
        }
        Op::Rainbow { fam } => {
            let classes = &env.ef[*fam];
            let colors: Vec<Option<usize>> = (0..model.edges.len())
                .map(|i| classes.iter().position(|c| c.mask[i]))
                .collect();
            builtins::rainbow_connected(model.g, &colors)
        }
        Op::Not(a) => !eval(a, env, model),
        Op::And(a, b) => eval(a, env, model) && eval(b, env, model),
        Op::Or(a, b) => eval(a, env, model) || eval(b, env, model),
        Op::Implies(a, b) => !eval(a, env, model) || eval(b, env, model),
        Op::Iff(a, b) => eval(a, env, model) == eval(b, env, model),
        Op::Quant { q, sort, slot, body } => {
            let want = *q == Quantifier::Exists;
            match sort {
                Sort::Vertex => {
                    for v in 0..model.n {
                        env.v[*slot] = v;
                        if eval(body, env, model) == want {
                            return want;
                        }
                    }
                    !want
                }
                Sort::Edge => {
                    for e in 0..model.edges.len() {
                        env.e[*slot] = e;
                        if eval(body, env, model) == want {
                            return want;
                        }
                    }
                    !want
                }
                Sort::Color => {
                    for c in 0..model.colors {
                        env.c[*slot] = c;
                        if eval(body, env, model) == want {
                            return want;
                        }
                    }
                    !want
                }
                Sort::VertexSet | Sort::EdgeSet => {
                    let len = if *sort == Sort::VertexSet {
                        model.n
                    } else {
                        model.edges.len()
                    };
                    let fresh = SetVal::empty(len);
                    fn set_env(env: &mut Env, sort: Sort, slot: usize) -> &mut SetVal {
                        if sort == Sort::VertexSet {
                            &mut env.vs[slot]
                        } else {
                            &mut env.es[slot]
                        }
                    }
                    *set_env(env, *sort, *slot) = fresh;
                    if eval(body, env, model) == want {
                        return want;
                    }
                    // Gray-code order flips one member per step.
                    for i in 1u64..(1u64 << len) {
                        set_env(env, *sort, *slot).flip(i.trailing_zeros() as usize);
                        if eval(body, env, model) == want {
                            return want;
                        }
                    }
                    !want
                }
                Sort::VertexFamily | Sort::EdgeFamily => unreachable!("families are never bound"),
            }
        }
    }
}
