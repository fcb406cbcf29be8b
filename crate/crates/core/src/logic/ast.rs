use std::collections::BTreeMap;
use std::fmt;

/// Sort of a variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    Vertex,
    Edge,
    Color,
    VertexSet,
    EdgeSet,
    /// `k` vertex sets indexed by color, written `T(x, c)`.
    VertexFamily,
    /// `k` edge sets indexed by color, written `L(x, y, c)`.
    EdgeFamily,
}

impl Sort {
    pub fn is_term(self) -> bool {
        matches!(self, Sort::Vertex | Sort::Edge | Sort::Color)
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sort::Vertex => "vertex",
            Sort::Edge => "edge",
            Sort::Color => "color",
            Sort::VertexSet => "vertex set",
            Sort::EdgeSet => "edge set",
            Sort::VertexFamily => "vertex coloring family",
            Sort::EdgeFamily => "edge coloring family",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Forall,
    Exists,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
}

impl CmpOp {
    pub fn apply(self, a: usize, b: usize) -> bool {
        match self {
            CmpOp::Lt => a < b,
            CmpOp::Le => a <= b,
            CmpOp::Eq => a == b,
            CmpOp::Ne => a != b,
            CmpOp::Ge => a >= b,
            CmpOp::Gt => a > b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Eq => "=",
            CmpOp::Ne => "!=",
            CmpOp::Ge => ">=",
            CmpOp::Gt => ">",
        }
    }
}

/// A vertex-set or edge-set variable, optionally complemented (`~S`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetRef {
    pub name: String,
    pub complement: bool,
}

impl fmt::Display for SetRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complement {
            write!(f, "~")?;
        }
        f.write_str(&self.name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CardBase {
    Const(usize),
    /// `|X|`
    Size(SetRef),
    /// `|T[c]|`, the size of color class `c` of a family.
    Class { family: String, color: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CardExpr {
    pub base: CardBase,
    pub offset: usize,
}

impl fmt::Display for CardExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            CardBase::Const(k) => write!(f, "{k}")?,
            CardBase::Size(s) => write!(f, "|{s}|")?,
            CardBase::Class { family, color } => write!(f, "|{family}[{color}]|")?,
        }
        if self.offset > 0 {
            write!(f, " + {}", self.offset)?;
        }
        Ok(())
    }
}

/// Semantic predicates that the fragment cannot express with bounded formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// The vertex set induces a connected subgraph (vacuous for <= 1 member).
    Connected,
    /// The vertex set induces a single cycle of length >= 3.
    Cycle,
    /// Every vertex pair is joined by a path whose edge colors are pairwise distinct.
    Rainbow,
    /// The subgraph induced by the vertex set has a transitive orientation.
    Comparability,
    /// The complement of the subgraph induced by the vertex set has a transitive orientation.
    Cocomparability,
    /// The graph minus the given edge set has a transitive orientation.
    ComparabilityMinus,
}

impl Builtin {
    pub fn name(self) -> &'static str {
        match self {
            Builtin::Connected => "connected",
            Builtin::Cycle => "cycle",
            Builtin::Rainbow => "rainbow",
            Builtin::Comparability => "comparability",
            Builtin::Cocomparability => "cocomparability",
            Builtin::ComparabilityMinus => "comparability_minus",
        }
    }

    pub fn from_name(s: &str) -> Option<Builtin> {
        Some(match s {
            "connected" => Builtin::Connected,
            "cycle" => Builtin::Cycle,
            "rainbow" => Builtin::Rainbow,
            "comparability" => Builtin::Comparability,
            "cocomparability" => Builtin::Cocomparability,
            "comparability_minus" => Builtin::ComparabilityMinus,
            _ => return None,
        })
    }

    /// Sort of the single argument.
    pub fn arg_sort(self) -> Sort {
        match self {
            Builtin::Rainbow => Sort::EdgeFamily,
            Builtin::ComparabilityMinus => Sort::EdgeSet,
            _ => Sort::VertexSet,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    True,
    False,
    /// `E(x, y)`
    Adj(String, String),
    /// `x = y` between terms of one sort.
    Eq(String, String),
    /// `S(x)`, `S(x, y)`, `F(e)`, `T(x, c)` or `L(x, y, c)`.
    Member { set: String, args: Vec<String> },
    /// `inc(x, e)`: vertex `x` is an endpoint of edge `e`.
    Inc(String, String),
    Card {
        lhs: CardExpr,
        op: CmpOp,
        rhs: CardExpr,
    },
    Builtin { pred: Builtin, arg: SetRef },
    Not(Box<Node>),
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
    Implies(Box<Node>, Box<Node>),
    Iff(Box<Node>, Box<Node>),
    Quant {
        q: Quantifier,
        var: String,
        sort: Sort,
        body: Box<Node>,
    },
}

impl Node {
    pub fn not(a: Node) -> Node {
        Node::Not(Box::new(a))
    }

    pub fn and(a: Node, b: Node) -> Node {
        Node::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Node, b: Node) -> Node {
        Node::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Node, b: Node) -> Node {
        Node::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Node, b: Node) -> Node {
        Node::Iff(Box::new(a), Box::new(b))
    }

    fn is_atomic(&self) -> bool {
        !matches!(
            self,
            Node::And(..) | Node::Or(..) | Node::Implies(..) | Node::Iff(..) | Node::Quant { .. }
        )
    }
}

/// A scoped formula: the AST plus the sorts of its free variables.
///
/// Free set and family variables are introduced implicitly by use; free
/// vertex variables must be declared with a leading `free x, y.` clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula {
    pub root: Node,
    pub free: BTreeMap<String, Sort>,
    pub declared: Vec<String>,
}

impl Formula {
    pub fn free_of_sort(&self, sort: Sort) -> impl Iterator<Item = &str> + '_ {
        self.free
            .iter()
            .filter(move |(_, &s)| s == sort)
            .map(|(n, _)| n.as_str())
    }

    /// Concrete syntax that parses back to an identical formula.
    pub fn unparse(&self) -> String {
        let mut out = String::new();
        if !self.declared.is_empty() {
            out.push_str("free ");
            out.push_str(&self.declared.join(", "));
            out.push_str(". ");
        }
        write_node(&self.root, &mut out);
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.unparse())
    }
}

fn write_child(node: &Node, out: &mut String) {
    if node.is_atomic() {
        write_node(node, out);
    } else {
        out.push('(');
        write_node(node, out);
        out.push(')');
    }
}

fn write_node(node: &Node, out: &mut String) {
    use std::fmt::Write;
    match node {
        Node::True => out.push_str("true"),
        Node::False => out.push_str("false"),
        Node::Adj(x, y) => write!(out, "E({x}, {y})").unwrap(),
        Node::Eq(x, y) => write!(out, "{x} = {y}").unwrap(),
        Node::Member { set, args } => write!(out, "{set}({})", args.join(", ")).unwrap(),
        Node::Inc(x, e) => write!(out, "inc({x}, {e})").unwrap(),
        Node::Card { lhs, op, rhs } => write!(out, "{lhs} {} {rhs}", op.symbol()).unwrap(),
        Node::Builtin { pred, arg } => write!(out, "{}({arg})", pred.name()).unwrap(),
        Node::Not(inner) => match inner.as_ref() {
            Node::Eq(x, y) => write!(out, "{x} != {y}").unwrap(),
            Node::Card { .. } => {
                out.push_str("!(");
                write_node(inner, out);
                out.push(')');
            }
            other => {
                out.push('!');
                write_child(other, out);
            }
        },
        Node::And(a, b) | Node::Or(a, b) | Node::Implies(a, b) | Node::Iff(a, b) => {
            let op = match node {
                Node::And(..) => " & ",
                Node::Or(..) => " | ",
                Node::Implies(..) => " -> ",
                _ => " <-> ",
            };
            write_child(a, out);
            out.push_str(op);
            write_child(b, out);
        }
        Node::Quant { q, var, sort, body } => {
            out.push_str(match q {
                Quantifier::Forall => "forall ",
                Quantifier::Exists => "exists ",
            });
            out.push_str(var);
            out.push_str(match sort {
                Sort::Vertex => "",
                Sort::Edge => " in E",
                Sort::Color => " in C",
                Sort::VertexSet => " subset V",
                Sort::EdgeSet => " subset E",
                Sort::VertexFamily | Sort::EdgeFamily => unreachable!("families are never bound"),
            });
            out.push_str(". ");
            write_node(body, out);
        }
    }
}
