//! Recursive-descent parser for the formula language.
//!
//! ```text
//! formula  := 'free' ident (',' ident)* '.' formula | iff
//! iff      := imp ('<->' imp)*
//! imp      := or ('->' imp)?
//! or       := and ('|' and)*
//! and      := unary ('&' unary)*
//! unary    := '!' unary | quant | primary
//! quant    := ('forall' | 'exists') binder (',' binder)* '.' formula
//! binder   := ident ['in' ('V' | 'E' | 'C') | 'subset' ('V' | 'E')]
//! primary  := '(' formula ')' | 'true' | 'false' | card cmp card
//!           | 'E' '(' t ',' t ')' | 'inc' '(' t ',' t ')' | 'member' '(' t ',' set ')'
//!           | builtin '(' ['~'] ident ')' | ident '(' t (',' t)* ')' | t ('=' | '!=') t
//! card     := ('|' ['~'] ident '|' | '|' ident '[' ident ']' '|' | num) ['+' num]
//! ```

use std::collections::BTreeMap;

use thiserror::Error;

use super::ast::*;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unbound variable `{name}` at {pos}")]
    Unbound { name: String, pos: usize },
    #[error("sort error at {pos}: `{name}` {msg}")]
    Sort {
        name: String,
        pos: usize,
        msg: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(usize),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Amp,
    Bar,
    Bang,
    Tilde,
    Arrow,
    DArrow,
    Plus,
    Cmp(CmpOp),
    Eof,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, FormulaError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let rest = &text[i..];
        let (tok, len) = if c.is_ascii_alphabetic() || c == '_' {
            let len = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            (Tok::Ident(rest[..len].to_string()), len)
        } else if c.is_ascii_digit() {
            let len = rest
                .find(|ch: char| !ch.is_ascii_digit())
                .unwrap_or(rest.len());
            let value = rest[..len].parse().map_err(|_| FormulaError::Syntax {
                pos: start,
                msg: "number too large".into(),
            })?;
            (Tok::Num(value), len)
        } else if rest.starts_with("<->") {
            (Tok::DArrow, 3)
        } else if rest.starts_with("->") {
            (Tok::Arrow, 2)
        } else if rest.starts_with("<=") {
            (Tok::Cmp(CmpOp::Le), 2)
        } else if rest.starts_with(">=") {
            (Tok::Cmp(CmpOp::Ge), 2)
        } else if rest.starts_with("!=") {
            (Tok::Cmp(CmpOp::Ne), 2)
        } else {
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '&' => Tok::Amp,
                '|' => Tok::Bar,
                '!' => Tok::Bang,
                '~' => Tok::Tilde,
                '+' => Tok::Plus,
                '<' => Tok::Cmp(CmpOp::Lt),
                '>' => Tok::Cmp(CmpOp::Gt),
                '=' => Tok::Cmp(CmpOp::Eq),
                other => {
                    return Err(FormulaError::Syntax {
                        pos: start,
                        msg: format!("unexpected character `{other}`"),
                    })
                }
            };
            (tok, c.len_utf8())
        };
        out.push((tok, start));
        i += len;
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

const KEYWORDS: &[&str] = &[
    "forall", "exists", "free", "in", "subset", "member", "inc", "true", "false", "E",
];

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    scope: Vec<(String, Sort)>,
    declared: Vec<String>,
    free: BTreeMap<String, Sort>,
}

pub fn parse_formula(text: &str) -> Result<Formula, FormulaError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        scope: Vec::new(),
        declared: Vec::new(),
        free: BTreeMap::new(),
    };
    if p.peek_ident("free") {
        p.bump();
        loop {
            let (name, pos) = p.ident()?;
            p.check_name(&name, pos)?;
            if p.declared.contains(&name) {
                return Err(p.syntax(pos, format!("`{name}` declared twice")));
            }
            p.declared.push(name.clone());
            p.free.insert(name, Sort::Vertex);
            if !p.eat(&Tok::Comma) {
                break;
            }
        }
        p.expect(&Tok::Dot, "`.` after free declaration")?;
    }
    let root = p.formula()?;
    if p.peek() != &Tok::Eof {
        return Err(p.syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(Formula {
        root,
        free: p.free,
        declared: p.declared,
    })
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn peek_ident(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn syntax(&self, pos: usize, msg: impl Into<String>) -> FormulaError {
        FormulaError::Syntax {
            pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), FormulaError> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.syntax(self.pos(), format!("expected {what}")))
        }
    }

    fn ident(&mut self) -> Result<(String, usize), FormulaError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Ident(s) => Ok((s, pos)),
            _ => Err(self.syntax(pos, "expected identifier")),
        }
    }

    fn check_name(&self, name: &str, pos: usize) -> Result<(), FormulaError> {
        if KEYWORDS.contains(&name) || Builtin::from_name(name).is_some() {
            Err(self.syntax(pos, format!("`{name}` is reserved")))
        } else {
            Ok(())
        }
    }

    fn lookup(&self, name: &str) -> Option<Sort> {
        self.scope
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, s)| *s)
            .or_else(|| self.free.get(name).copied())
    }

    /// Resolves a term occurrence; term variables must be bound or declared.
    fn term(&mut self) -> Result<(String, Sort, usize), FormulaError> {
        let (name, pos) = self.ident()?;
        match self.lookup(&name) {
            Some(sort) if sort.is_term() => Ok((name, sort, pos)),
            Some(sort) => Err(FormulaError::Sort {
                name,
                pos,
                msg: format!("is a {sort}, expected a vertex, edge or color"),
            }),
            None => Err(FormulaError::Unbound { name, pos }),
        }
    }

    /// Resolves a set-like occurrence, introducing it as free if unseen.
    fn set_var(&mut self, name: &str, pos: usize, sort: Sort) -> Result<(), FormulaError> {
        match self.lookup(name) {
            Some(s) if s == sort => Ok(()),
            Some(s) => Err(FormulaError::Sort {
                name: name.to_string(),
                pos,
                msg: format!("used as a {sort} but is a {s}"),
            }),
            None => {
                self.check_name(name, pos)?;
                self.free.insert(name.to_string(), sort);
                Ok(())
            }
        }
    }

    fn formula(&mut self) -> Result<Node, FormulaError> {
        let mut lhs = self.implication()?;
        while self.eat(&Tok::DArrow) {
            let rhs = self.implication()?;
            lhs = Node::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Node, FormulaError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            Ok(Node::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Node, FormulaError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Bar) {
            let rhs = self.conjunction()?;
            lhs = Node::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Node, FormulaError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.unary()?;
            lhs = Node::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node, FormulaError> {
        if self.eat(&Tok::Bang) {
            return Ok(Node::not(self.unary()?));
        }
        if self.peek_ident("forall") || self.peek_ident("exists") {
            return self.quantified();
        }
        self.primary()
    }

    fn quantified(&mut self) -> Result<Node, FormulaError> {
        let q = match self.bump() {
            Tok::Ident(s) if s == "forall" => Quantifier::Forall,
            _ => Quantifier::Exists,
        };
        let mut binders = Vec::new();
        loop {
            let (name, pos) = self.ident()?;
            self.check_name(&name, pos)?;
            let sort = if self.peek_ident("in") {
                self.bump();
                let (dom, dpos) = self.ident()?;
                match dom.as_str() {
                    "V" => Sort::Vertex,
                    "E" => Sort::Edge,
                    "C" => Sort::Color,
                    _ => return Err(self.syntax(dpos, "expected `V`, `E` or `C` after `in`")),
                }
            } else if self.peek_ident("subset") {
                self.bump();
                let (dom, dpos) = self.ident()?;
                match dom.as_str() {
                    "V" => Sort::VertexSet,
                    "E" => Sort::EdgeSet,
                    _ => return Err(self.syntax(dpos, "expected `V` or `E` after `subset`")),
                }
            } else {
                Sort::Vertex
            };
            binders.push((name, sort));
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(&Tok::Dot, "`.` after quantifier")?;
        let depth = self.scope.len();
        self.scope.extend(binders.iter().cloned());
        let body = self.formula();
        self.scope.truncate(depth);
        let mut node = body?;
        for (var, sort) in binders.into_iter().rev() {
            node = Node::Quant {
                q,
                var,
                sort,
                body: Box::new(node),
            };
        }
        Ok(node)
    }

    fn primary(&mut self) -> Result<Node, FormulaError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Bar | Tok::Num(_) => self.cardinality(),
            Tok::Ident(name) => {
                if name == "true" {
                    self.bump();
                    return Ok(Node::True);
                }
                if name == "false" {
                    self.bump();
                    return Ok(Node::False);
                }
                if self.peek_at(1) == &Tok::LParen {
                    return self.application();
                }
                let (x, sx, px) = self.term()?;
                let negated = match self.bump() {
                    Tok::Cmp(CmpOp::Eq) => false,
                    Tok::Cmp(CmpOp::Ne) => true,
                    _ => return Err(self.syntax(self.pos(), "expected `=` or `!=`")),
                };
                let (y, sy, py) = self.term()?;
                if sx != sy {
                    return Err(FormulaError::Sort {
                        name: y,
                        pos: py,
                        msg: format!("is a {sy} compared with {sx} `{x}` at {px}"),
                    });
                }
                let eq = Node::Eq(x, y);
                Ok(if negated { Node::not(eq) } else { eq })
            }
            _ => Err(self.syntax(pos, "expected a formula")),
        }
    }

    fn expect_sort(&self, name: &str, sort: Sort, want: Sort, pos: usize) -> Result<(), FormulaError> {
        if sort == want {
            Ok(())
        } else {
            Err(FormulaError::Sort {
                name: name.to_string(),
                pos,
                msg: format!("is a {sort}, expected a {want}"),
            })
        }
    }

    fn application(&mut self) -> Result<Node, FormulaError> {
        let (head, hpos) = self.ident()?;
        self.expect(&Tok::LParen, "`(`")?;
        if let Some(pred) = Builtin::from_name(&head) {
            let complement = self.eat(&Tok::Tilde);
            let (name, pos) = self.ident()?;
            let want = pred.arg_sort();
            if complement && want == Sort::EdgeFamily {
                return Err(self.syntax(pos, "a coloring family cannot be complemented"));
            }
            self.set_var(&name, pos, want)?;
            self.expect(&Tok::RParen, "`)`")?;
            return Ok(Node::Builtin {
                pred,
                arg: SetRef { name, complement },
            });
        }
        match head.as_str() {
            "E" | "inc" => {
                let (x, sx, px) = self.term()?;
                self.expect(&Tok::Comma, "`,`")?;
                let (y, sy, py) = self.term()?;
                self.expect(&Tok::RParen, "`)`")?;
                self.expect_sort(&x, sx, Sort::Vertex, px)?;
                if head == "E" {
                    self.expect_sort(&y, sy, Sort::Vertex, py)?;
                    Ok(Node::Adj(x, y))
                } else {
                    self.expect_sort(&y, sy, Sort::Edge, py)?;
                    Ok(Node::Inc(x, y))
                }
            }
            "member" => {
                let (x, sx, px) = self.term()?;
                self.expect(&Tok::Comma, "`,`")?;
                let (set, spos) = self.ident()?;
                self.expect(&Tok::RParen, "`)`")?;
                let sort = match sx {
                    Sort::Vertex => Sort::VertexSet,
                    Sort::Edge => Sort::EdgeSet,
                    _ => {
                        return Err(FormulaError::Sort {
                            name: x,
                            pos: px,
                            msg: "colors cannot be set members".into(),
                        })
                    }
                };
                self.set_var(&set, spos, sort)?;
                Ok(Node::Member { set, args: vec![x] })
            }
            _ => {
                let mut args = Vec::new();
                loop {
                    args.push(self.term()?);
                    if !self.eat(&Tok::Comma) {
                        break;
                    }
                }
                self.expect(&Tok::RParen, "`)`")?;
                let sorts: Vec<Sort> = args.iter().map(|a| a.1).collect();
                let sort = match sorts.as_slice() {
                    [Sort::Vertex] => Sort::VertexSet,
                    [Sort::Edge] => Sort::EdgeSet,
                    [Sort::Vertex, Sort::Vertex] => Sort::EdgeSet,
                    [Sort::Vertex, Sort::Color] => Sort::VertexFamily,
                    [Sort::Vertex, Sort::Vertex, Sort::Color] => Sort::EdgeFamily,
                    _ => {
                        return Err(FormulaError::Sort {
                            name: head,
                            pos: hpos,
                            msg: "applied to arguments of unsupported sorts".into(),
                        })
                    }
                };
                self.set_var(&head, hpos, sort)?;
                Ok(Node::Member {
                    set: head,
                    args: args.into_iter().map(|a| a.0).collect(),
                })
            }
        }
    }

    fn card_expr(&mut self) -> Result<CardExpr, FormulaError> {
        let pos = self.pos();
        let base = match self.bump() {
            Tok::Num(k) => CardBase::Const(k),
            Tok::Bar => {
                let complement = self.eat(&Tok::Tilde);
                let (name, npos) = self.ident()?;
                let base = if !complement && self.eat(&Tok::LBracket) {
                    let (color, csort, cpos) = self.term()?;
                    self.expect_sort(&color, csort, Sort::Color, cpos)?;
                    self.expect(&Tok::RBracket, "`]`")?;
                    match self.lookup(&name) {
                        Some(Sort::VertexFamily) => {}
                        Some(Sort::EdgeFamily) => {}
                        Some(other) => {
                            return Err(FormulaError::Sort {
                                name,
                                pos: npos,
                                msg: format!("is a {other}, expected a coloring family"),
                            })
                        }
                        None => self.set_var(&name, npos, Sort::VertexFamily)?,
                    }
                    CardBase::Class { family: name, color }
                } else {
                    match self.lookup(&name) {
                        Some(Sort::VertexSet) | Some(Sort::EdgeSet) => {}
                        Some(other) => {
                            return Err(FormulaError::Sort {
                                name,
                                pos: npos,
                                msg: format!("is a {other}, expected a set"),
                            })
                        }
                        None => self.set_var(&name, npos, Sort::VertexSet)?,
                    }
                    CardBase::Size(SetRef { name, complement })
                };
                self.expect(&Tok::Bar, "closing `|`")?;
                base
            }
            _ => return Err(self.syntax(pos, "expected cardinality expression")),
        };
        let offset = if self.peek() == &Tok::Plus {
            self.bump();
            match self.bump() {
                Tok::Num(k) => k,
                _ => return Err(self.syntax(self.pos(), "expected number after `+`")),
            }
        } else {
            0
        };
        Ok(CardExpr { base, offset })
    }

    fn cardinality(&mut self) -> Result<Node, FormulaError> {
        let lhs = self.card_expr()?;
        let op = match self.bump() {
            Tok::Cmp(op) => op,
            _ => return Err(self.syntax(self.pos(), "expected comparison operator")),
        };
        let rhs = self.card_expr()?;
        Ok(Node::Card { lhs, op, rhs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_cover_formula() {
        let f = parse_formula("forall x. forall y. E(x,y) -> (S(x) | S(y))").unwrap();
        assert_eq!(f.free.get("S"), Some(&Sort::VertexSet));
        let expected = Node::Quant {
            q: Quantifier::Forall,
            var: "x".into(),
            sort: Sort::Vertex,
            body: Box::new(Node::Quant {
                q: Quantifier::Forall,
                var: "y".into(),
                sort: Sort::Vertex,
                body: Box::new(Node::implies(
                    Node::Adj("x".into(), "y".into()),
                    Node::or(
                        Node::Member {
                            set: "S".into(),
                            args: vec!["x".into()],
                        },
                        Node::Member {
                            set: "S".into(),
                            args: vec!["y".into()],
                        },
                    ),
                )),
            }),
        };
        assert_eq!(f.root, expected);
    }

    #[test]
    fn set_quantifier_and_cardinality() {
        let f = parse_formula("exists X subset V. |X| <= 2 & forall y. member(y,X)").unwrap();
        assert!(f.free.is_empty());
        match &f.root {
            Node::Quant {
                q: Quantifier::Exists,
                sort: Sort::VertexSet,
                body,
                ..
            } => assert!(matches!(body.as_ref(), Node::And(..))),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unbound_variable() {
        let err = parse_formula("forall x. S(z)").unwrap_err();
        assert_eq!(
            err,
            FormulaError::Unbound {
                name: "z".into(),
                pos: 12
            }
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(
            parse_formula("forall x E(x,x)"),
            Err(FormulaError::Syntax { pos: 9, .. })
        ));
        assert!(parse_formula("S(x").is_err());
        assert!(matches!(
            parse_formula("forall x. x = "),
            Err(FormulaError::Syntax { .. })
        ));
        assert!(matches!(parse_formula("$"), Err(FormulaError::Syntax { pos: 0, .. })));
    }

    #[test]
    fn sort_errors() {
        // S used both as vertex set and edge set
        assert!(matches!(
            parse_formula("forall x. forall y. S(x) & S(x,y)"),
            Err(FormulaError::Sort { .. })
        ));
        assert!(matches!(
            parse_formula("forall x. forall c in C. x = c"),
            Err(FormulaError::Sort { .. })
        ));
        assert!(matches!(
            parse_formula("forall X subset V. E(X, X)"),
            Err(FormulaError::Sort { .. })
        ));
    }

    #[test]
    fn families_colors_and_builtins() {
        let f = parse_formula(
            "forall c1 in C, c2 in C. |T[c1]| <= |T[c2]| + 1 & rainbow(L) & connected(~S)",
        )
        .unwrap();
        assert_eq!(f.free.get("T"), Some(&Sort::VertexFamily));
        assert_eq!(f.free.get("L"), Some(&Sort::EdgeFamily));
        assert_eq!(f.free.get("S"), Some(&Sort::VertexSet));
    }

    #[test]
    fn declared_free_vertices() {
        let f = parse_formula("free x, y. E(x, y)").unwrap();
        assert_eq!(f.declared, vec!["x".to_string(), "y".to_string()]);
        assert_eq!(f.unparse(), "free x, y. E(x, y)");
    }

    #[test]
    fn precedence() {
        let f = parse_formula("forall x. S(x) | S(x) & !S(x) -> S(x) <-> S(x)").unwrap();
        let Node::Quant { body, .. } = f.root else { panic!() };
        // <-> binds loosest, then ->, then |, then &
        let Node::Iff(lhs, _) = *body else { panic!() };
        let Node::Implies(or, _) = *lhs else { panic!() };
        let Node::Or(_, and) = *or else { panic!() };
        assert!(matches!(*and, Node::And(..)));
    }

    #[test]
    fn unparse_round_trips() {
        let texts = [
            "forall x. forall y. E(x,y) -> (S(x) | S(y))",
            "forall x. exists y. S(x) | (S(y) & E(x,y))",
            "exists X subset V. |X| <= 2 & forall y. member(y,X)",
            "forall e in E. forall x. inc(x, e) -> F(e)",
            "!(forall x. x != x) <-> (true & !false)",
            "forall c1 in C, c2 in C. |T[c1]| <= |T[c2]| + 1",
            "forall x. forall y. forall c in C. E(x,y) -> !(L(x,y,c) & T(x,c))",
            "!|~S| > 3 | 2 = |S|",
            "cycle(S) & comparability_minus(~F) & cocomparability(S)",
        ];
        for t in texts {
            let f = parse_formula(t).unwrap();
            let g = parse_formula(&f.unparse()).unwrap();
            assert_eq!(f, g, "{t} -> {}", f.unparse());
        }
    }
}
