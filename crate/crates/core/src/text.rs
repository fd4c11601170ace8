//! Text grammar for elements and operators.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' INT)?
//! atom  := INT | IDENT | 'D' | '(' expr ')'
//! ```
//!
//! Identifiers are single algebra symbols (`x`, `n`, `i`, `j`, `k`, `r`);
//! `D` is reserved for the endomorphism. Inside operators `*` is
//! composition and there is no juxtaposition. Canonical printing (the
//! `Display` impls of elements and [`Operator`]) produces text this grammar
//! reads back to the same value.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::algebras::{
    DifferenceAlgebra, GroupRingC5, Quaternion, QuaternionAlgebra, RationalDifferentialAlgebra,
    RationalFunction, Variable,
};
use crate::error::{Error, Result};
use crate::operator::{Operator, OperatorAlgebra};

const MAX_EXPONENT: u32 = 4096;

/// Algebras whose elements can be written in the expression grammar.
pub trait ElementSyntax: Algebra {
    /// `None` for identifiers this algebra does not know.
    fn identifier(&self, name: &str) -> Option<Result<Self::Elem>>;
}

fn wrong_variable<A: Algebra>(alg: &A, var: &str) -> Option<Result<A::Elem>> {
    Some(Err(alg.mismatch(format!("variable {var}"))))
}

impl ElementSyntax for RationalDifferentialAlgebra {
    fn identifier(&self, name: &str) -> Option<Result<RationalFunction>> {
        match name {
            "x" => Some(Ok(self.x())),
            "n" => wrong_variable(self, name),
            _ => None,
        }
    }
}

impl ElementSyntax for DifferenceAlgebra {
    fn identifier(&self, name: &str) -> Option<Result<RationalFunction>> {
        match name {
            "n" => Some(Ok(self.n())),
            "x" => wrong_variable(self, name),
            _ => None,
        }
    }
}

impl ElementSyntax for QuaternionAlgebra {
    fn identifier(&self, name: &str) -> Option<Result<Quaternion>> {
        match name {
            "x" => Some(Ok(Quaternion::scalar(RationalFunction::var(Variable::X)))),
            "i" => Some(Ok(Quaternion::i())),
            "j" => Some(Ok(Quaternion::j())),
            "k" => Some(Ok(Quaternion::k())),
            "n" => wrong_variable(self, name),
            _ => None,
        }
    }
}

impl ElementSyntax for GroupRingC5 {
    fn identifier(&self, name: &str) -> Option<Result<crate::algebras::GroupRingC5Element>> {
        match name {
            "r" => Some(Ok(self.r_pow(1))),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    D,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::D => "`D`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut idx = 0;
    while idx < chars.len() {
        let (pos, ch) = chars[idx];
        if ch.is_whitespace() {
            idx += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let start = idx;
            while idx < chars.len() && chars[idx].1.is_ascii_digit() {
                idx += 1;
            }
            let digits: String = chars[start..idx].iter().map(|c| c.1).collect();
            let n = digits.parse::<BigInt>().expect("ascii digits");
            out.push((Tok::Int(n), pos));
            continue;
        }
        if ch.is_alphabetic() || ch == '_' {
            let start = idx;
            while idx < chars.len() && (chars[idx].1.is_alphanumeric() || chars[idx].1 == '_') {
                idx += 1;
            }
            let word: String = chars[start..idx].iter().map(|c| c.1).collect();
            let tok = if word == "D" { Tok::D } else { Tok::Ident(word) };
            out.push((tok, pos));
            continue;
        }
        let tok = match ch {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(syntax(pos, format!("unexpected character `{ch}`"))),
        };
        out.push((tok, pos));
        idx += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

#[derive(Clone, Copy, Debug)]
enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug)]
enum Node {
    Int(BigInt),
    Ident(String),
    D,
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug)]
struct Expr {
    node: Node,
    pos: usize,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn parse_all(mut self) -> Result<Expr> {
        if *self.peek() == Tok::End {
            return Err(syntax(0, "expected an expression, found end of input"));
        }
        let e = self.expr()?;
        if *self.peek() != Tok::End {
            return Err(syntax(
                self.pos(),
                format!("expected an operator or end of input, found {}", self.peek().describe()),
            ));
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let (_, pos) = self.bump();
            let rhs = self.term()?;
            lhs = Expr {
                node: Node::Bin(op, Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            let (_, pos) = self.bump();
            let rhs = self.unary()?;
            lhs = Expr {
                node: Node::Bin(op, Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            let (_, pos) = self.bump();
            let inner = self.unary()?;
            return Ok(Expr {
                node: Node::Neg(Box::new(inner)),
                pos,
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let (_, pos) = self.bump();
        match self.bump() {
            (Tok::Int(n), epos) => {
                let e = u32::try_from(&n)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| syntax(epos, format!("exponent {n} is too large")))?;
                Ok(Expr {
                    node: Node::Pow(Box::new(base), e),
                    pos,
                })
            }
            (t, epos) => Err(syntax(
                epos,
                format!("expected a nonnegative integer exponent, found {}", t.describe()),
            )),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let (tok, pos) = self.bump();
        let node = match tok {
            Tok::Int(n) => Node::Int(n),
            Tok::Ident(s) => Node::Ident(s),
            Tok::D => Node::D,
            Tok::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => return Ok(inner),
                    (t, p) => return Err(syntax(p, format!("expected `)`, found {}", t.describe()))),
                }
            }
            t => {
                return Err(syntax(
                    pos,
                    format!("expected a number, symbol or `(`, found {}", t.describe()),
                ))
            }
        };
        Ok(Expr { node, pos })
    }
}

fn parse_tree(src: &str) -> Result<Expr> {
    Parser {
        toks: tokenize(src)?,
        at: 0,
    }
    .parse_all()
}

fn resolve<A: ElementSyntax>(alg: &A, name: &str, pos: usize) -> Result<A::Elem> {
    match alg.identifier(name) {
        Some(r) => r,
        None => Err(syntax(
            pos,
            format!("unknown symbol `{name}` for algebra {}", alg.tag()),
        )),
    }
}

fn eval_element<A: ElementSyntax>(alg: &A, e: &Expr) -> Result<A::Elem> {
    Ok(match &e.node {
        Node::Int(n) => alg.from_int(n),
        Node::Ident(s) => resolve(alg, s, e.pos)?,
        Node::D => return Err(syntax(e.pos, "`D` is not allowed in an element")),
        Node::Neg(inner) => alg.neg(&eval_element(alg, inner)?),
        Node::Pow(base, n) => {
            let b = eval_element(alg, base)?;
            (0..*n).fold(alg.one(), |acc, _| alg.mul(&acc, &b))
        }
        Node::Bin(op, l, r) => {
            let a = eval_element(alg, l)?;
            let b = eval_element(alg, r)?;
            match op {
                BinOp::Add => alg.add(&a, &b),
                BinOp::Sub => alg.sub(&a, &b),
                BinOp::Mul => alg.mul(&a, &b),
                BinOp::Div => {
                    let inv = alg
                        .try_invert(&b)
                        .map_err(|_| syntax(e.pos, format!("cannot divide by `{b}`: not a unit")))?;
                    alg.mul(&a, &inv)
                }
            }
        }
    })
}

fn eval_operator<A: ElementSyntax>(ring: &OperatorAlgebra<A>, e: &Expr) -> Result<Operator<A::Elem>> {
    let alg = ring.base();
    Ok(match &e.node {
        Node::Int(n) => ring.constant(alg.from_int(n)),
        Node::Ident(s) => ring.constant(resolve(alg, s, e.pos)?),
        Node::D => ring.d_pow(1),
        Node::Neg(inner) => ring.neg(&eval_operator(ring, inner)?)?,
        Node::Pow(base, n) => ring.pow(&eval_operator(ring, base)?, *n)?,
        Node::Bin(op, l, r) => {
            let a = eval_operator(ring, l)?;
            let b = eval_operator(ring, r)?;
            match op {
                BinOp::Add => ring.add(&a, &b)?,
                BinOp::Sub => ring.sub(&a, &b)?,
                BinOp::Mul => ring.compose(&a, &b)?,
                BinOp::Div => {
                    if !b.in_filtration(0) {
                        return Err(syntax(e.pos, "can only divide by an element, not by an operator"));
                    }
                    let divisor = ring.coeff_or_zero(&b, 0);
                    let inv = alg.try_invert(&divisor).map_err(|_| {
                        syntax(e.pos, format!("cannot divide by `{divisor}`: not a unit"))
                    })?;
                    ring.compose(&a, &ring.constant(inv))?
                }
            }
        }
    })
}

/// Parses one element, e.g. `x^3*i` or `r^2 + r^3`.
pub fn parse_element<A: ElementSyntax>(alg: &A, src: &str) -> Result<A::Elem> {
    eval_element(alg, &parse_tree(src)?)
}

/// Parses a comma-separated list of elements; syntax positions refer to
/// the whole input.
pub fn parse_element_list<A: ElementSyntax>(alg: &A, src: &str) -> Result<Vec<A::Elem>> {
    let mut offset = 0;
    src.split(',')
        .map(|piece| {
            let start = offset;
            offset += piece.len() + 1;
            parse_element(alg, piece).map_err(|e| match e {
                Error::Syntax { position, message } => Error::Syntax {
                    position: position + start,
                    message,
                },
                other => other,
            })
        })
        .collect()
}

/// Parses an operator, e.g. `D^2 - (3/x)*D + 3/x^2`.
pub fn parse_operator<A: ElementSyntax>(ring: &OperatorAlgebra<A>, src: &str) -> Result<Operator<A::Elem>> {
    eval_operator(ring, &parse_tree(src)?)
}

/// Machine-readable operator: coefficient strings indexed by power of `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub algebra: String,
    pub coeffs: Vec<String>,
}

impl OperatorJson {
    pub fn from_operator<E: std::fmt::Display>(op: &Operator<E>) -> Self {
        OperatorJson {
            algebra: op.tag().to_string(),
            coeffs: op.coeffs().iter().map(ToString::to_string).collect(),
        }
    }

    pub fn to_operator<A: ElementSyntax>(&self, ring: &OperatorAlgebra<A>) -> Result<Operator<A::Elem>> {
        let tag = ring.base().tag();
        if self.algebra != tag.as_str() {
            return Err(ring.base().mismatch(&self.algebra));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| parse_element(ring.base(), c))
            .collect::<Result<Vec<_>>>()?;
        ring.from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_literal() {
        let alg = QuaternionAlgebra::new();
        let e = parse_element(&alg, "x^3*i").unwrap();
        let x3 = RationalFunction::var(Variable::X).pow(3);
        assert_eq!(e, Quaternion::i().scale(&x3));
        assert_eq!(e.to_string(), "x^3*i");
    }

    #[test]
    fn group_ring_literal() {
        let alg = GroupRingC5::new();
        assert_eq!(parse_element(&alg, "r^2").unwrap(), alg.r_pow(2));
        assert_eq!(parse_element(&alg, "r^7").unwrap(), alg.r_pow(2));
        assert_eq!(parse_element(&alg, "1/r").unwrap(), alg.r_pow(4));
    }

    #[test]
    fn unit_outside_algebra_is_syntax_error() {
        let alg = RationalDifferentialAlgebra::new();
        assert!(matches!(parse_element(&alg, "i"), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_element(&alg, "n"), Err(Error::MixedAlgebras { .. })));
    }

    #[test]
    fn juxtaposition_is_rejected() {
        let alg = RationalDifferentialAlgebra::new();
        match parse_element(&alg, "2x") {
            Err(Error::Syntax { position, message }) => {
                assert_eq!(position, 1);
                assert!(message.contains("expected an operator"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_element(&alg, "").is_err());
        assert!(parse_element(&alg, "(x + 1").is_err());
        assert!(parse_element(&alg, "x^y").is_err());
        assert!(parse_element(&alg, "1/0").is_err());
        assert!(parse_element(&alg, "D").is_err());
    }

    #[test]
    fn precedence() {
        let alg = RationalDifferentialAlgebra::new();
        let x = alg.x();
        assert_eq!(parse_element(&alg, "-x^2").unwrap(), -&x.pow(2));
        assert_eq!(parse_element(&alg, "3/x^2").unwrap(), &alg.from_int(&3.into()) * &x.pow(2).inverse().unwrap());
        assert_eq!(parse_element(&alg, "1 - 2 - 3").unwrap(), alg.from_int(&(-4).into()));
        assert_eq!(parse_element(&alg, "12/4/3").unwrap(), alg.one());
    }

    #[test]
    fn operator_expressions() {
        let ring = OperatorAlgebra::new(RationalDifferentialAlgebra::new());
        let k = parse_operator(&ring, "D^2 - (3/x)*D + 3/x^2").unwrap();
        assert_eq!(k.to_string(), "D^2 - (3/x)*D + 3/x^2");
        assert!(parse_operator(&ring, "D*D - D^2").unwrap().is_zero());
        assert!(parse_operator(&ring, "x/D").is_err());
        let c5 = OperatorAlgebra::new(GroupRingC5::new());
        let l = parse_operator(&c5, "r*D^3 - 1").unwrap();
        assert_eq!(l.to_string(), "r*D^3 - 1");
        assert_eq!(l.degree(), Some(3));
    }

    #[test]
    fn element_list_positions() {
        let alg = GroupRingC5::new();
        assert_eq!(parse_element_list(&alg, "r, r^2").unwrap(), vec![alg.r_pow(1), alg.r_pow(2)]);
        match parse_element_list(&alg, "r,x") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_round_trip() {
        let ring = OperatorAlgebra::new(DifferenceAlgebra::with_int(1));
        let op = parse_operator(&ring, "D^2 - (2*(2*n + 3)/(n + 1))*D + 1/n").unwrap();
        let json = OperatorJson::from_operator(&op);
        assert_eq!(json.algebra, "diff(c=1)");
        assert_eq!(json.to_operator(&ring).unwrap(), op);
        let other = OperatorAlgebra::new(DifferenceAlgebra::with_int(2));
        assert!(json.to_operator(&other).is_err());
    }
}
