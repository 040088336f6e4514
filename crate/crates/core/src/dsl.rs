//! A small language for piecewise interval-valued maps on the real line.
//!
//! ```text
//! map    := clause (";" clause)* [";"]
//! clause := "if" pred "->" set | "otherwise" "->" set | set
//! set    := "[" expr "," expr "]" | "{" expr "}"
//! pred   := conj ("or" conj)*
//! conj   := neg ("and" neg)*
//! neg    := "not" neg | "(" pred ")" | expr cmp expr
//! cmp    := "==" | "!=" | "<" | "<=" | ">" | ">="
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | atom
//! atom   := number | "x" | ("min" | "max" | "abs") "(" expr ("," expr)* ")" | "(" expr ")"
//! ```
//!
//! Clauses are tried in order and the first matching guard wins; a bare
//! set is shorthand for `otherwise -> set`. Operators are left-associative
//! with the usual precedence, and comparisons are exact on `f64`, so
//! `x == 1` matches only the stored value `1.0`. `{e}` denotes the
//! degenerate interval `[e, e]`.
//!
//! ```
//! use weak_contraction::dsl::MapDef;
//!
//! let t: MapDef = "if x == 1 -> {1}; otherwise -> [x/3, x/2]".parse().unwrap();
//! assert_eq!(t.eval(0.9).unwrap().bounds(), Some((0.3, 0.45)));
//! assert_eq!(t.eval(1.0).unwrap().bounds(), Some((1.0, 1.0)));
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::contraction::MultiMap;
use crate::error::{Error, Result};
use crate::metric::{BoundedSet, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {column}: {message} (found {token:?})")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub token: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Min,
    Max,
    Abs,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var,
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Pred {
    Cmp(CmpOp, Expr, Expr),
    Not(Box<Pred>),
    And(Box<Pred>, Box<Pred>),
    Or(Box<Pred>, Box<Pred>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum SetExpr {
    Interval(Expr, Expr),
    Singleton(Expr),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Guard {
    If(Pred),
    Otherwise,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Clause {
    pub guard: Guard,
    pub image: SetExpr,
}

/// A parsed map definition.
#[derive(Debug, Clone, PartialEq)]
pub struct MapDef {
    pub clauses: Vec<Clause>,
}

// ---------------------------------------------------------------- lexing

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Sym(&'static str),
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    text: String,
    line: usize,
    column: usize,
}

const SYMBOLS: [&str; 17] = [
    "->", "==", "!=", "<=", ">=", "<", ">", "+", "-", "*", "/", "(", ")", "[", "]", "{", "}",
];

fn lex(src: &str) -> std::result::Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text: String = chars[start..i].iter().collect();
            let v = text.parse::<f64>().map_err(|_| ParseError {
                line,
                column: col,
                message: "malformed number".into(),
                token: text.clone(),
            })?;
            Tok::Num(v)
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c == ',' || c == ';' {
            i += 1;
            Tok::Sym(if c == ',' { "," } else { ";" })
        } else {
            let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
            match SYMBOLS.iter().find(|s| rest.starts_with(**s)) {
                Some(s) => {
                    i += s.len();
                    Tok::Sym(s)
                }
                None => {
                    return Err(ParseError {
                        line,
                        column: col,
                        message: "unexpected character".into(),
                        token: c.to_string(),
                    })
                }
            }
        };
        let text: String = chars[start..i].iter().collect();
        out.push(Token {
            tok,
            text,
            line,
            column: col,
        });
        col += i - start;
    }
    out.push(Token {
        tok: Tok::Eof,
        text: "end of input".into(),
        line,
        column: col,
    });
    Ok(out)
}

// --------------------------------------------------------------- parsing

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Token, message: impl Into<String>) -> ParseError {
        ParseError {
            line: t.line,
            column: t.column,
            message: message.into(),
            token: t.text.clone(),
        }
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(&self.peek().tok, Tok::Sym(x) if *x == s)
    }

    fn is_ident(&self, s: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(x) if x == s)
    }

    fn expect_sym(&mut self, s: &str) -> PResult<Token> {
        if self.is_sym(s) {
            Ok(self.bump())
        } else {
            Err(Self::error_at(self.peek(), format!("expected '{s}'")))
        }
    }

    fn map(&mut self) -> PResult<MapDef> {
        let mut clauses = Vec::new();
        let mut otherwise_at: Option<Token> = None;
        loop {
            let start = self.peek().clone();
            if let Some(prev) = &otherwise_at {
                return Err(Self::error_at(
                    &start,
                    format!(
                        "clause is unreachable after the catch-all clause at line {}, column {}",
                        prev.line, prev.column
                    ),
                ));
            }
            let clause = self.clause()?;
            if clause.guard == Guard::Otherwise {
                otherwise_at = Some(start);
            }
            clauses.push(clause);
            if self.is_sym(";") {
                self.bump();
                if matches!(self.peek().tok, Tok::Eof) {
                    break;
                }
            } else {
                break;
            }
        }
        if !matches!(self.peek().tok, Tok::Eof) {
            return Err(Self::error_at(self.peek(), "expected ';' or end of input"));
        }
        Ok(MapDef { clauses })
    }

    fn clause(&mut self) -> PResult<Clause> {
        if self.is_ident("if") {
            self.bump();
            let pred = self.pred()?;
            self.expect_sym("->")?;
            Ok(Clause {
                guard: Guard::If(pred),
                image: self.set()?,
            })
        } else if self.is_ident("otherwise") {
            self.bump();
            self.expect_sym("->")?;
            Ok(Clause {
                guard: Guard::Otherwise,
                image: self.set()?,
            })
        } else if self.is_sym("[") || self.is_sym("{") {
            Ok(Clause {
                guard: Guard::Otherwise,
                image: self.set()?,
            })
        } else {
            Err(Self::error_at(
                self.peek(),
                "expected 'if', 'otherwise' or a set expression",
            ))
        }
    }

    /// Parses a bracketed construct; an error hitting end of input is
    /// reported at the opening bracket.
    fn bracketed<T>(&mut self, close: &str, body: impl FnOnce(&mut Self) -> PResult<T>) -> PResult<T> {
        let open = self.bump();
        let result = body(self).and_then(|v| self.expect_sym(close).map(|_| v));
        result.map_err(|e| {
            if self
                .toks
                .last()
                .is_some_and(|t| t.line == e.line && t.column == e.column)
            {
                Self::error_at(&open, format!("unclosed '{}'", open.text))
            } else {
                e
            }
        })
    }

    fn set(&mut self) -> PResult<SetExpr> {
        if self.is_sym("[") {
            self.bracketed("]", |p| {
                let lo = p.expr()?;
                p.expect_sym(",")?;
                let hi = p.expr()?;
                Ok(SetExpr::Interval(lo, hi))
            })
        } else if self.is_sym("{") {
            self.bracketed("}", |p| Ok(SetExpr::Singleton(p.expr()?)))
        } else {
            Err(Self::error_at(self.peek(), "expected '[' or '{'"))
        }
    }

    fn pred(&mut self) -> PResult<Pred> {
        let mut lhs = self.conj()?;
        while self.is_ident("or") {
            self.bump();
            lhs = Pred::Or(Box::new(lhs), Box::new(self.conj()?));
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> PResult<Pred> {
        let mut lhs = self.neg()?;
        while self.is_ident("and") {
            self.bump();
            lhs = Pred::And(Box::new(lhs), Box::new(self.neg()?));
        }
        Ok(lhs)
    }

    fn neg(&mut self) -> PResult<Pred> {
        if self.is_ident("not") {
            self.bump();
            return Ok(Pred::Not(Box::new(self.neg()?)));
        }
        if self.is_sym("(") {
            // try a parenthesized predicate, fall back to a comparison whose
            // left operand starts with '('
            let save = self.pos;
            self.bump();
            if let Ok(p) = self.pred() {
                if self.is_sym(")") {
                    self.bump();
                    return Ok(p);
                }
            }
            self.pos = save;
        }
        let lhs = self.expr()?;
        let op = match &self.peek().tok {
            Tok::Sym("==") => CmpOp::Eq,
            Tok::Sym("!=") => CmpOp::Ne,
            Tok::Sym("<") => CmpOp::Lt,
            Tok::Sym("<=") => CmpOp::Le,
            Tok::Sym(">") => CmpOp::Gt,
            Tok::Sym(">=") => CmpOp::Ge,
            _ => return Err(Self::error_at(self.peek(), "expected a comparison operator")),
        };
        self.bump();
        Ok(Pred::Cmp(op, lhs, self.expr()?))
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.is_sym("+") {
                BinOp::Add
            } else if self.is_sym("-") {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            self.bump();
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.is_sym("*") {
                BinOp::Mul
            } else if self.is_sym("/") {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            self.bump();
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if self.is_sym("-") {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> PResult<Expr> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Num(v) => {
                self.bump();
                Ok(Expr::Num(*v))
            }
            Tok::Ident(name) if name == "x" => {
                self.bump();
                Ok(Expr::Var)
            }
            Tok::Ident(name) if matches!(name.as_str(), "min" | "max" | "abs") => {
                let func = match name.as_str() {
                    "min" => Func::Min,
                    "max" => Func::Max,
                    _ => Func::Abs,
                };
                self.bump();
                if !self.is_sym("(") {
                    return Err(Self::error_at(self.peek(), format!("expected '(' after '{name}'")));
                }
                let args = self.bracketed(")", |p| {
                    let mut args = vec![p.expr()?];
                    while p.is_sym(",") {
                        p.bump();
                        args.push(p.expr()?);
                    }
                    Ok(args)
                })?;
                if func == Func::Abs && args.len() != 1 {
                    return Err(Self::error_at(&t, "abs takes exactly one argument"));
                }
                Ok(Expr::Call(func, args))
            }
            Tok::Sym("(") => self.bracketed(")", |p| p.expr()),
            Tok::Ident(name) => Err(Self::error_at(&t, format!("unknown identifier '{name}'"))),
            _ => Err(Self::error_at(&t, "expected an expression")),
        }
    }
}

pub fn parse(text: &str) -> std::result::Result<MapDef, ParseError> {
    let toks = lex(text)?;
    Parser { toks, pos: 0 }.map()
}

impl FromStr for MapDef {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        parse(s)
    }
}

// ------------------------------------------------------------ evaluation

fn eval_err(x: f64, message: impl Into<String>) -> Error {
    Error::MapEval {
        x: x.to_string(),
        message: message.into(),
    }
}

impl Expr {
    pub fn eval(&self, x: f64) -> Result<f64> {
        let v = match self {
            Expr::Num(v) => *v,
            Expr::Var => x,
            Expr::Neg(e) => -e.eval(x)?,
            Expr::Bin(op, a, b) => {
                let (a, b) = (a.eval(x)?, b.eval(x)?);
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => {
                        if b == 0.0 {
                            return Err(eval_err(x, "division by zero"));
                        }
                        a / b
                    }
                }
            }
            Expr::Call(func, args) => {
                let vals = args.iter().map(|a| a.eval(x)).collect::<Result<Vec<_>>>()?;
                match func {
                    Func::Min => vals.into_iter().fold(f64::INFINITY, f64::min),
                    Func::Max => vals.into_iter().fold(f64::NEG_INFINITY, f64::max),
                    Func::Abs => vals[0].abs(),
                }
            }
        };
        if !v.is_finite() {
            return Err(eval_err(x, "expression is not finite"));
        }
        Ok(v)
    }
}

impl Pred {
    pub fn eval(&self, x: f64) -> Result<bool> {
        Ok(match self {
            Pred::Cmp(op, a, b) => {
                let (a, b) = (a.eval(x)?, b.eval(x)?);
                match op {
                    CmpOp::Eq => a == b,
                    CmpOp::Ne => a != b,
                    CmpOp::Lt => a < b,
                    CmpOp::Le => a <= b,
                    CmpOp::Gt => a > b,
                    CmpOp::Ge => a >= b,
                }
            }
            Pred::Not(p) => !p.eval(x)?,
            Pred::And(a, b) => a.eval(x)? && b.eval(x)?,
            Pred::Or(a, b) => a.eval(x)? || b.eval(x)?,
        })
    }
}

impl MapDef {
    /// Image of `x` under the first clause whose guard holds.
    pub fn eval(&self, x: f64) -> Result<BoundedSet> {
        for clause in &self.clauses {
            let hit = match &clause.guard {
                Guard::Otherwise => true,
                Guard::If(p) => p.eval(x)?,
            };
            if !hit {
                continue;
            }
            let (lo, hi) = match &clause.image {
                SetExpr::Interval(a, b) => (a.eval(x)?, b.eval(x)?),
                SetExpr::Singleton(e) => {
                    let v = e.eval(x)?;
                    (v, v)
                }
            };
            if lo > hi {
                return Err(eval_err(
                    x,
                    format!("definition error: interval [{lo}, {hi}] has lo > hi"),
                ));
            }
            return BoundedSet::interval(lo, hi);
        }
        Err(eval_err(x, "no clause matches"))
    }

    /// Evaluates the map at `n` evenly spaced points of `[lo, hi]`,
    /// reporting the first point without a valid image.
    pub fn check_domain(&self, lo: f64, hi: f64, n: usize) -> Result<()> {
        crate::contraction::linspace(lo, hi, n.max(2))
            .into_iter()
            .try_for_each(|x| self.eval(x).map(|_| ()))
    }
}

/// Evaluates `def` at `x`.
pub fn eval_map(def: &MapDef, x: f64) -> Result<BoundedSet> {
    def.eval(x)
}

impl MultiMap for MapDef {
    fn image(&self, p: &Point) -> Result<BoundedSet> {
        let x = p
            .as_real()
            .ok_or_else(|| Error::invalid(format!("map definitions act on the real line, got {p}")))?;
        self.eval(x)
    }
}

// -------------------------------------------------------------- printing

fn expr_prec(e: &Expr) -> u8 {
    match e {
        Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
        Expr::Bin(BinOp::Mul | BinOp::Div, ..) => 2,
        Expr::Neg(_) => 3,
        _ => 4,
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) => write!(f, "{v}"),
            Expr::Var => write!(f, "x"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                write_operand(f, e, expr_prec(e) < 3)
            }
            Expr::Bin(op, a, b) => {
                let p = expr_prec(self);
                write_operand(f, a, expr_prec(a) < p)?;
                let sym = match op {
                    BinOp::Add => " + ",
                    BinOp::Sub => " - ",
                    BinOp::Mul => " * ",
                    BinOp::Div => " / ",
                };
                write!(f, "{sym}")?;
                write_operand(f, b, expr_prec(b) <= p)
            }
            Expr::Call(func, args) => {
                let name = match func {
                    Func::Min => "min",
                    Func::Max => "max",
                    Func::Abs => "abs",
                };
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn pred_prec(p: &Pred) -> u8 {
    match p {
        Pred::Or(..) => 1,
        Pred::And(..) => 2,
        Pred::Not(_) => 3,
        Pred::Cmp(..) => 4,
    }
}

fn write_pred_operand(f: &mut fmt::Formatter<'_>, p: &Pred, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({p})")
    } else {
        write!(f, "{p}")
    }
}

impl fmt::Display for Pred {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pred::Cmp(op, a, b) => {
                let sym = match op {
                    CmpOp::Eq => "==",
                    CmpOp::Ne => "!=",
                    CmpOp::Lt => "<",
                    CmpOp::Le => "<=",
                    CmpOp::Gt => ">",
                    CmpOp::Ge => ">=",
                };
                write!(f, "{a} {sym} {b}")
            }
            Pred::Not(p) => {
                write!(f, "not ")?;
                write_pred_operand(f, p, pred_prec(p) < 3)
            }
            Pred::And(a, b) | Pred::Or(a, b) => {
                let prec = pred_prec(self);
                write_pred_operand(f, a, pred_prec(a) < prec)?;
                write!(f, "{}", if prec == 1 { " or " } else { " and " })?;
                write_pred_operand(f, b, pred_prec(b) <= prec)
            }
        }
    }
}

impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetExpr::Interval(a, b) => write!(f, "[{a}, {b}]"),
            SetExpr::Singleton(e) => write!(f, "{{{e}}}"),
        }
    }
}

impl fmt::Display for MapDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            match &c.guard {
                Guard::If(p) => write!(f, "if {p} -> {}", c.image)?,
                Guard::Otherwise => write!(f, "otherwise -> {}", c.image)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EX1_T: &str = "otherwise -> [x/4, x/2]";
    const EX1_S: &str = "otherwise -> [0, x/5]";
    const EX2: &str = "if x == 1 -> {1}; otherwise -> [x/3, x/2]";

    #[test]
    fn parses_example_maps() {
        let t = parse(EX1_T).unwrap();
        assert_eq!(t.clauses.len(), 1);
        assert_eq!(t.clauses[0].guard, Guard::Otherwise);
        let t2 = parse(EX2).unwrap();
        assert_eq!(t2.clauses.len(), 2);
        assert!(matches!(t2.clauses[0].guard, Guard::If(Pred::Cmp(CmpOp::Eq, Expr::Var, Expr::Num(v))) if v == 1.0));
    }

    #[test]
    fn unclosed_bracket_is_reported_at_the_bracket() {
        let e = parse("[x/4,").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        assert!(e.message.contains("unclosed"), "{e}");
        let e = parse("otherwise -> [x/4,").unwrap_err();
        assert_eq!((e.line, e.column), (1, 14));
        let e = parse("otherwise -> {min(x, 2}").unwrap_err();
        assert_eq!(e.token, "}");
    }

    #[test]
    fn positioned_errors() {
        let e = parse("if x = 1 -> {1}").unwrap_err();
        assert_eq!((e.line, e.column), (1, 6));
        let e = parse("if x == 1 -> {1};\notherwise -> [x/3 x/2]").unwrap_err();
        assert_eq!((e.line, e.column, e.token.as_str()), (2, 19, "x"));
        let e = parse("otherwise -> [y, 1]").unwrap_err();
        assert!(e.message.contains("unknown identifier"));
        let e = parse("otherwise -> [0, 1]; if x > 0 -> {x}").unwrap_err();
        assert!(e.message.contains("unreachable"));
        assert!(parse("").is_err());
        assert!(parse("otherwise -> [0, 1] extra").is_err());
        assert!(parse("otherwise -> [abs(x, 1), 1]").is_err());
        assert!(parse("otherwise -> [0 $ 1, 1]").is_err());
    }

    #[test]
    fn eval_examples() {
        let t2 = parse(EX2).unwrap();
        let at_one = t2.eval(1.0).unwrap();
        assert_eq!(at_one.as_singleton(), Some(Point::real(1.0)));
        assert_eq!(at_one.to_string(), "{1}");
        assert_eq!(
            t2.eval(0.6).unwrap(),
            BoundedSet::interval(0.6 / 3.0, 0.6 / 2.0).unwrap()
        );
        assert!((t2.eval(0.6).unwrap().bounds().unwrap().0 - 0.2).abs() < 1e-15);
        let s1 = parse(EX1_S).unwrap();
        assert_eq!(s1.eval(0.0).unwrap(), BoundedSet::interval(0.0, 0.0).unwrap());
    }

    #[test]
    fn eval_errors_carry_x() {
        let d = parse("otherwise -> [1/(x - 0.5), 2]").unwrap();
        assert!(matches!(d.eval(0.5), Err(Error::MapEval { ref x, .. }) if x == "0.5"));
        let d = parse("otherwise -> [x, x - 1]").unwrap();
        let e = d.eval(0.3).unwrap_err();
        assert!(e.to_string().contains("definition error"), "{e}");
        let d = parse("if x < 0.5 -> [0, x]").unwrap();
        assert!(d.eval(0.7).unwrap_err().to_string().contains("no clause matches"));
        assert!(d.check_domain(0.0, 1.0, 11).is_err());
        assert!(parse(EX2).unwrap().check_domain(0.0, 1.0, 101).is_ok());
    }

    #[test]
    fn exact_guard_comparison() {
        let t2 = parse(EX2).unwrap();
        let below = 1.0 - f64::EPSILON;
        assert_eq!(t2.eval(below).unwrap().bounds(), Some((below / 3.0, below / 2.0)));
        assert_eq!(t2.eval(1.0).unwrap().bounds(), Some((1.0, 1.0)));
    }

    #[test]
    fn precedence_and_associativity() {
        let d = parse("otherwise -> {10 - 4 - 3}").unwrap();
        assert_eq!(d.eval(0.0).unwrap().bounds(), Some((3.0, 3.0)));
        let d = parse("otherwise -> {2 + 3 * x / 2}").unwrap();
        assert_eq!(d.eval(2.0).unwrap().bounds(), Some((5.0, 5.0)));
        let d = parse("otherwise -> {-x * 2 + max(x, 1, 3) - min(abs(-x), 0.5)}").unwrap();
        assert_eq!(d.eval(2.0).unwrap().bounds(), Some((-1.5, -1.5)));
        let d = parse("if (x + 1) * 2 > 3 and not x > 5 or x == -1 -> {1}; otherwise -> {0}").unwrap();
        assert_eq!(d.eval(1.0).unwrap().bounds(), Some((1.0, 1.0)));
        assert_eq!(d.eval(6.0).unwrap().bounds(), Some((0.0, 0.0)));
        assert_eq!(d.eval(-1.0).unwrap().bounds(), Some((1.0, 1.0)));
        let d = parse("if (x < 0 or x > 2) and x != 3 -> {1}; otherwise -> {0}").unwrap();
        assert_eq!(d.eval(3.0).unwrap().bounds(), Some((0.0, 0.0)));
        assert_eq!(d.eval(4.0).unwrap().bounds(), Some((1.0, 1.0)));
    }

    #[test]
    fn print_round_trip() {
        for src in [
            EX1_T,
            EX1_S,
            EX2,
            "[x/4, x/2]",
            "if (x < 0 or x > 2) and not (x == 3 and x != 4) -> {x - (1 - x)}; otherwise -> [-(x + 1), 2 / (3 * x + 1)]",
            "otherwise -> {x / (2 / 3) - -x + 1e-7 * 2.5E3}",
        ] {
            let a = parse(src).unwrap();
            let printed = a.to_string();
            let b = parse(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
            assert_eq!(a, b, "{printed}");
            assert_eq!(printed, b.to_string());
        }
    }
}
