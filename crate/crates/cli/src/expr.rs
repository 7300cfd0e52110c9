//! The expression language: tokens, AST, a recursive-descent parser that
//! checks grades as it builds, and the canonical printer.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('^' | '*') factor)*
//! factor := '-' factor | literal | ident | call | '(' expr ')'
//! call   := name '(' expr (',' expr)* ')'
//! ```

use std::fmt;

use gwistor::frame::FORM_NAMES;
use gwistor::scalar::parse_rational;
use gwistor::{NamedFormCatalog, Scalar};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Func {
    Star,
    D,
    Delta,
    Ip,
    NablaG,
    NablaCh,
    Inner,
}

impl Func {
    pub const ALL: [Func; 7] = [Func::Star, Func::D, Func::Delta, Func::Ip, Func::NablaG, Func::NablaCh, Func::Inner];

    pub fn name(self) -> &'static str {
        match self {
            Func::Star => "star",
            Func::D => "d",
            Func::Delta => "delta",
            Func::Ip => "ip",
            Func::NablaG => "nabla_g",
            Func::NablaCh => "nabla_ch",
            Func::Inner => "inner",
        }
    }

    fn from_name(s: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == s)
    }

    fn arity(self) -> usize {
        match self {
            Func::Star | Func::D | Func::Delta => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Scalar),
    /// A catalog form, a covector `e0..e6`, or `k`.
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Wedge(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

/// Static grade of a checked expression; `Mixed` for sums of different grades.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Grade {
    Known(usize),
    Mixed,
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grade::Known(p) => write!(f, "{p}"),
            Grade::Mixed => write!(f, "mixed"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown identifier `{name}` at {line}:{col}")]
    UnknownIdent { line: usize, col: usize, name: String },
    #[error("grade mismatch at {line}:{col}: {msg}")]
    Grade { line: usize, col: usize, msg: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let (l0, c0) = (line, col);
        if ch == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if ch.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let start = i;
        if ch.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Token { tok: Tok::Num(chars[start..i].iter().collect()), line: l0, col: c0 });
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line: l0, col: c0 });
        } else if "+-^*/(),".contains(ch) {
            i += 1;
            out.push(Token { tok: Tok::Sym(ch), line: l0, col: c0 });
        } else {
            return Err(ParseError::Syntax { line, col, msg: format!("unexpected character `{ch}`") });
        }
        col += i - start;
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

/// Grade of a known identifier.
pub fn ident_grade(name: &str) -> Option<usize> {
    if name == "k" {
        return Some(0);
    }
    if let Some(i) = name.strip_prefix('e').and_then(|d| d.parse::<usize>().ok()) {
        return (i < 7 && name.len() == 2).then_some(1);
    }
    if FORM_NAMES.contains(&name) {
        return NamedFormCatalog::new().get(name).ok().and_then(|f| f.grade());
    }
    None
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type Typed = (Expr, Grade);

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

    fn syntax(t: &Token, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { line: t.line, col: t.col, msg: msg.into() }
    }

    fn grade_err(t: &Token, msg: impl Into<String>) -> ParseError {
        ParseError::Grade { line: t.line, col: t.col, msg: msg.into() }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        let t = self.bump();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            Err(Parser::syntax(&t, format!("expected `{c}`, found {}", describe(&t.tok))))
        }
    }

    fn expr(&mut self) -> Result<Typed, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().tok {
                Tok::Sym('+') => '+',
                Tok::Sym('-') => '-',
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let g = if lhs.1 == rhs.1 { lhs.1 } else { Grade::Mixed };
            let (a, b) = (Box::new(lhs.0), Box::new(rhs.0));
            lhs = (if op == '+' { Expr::Add(a, b) } else { Expr::Sub(a, b) }, g);
        }
    }

    fn term(&mut self) -> Result<Typed, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek().tok {
                Tok::Sym('^') => '^',
                Tok::Sym('*') => '*',
                _ => return Ok(lhs),
            };
            let at = self.bump();
            let rhs = self.factor()?;
            let g = match (lhs.1, rhs.1) {
                (Grade::Known(p), Grade::Known(q)) => Grade::Known(p + q),
                _ => Grade::Mixed,
            };
            if op == '*' && lhs.1 != Grade::Known(0) && rhs.1 != Grade::Known(0) {
                return Err(Parser::grade_err(
                    &at,
                    format!("`*` needs a scalar operand, found grades {} and {}; use `^` for the wedge", lhs.1, rhs.1),
                ));
            }
            let (a, b) = (Box::new(lhs.0), Box::new(rhs.0));
            lhs = (if op == '^' { Expr::Wedge(a, b) } else { Expr::Mul(a, b) }, g);
        }
    }

    fn factor(&mut self) -> Result<Typed, ParseError> {
        let t = self.bump();
        match t.tok.clone() {
            Tok::Sym('-') => {
                let (e, g) = self.factor()?;
                Ok((Expr::Neg(Box::new(e)), g))
            }
            Tok::Sym('(') => {
                let inner = self.expr()?;
                self.expect_sym(')')?;
                Ok(inner)
            }
            Tok::Num(n) => {
                let mut text = n;
                if self.peek().tok == Tok::Sym('/') {
                    self.bump();
                    let d = self.bump();
                    match d.tok.clone() {
                        Tok::Num(dn) => text = format!("{text}/{dn}"),
                        other => return Err(Parser::syntax(&d, format!("expected a denominator, found {}", describe(&other)))),
                    }
                }
                let q = parse_rational(&text).map_err(|e| Parser::syntax(&t, e.to_string()))?;
                Ok((Expr::Num(Scalar::from_rational(q)), Grade::Known(0)))
            }
            Tok::Ident(name) => {
                if self.peek().tok == Tok::Sym('(') {
                    let f = Func::from_name(&name).ok_or_else(|| ParseError::UnknownIdent {
                        line: t.line,
                        col: t.col,
                        name: name.clone(),
                    })?;
                    self.bump();
                    let mut args = vec![self.expr()?];
                    while self.peek().tok == Tok::Sym(',') {
                        self.bump();
                        args.push(self.expr()?);
                    }
                    self.expect_sym(')')?;
                    self.call(&t, f, args)
                } else {
                    let g = ident_grade(&name).ok_or_else(|| ParseError::UnknownIdent {
                        line: t.line,
                        col: t.col,
                        name: name.clone(),
                    })?;
                    Ok((Expr::Ident(name), Grade::Known(g)))
                }
            }
            other => Err(Parser::syntax(&t, format!("unexpected {}", describe(&other)))),
        }
    }

    fn call(&self, at: &Token, f: Func, args: Vec<Typed>) -> Result<Typed, ParseError> {
        if args.len() != f.arity() {
            return Err(Parser::syntax(
                at,
                format!("`{}` takes {} argument(s), found {}", f.name(), f.arity(), args.len()),
            ));
        }
        let need_vector = |g: Grade| {
            if g == Grade::Known(1) {
                Ok(())
            } else {
                Err(Parser::grade_err(at, format!("`{}` needs a 1-form direction, found grade {g}", f.name())))
            }
        };
        let last = args.last().expect("arity ≥ 1").1;
        let g = match f {
            Func::Star => match last {
                Grade::Known(p) if p <= 7 => Grade::Known(7 - p),
                g => g,
            },
            Func::D => match last {
                Grade::Known(p) => Grade::Known(p + 1),
                g => g,
            },
            Func::Delta => match last {
                Grade::Known(0) => return Err(Parser::grade_err(at, "`delta` needs grade at least 1")),
                Grade::Known(p) => Grade::Known(p - 1),
                g => g,
            },
            Func::Ip => {
                need_vector(args[0].1)?;
                match last {
                    Grade::Known(0) => return Err(Parser::grade_err(at, "`ip` needs a form of grade at least 1")),
                    Grade::Known(p) => Grade::Known(p - 1),
                    g => g,
                }
            }
            Func::NablaG | Func::NablaCh => {
                need_vector(args[0].1)?;
                last
            }
            Func::Inner => Grade::Known(0),
        };
        Ok((Expr::Call(f, args.into_iter().map(|a| a.0).collect()), g))
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

/// Parses and grade-checks an expression.
pub fn parse(input: &str) -> Result<(Expr, Grade), ParseError> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let out = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return Err(Parser::syntax(&t, format!("unexpected {}", describe(&t.tok))));
    }
    Ok(out)
}

/// Canonical, fully parenthesized printing; reparses to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write!(f, "{q}"),
            Expr::Ident(s) => write!(f, "{s}"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Wedge(a, b) => write!(f, "({a} ^ {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
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
