use std::fmt;

use crate::coeff::RingSpec;
use crate::error::{Error, Result};
use crate::freealg::{left_normed_commutator, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Parsed expression. Single-factor products and single positive sums are
/// collapsed, so `"[x1,x2]"` parses to a bare `Bracket`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A generator name and its position in the declared list.
    Generator {
        name: String,
        index: usize,
    },
    /// An integer or `a/b` literal, kept as written.
    Scalar(String),
    Product(Vec<Expr>),
    Sum(Vec<(Sign, Expr)>),
    /// Left-normed commutator, at least two entries.
    Bracket(Vec<Expr>),
}

impl Expr {
    pub fn generator(name: &str, index: usize) -> Expr {
        Expr::Generator {
            name: name.to_string(),
            index,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Generator { name, .. } => write!(f, "{name}"),
            Expr::Scalar(s) => write!(f, "{s}"),
            Expr::Product(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    match x {
                        Expr::Sum(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            Expr::Sum(ts) => {
                for (i, (s, t)) in ts.iter().enumerate() {
                    match (i, s) {
                        (0, Sign::Plus) => {}
                        (0, Sign::Minus) => write!(f, "-")?,
                        (_, Sign::Plus) => write!(f, " + ")?,
                        (_, Sign::Minus) => write!(f, " - ")?,
                    }
                    match t {
                        Expr::Sum(_) => write!(f, "({t})")?,
                        _ => write!(f, "{t}")?,
                    }
                }
                Ok(())
            }
            Expr::Bracket(es) => {
                write!(f, "[")?;
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    Slash,
    Star,
    Plus,
    Minus,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("name {s:?}"),
            Tok::Number(s) => format!("number {s}"),
            Tok::End => "end of input".into(),
            Tok::Slash => "'/'".into(),
            Tok::Star => "'*'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str, first_line: usize) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (first_line, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Ident(s),
                line: l,
                column: col,
            });
            continue;
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Number(s),
                line: l,
                column: col,
            });
            continue;
        } else {
            match c {
                '/' => Tok::Slash,
                '*' => Tok::Star,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                other => return Err(parse_error(l, col, format!("unexpected character {other:?}"))),
            }
        };
        chars.next();
        column += 1;
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Error {
        let t = self.peek();
        parse_error(
            t.line,
            t.column,
            format!("expected {wanted}, found {}", t.tok.describe()),
        )
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<()> {
        if self.peek().tok == tok {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut sign = match self.peek().tok {
            Tok::Plus => {
                self.next();
                Sign::Plus
            }
            Tok::Minus => {
                self.next();
                Sign::Minus
            }
            _ => Sign::Plus,
        };
        loop {
            terms.push((sign, self.term()?));
            sign = match self.peek().tok {
                Tok::Plus => Sign::Plus,
                Tok::Minus => Sign::Minus,
                _ => break,
            };
            self.next();
        }
        if terms.len() == 1 && terms[0].0 == Sign::Plus {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                }
                // juxtaposition only before an opening bracket or parenthesis
                Tok::LBracket | Tok::LParen => {}
                _ => break,
            }
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().expect("one factor"));
        }
        Ok(Expr::Product(factors))
    }

    fn factor(&mut self) -> Result<Expr> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Number(n) => {
                self.next();
                if self.peek().tok != Tok::Slash {
                    return Ok(Expr::Scalar(n));
                }
                self.next();
                match self.peek().tok.clone() {
                    Tok::Number(d) => {
                        self.next();
                        Ok(Expr::Scalar(format!("{n}/{d}")))
                    }
                    _ => Err(self.unexpected("a denominator")),
                }
            }
            Tok::Ident(name) => {
                self.next();
                let index = self
                    .names
                    .iter()
                    .position(|g| *g == name)
                    .ok_or_else(|| parse_error(t.line, t.column, format!("unknown generator {name:?}")))?;
                Ok(Expr::Generator { name, index })
            }
            Tok::LBracket => {
                self.next();
                let mut entries = vec![self.expr()?];
                while self.peek().tok == Tok::Comma {
                    self.next();
                    entries.push(self.expr()?);
                }
                if self.peek().tok == Tok::RBracket && entries.len() < 2 {
                    return Err(parse_error(t.line, t.column, "a bracket needs at least two entries"));
                }
                self.expect(Tok::RBracket, "',' or ']'")?;
                Ok(Expr::Bracket(entries))
            }
            Tok::LParen => {
                self.next();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => Err(self.unexpected("a generator, number, '[' or '('")),
        }
    }
}

fn parse_at(text: &str, generators: &[String], first_line: usize) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(text, first_line)?,
        pos: 0,
        names: generators,
    };
    let e = p.expr()?;
    if p.peek().tok != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

/// Parses one expression over the declared generator names.
///
/// Grammar: sums of `*`-separated factors, where a factor is a generator, an
/// integer or `a/b` literal, a bracket `[e1, ..., en]` (n >= 2), or a
/// parenthesised expression. A leading sign is allowed, and `*` may be
/// omitted before `[` or `(`.
pub fn parse_expr(text: &str, generators: &[String]) -> Result<Expr> {
    parse_at(text, generators, 1)
}

/// One expression per line; blank lines and `#` comments are skipped.
/// Error positions refer to lines of the whole text.
pub fn parse_expr_list(text: &str, generators: &[String]) -> Result<Vec<Expr>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_at(line, generators, i + 1)?);
    }
    Ok(out)
}

/// The polynomial denoted by `e`; brackets are left-normed commutators.
pub fn elaborate(e: &Expr, ring: RingSpec) -> Result<Poly> {
    match e {
        Expr::Generator { index, .. } => Ok(Poly::letter(ring, *index)),
        Expr::Scalar(s) => Ok(Poly::constant(ring.parse_scalar(s)?)),
        Expr::Product(fs) => {
            let mut acc = Poly::one(ring);
            for f in fs {
                acc = acc.mul(&elaborate(f, ring)?)?;
            }
            Ok(acc)
        }
        Expr::Sum(ts) => {
            let mut acc = Poly::zero(ring);
            for (s, t) in ts {
                let p = elaborate(t, ring)?;
                acc = match s {
                    Sign::Plus => acc.add(&p)?,
                    Sign::Minus => acc.sub(&p)?,
                };
            }
            Ok(acc)
        }
        Expr::Bracket(es) => {
            let args = es.iter().map(|x| elaborate(x, ring)).collect::<Result<Vec<_>>>()?;
            left_normed_commutator(&args)
        }
    }
}

/// `parse_expr` followed by `elaborate`.
pub fn parse_poly(text: &str, generators: &[String], ring: RingSpec) -> Result<Poly> {
    elaborate(&parse_expr(text, generators)?, ring)
}
