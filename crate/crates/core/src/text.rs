//! Surface syntax for superpolynomials: a recursive-descent parser and the
//! canonical printer it inverts.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/')? factor)*
//! factor := '-' factor | atom ('^' nat)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Division is allowed by nonzero constants only, so `3/2*x` reads as a
//! rational coefficient.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::engine::poly::Poly;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::odd::OddMask;
use crate::ring::{Ring, Variable};
use crate::scalar::Scalar;
use crate::superpoly::SuperPoly;

const MAX_EXPONENT: u32 = 10_000;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str, line0: usize, col0: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (line0, col0);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let start = (line, col);
        let tok = if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let s: String = chars[i..j].iter().collect();
            col += j - i;
            i = j;
            Tok::Num(s.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            let s: String = chars[i..j].iter().collect();
            col += j - i;
            i = j;
            Tok::Ident(s)
        } else {
            let t = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                other => {
                    return Err(Error::syntax(
                        line,
                        col,
                        format!("unexpected character `{other}`"),
                    ))
                }
            };
            col += 1;
            i += 1;
            t
        };
        out.push(Token {
            tok,
            line: start.0,
            col: start.1,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
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

    fn err<T>(&self, t: &Token, msg: impl Into<String>) -> Result<T> {
        Err(Error::syntax(t.line, t.col, msg))
    }

    fn expr(&mut self) -> Result<SuperPoly> {
        let mut acc = match self.peek().tok {
            Tok::Minus => {
                self.bump();
                self.term()?.neg()
            }
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SuperPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.peek().clone();
                    let d = self.factor()?;
                    if !d.is_body_only() || !d.body().is_constant() || d.is_zero() {
                        return self.err(&at, "division is only by nonzero constants");
                    }
                    let c = d.leading_coeff().expect("nonzero").inv();
                    acc = acc.scale(&c);
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<SuperPoly> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            let t = self.bump();
            let e = match &t.tok {
                Tok::Num(n) => match u32::try_from(n.clone()) {
                    Ok(e) if e <= MAX_EXPONENT => e,
                    _ => return self.err(&t, "exponent too large"),
                },
                _ => return self.err(&t, "expected a non-negative integer exponent"),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<SuperPoly> {
        let t = self.bump();
        let r = self.ring;
        match &t.tok {
            Tok::Num(n) => {
                let q = BigRational::from_integer(n.clone());
                let c = r.field().from_rational(&q).map_err(|_| {
                    Error::syntax(t.line, t.col, "number not representable in the field")
                })?;
                Ok(r.scalar(c))
            }
            Tok::Ident(name) => match r.var_index(name) {
                Some(Variable::Even(i)) => Ok(r.x(i)),
                Some(Variable::Odd(i)) => Ok(r.theta(i)),
                None => Err(Error::UnknownVariable {
                    name: name.clone(),
                    line: t.line,
                    column: t.col,
                }),
            },
            Tok::LParen => {
                let e = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return self.err(&close, "expected `)`");
                }
                Ok(e)
            }
            Tok::End => self.err(&t, "unexpected end of input"),
            other => self.err(&t, format!("unexpected token {}", describe(other))),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::End => "end of input".into(),
    }
}

/// Parses one expression in the ambient of `ring`; positions in errors
/// start from `(line, col)`.
pub fn parse_expr_at(text: &str, ring: &Ring, line: usize, col: usize) -> Result<SuperPoly> {
    let mut p = Parser {
        toks: lex(text, line, col)?,
        pos: 0,
        ring,
    };
    let e = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::End {
        return p.err(&t, format!("unexpected token {}", describe(&t.tok)));
    }
    Ok(e)
}

pub fn parse_expr(text: &str, ring: &Ring) -> Result<SuperPoly> {
    parse_expr_at(text, ring, 1, 1)
}

/// Parses a comma-separated list of expressions (possibly empty).
pub fn parse_expr_list_at(
    text: &str,
    ring: &Ring,
    line: usize,
    col: usize,
) -> Result<Vec<SuperPoly>> {
    let mut p = Parser {
        toks: lex(text, line, col)?,
        pos: 0,
        ring,
    };
    let mut out = Vec::new();
    if p.peek().tok == Tok::End {
        return Ok(out);
    }
    loop {
        out.push(p.expr()?);
        let t = p.bump();
        match t.tok {
            Tok::Comma => continue,
            Tok::End => return Ok(out),
            ref other => return p.err(&t, format!("expected `,` but found {}", describe(other))),
        }
    }
}

fn format_terms<'a>(
    terms: impl Iterator<Item = (&'a Scalar, &'a Monomial, OddMask)>,
    even_names: &[String],
    odd_names: &[String],
) -> String {
    let mut out = String::new();
    for (k, (c, m, odd)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = if neg { c.neg() } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        for (i, &e) in m.exps().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(even_names[i].clone()),
                _ => factors.push(format!("{}^{e}", even_names[i])),
            }
        }
        for i in odd.indices() {
            factors.push(odd_names[i - 1].clone());
        }
        if factors.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text of a superpolynomial, readable back by [`parse_expr`].
pub fn format_superpoly(f: &SuperPoly, ring: &Ring) -> String {
    format_terms(
        f.terms().iter().map(|t| (&t.coeff, &t.even, t.odd)),
        ring.even_names(),
        ring.odd_names(),
    )
}

/// Canonical text of a commutative polynomial over the given names.
pub fn format_poly(p: &Poly, names: &[String]) -> String {
    format_terms(
        p.terms().iter().map(|(m, c)| (c, m, OddMask::EMPTY)),
        names,
        &[],
    )
}

pub fn format_scalar(c: &Scalar) -> String {
    c.to_string()
}

/// Checks a candidate variable name.
pub fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    match cs.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses a rational or integer literal such as `-3/2`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let q = match body.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                return None;
            }
            BigRational::new(a, b)
        }
        None => BigRational::from_integer(body.trim().parse().ok()?),
    };
    Some(if neg { -q } else { q })
}
