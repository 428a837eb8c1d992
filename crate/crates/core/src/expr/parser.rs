//! Recursive-descent parser for the distribution expression language.
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := scalar | atom
//! atom   := "delta" ["'" | "^" int] "(" number ")"
//!         | "heaviside" "(" number ")"
//!         | "piece" "(" bound "," bound ":" poly ")"
//!         | "D" "(" expr ")"
//!         | "(" expr ")"
//! bound  := number | "inf" | "-inf"
//! poly   := ["-"] mono (("+" | "-") mono)*
//! mono   := coeff ["*" "x" ["^" int]] | "x" ["^" int]
//! ```
//!
//! A leading scalar factor scales the rest of the term; a bare scalar is a
//! constant function.

use crate::dist::Bound;
use crate::error::ParseError;
use crate::poly::Poly;
use crate::scalar::{parse_rational, Scalar};

use super::ast::DistExpr;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    /// Unsigned numeral, possibly `p/q`, a decimal, or carrying an `i` suffix.
    Num(String),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Num(s) => format!("number {s:?}"),
        Tok::Ident(s) => format!("identifier {s:?}"),
        Tok::Sym(c) => format!("{c:?}"),
        Tok::End => "end of input".to_string(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                i += 1;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
            }
            let imaginary = i < bytes.len()
                && bytes[i] == b'i'
                && !bytes.get(i + 1).is_some_and(|b| b.is_ascii_alphanumeric());
            if imaginary {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Num(text[start..i].to_string()),
                offset: start,
            });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(text[start..i].to_string()),
                offset: start,
            });
        } else if "()+-*^',:".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                offset: i,
            });
            i += 1;
        } else {
            let ch = text[i..].chars().next().unwrap_or('?');
            return Err(ParseError {
                offset: i,
                expected: vec!["token".to_string()],
                found: format!("{ch:?}"),
            });
        }
    }
    out.push(Token {
        tok: Tok::End,
        offset: text.len(),
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let idx = (self.pos + k).min(self.tokens.len() - 1);
        &self.tokens[idx].tok
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].offset
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.pos].tok.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: describe(self.peek()),
        })
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.error(&[&format!("'{c}'")])
        }
    }

    fn is_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == name)
    }

    fn expr(&mut self) -> Result<DistExpr, ParseError> {
        let mut terms = Vec::new();
        let first_negative = self.eat_sym('-');
        terms.push((first_negative, self.term()?));
        loop {
            let negative = match self.peek() {
                Tok::Sym('+') => false,
                Tok::Sym('-') => true,
                _ => break,
            };
            self.bump();
            terms.push((negative, self.term()?));
        }
        if terms.len() == 1 && !terms[0].0 {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(DistExpr::Sum(terms))
    }

    fn term(&mut self) -> Result<DistExpr, ParseError> {
        if self.starts_scalar() {
            let c = self.scalar()?;
            if self.eat_sym('*') {
                let rest = self.term()?;
                return Ok(DistExpr::Scale(c, Box::new(rest)));
            }
            return Ok(DistExpr::Const(c));
        }
        let mut acc = self.atom()?;
        while self.peek() == &Tok::Sym('*') {
            self.bump();
            let rhs = if self.starts_scalar() {
                DistExpr::Const(self.scalar()?)
            } else {
                self.atom()?
            };
            acc = DistExpr::Star(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn starts_scalar(&self) -> bool {
        matches!(self.peek(), Tok::Num(_)) || self.is_ident("i")
    }

    /// Unsigned real or imaginary scalar literal.
    fn scalar(&mut self) -> Result<Scalar, ParseError> {
        let offset = self.offset();
        match self.bump() {
            Tok::Num(s) => s.parse::<Scalar>().map_err(|_| ParseError {
                offset,
                expected: vec!["number".to_string()],
                found: format!("number {s:?}"),
            }),
            Tok::Ident(s) if s == "i" => Ok(Scalar::i()),
            _ => {
                self.pos -= 1;
                self.error(&["number"])
            }
        }
    }

    /// Signed real number.
    fn number(&mut self) -> Result<Scalar, ParseError> {
        let negative = self.eat_sym('-');
        if !matches!(self.peek(), Tok::Num(_)) {
            return self.error(&["number"]);
        }
        let v = self.scalar()?;
        Ok(if negative { -v } else { v })
    }

    fn small_int(&mut self) -> Result<u32, ParseError> {
        let offset = self.offset();
        if let Tok::Num(s) = self.peek().clone() {
            if let Ok(k) = s.parse::<u32>() {
                self.bump();
                return Ok(k);
            }
            return Err(ParseError {
                offset,
                expected: vec!["integer".to_string()],
                found: format!("number {s:?}"),
            });
        }
        self.error(&["integer"])
    }

    fn atom(&mut self) -> Result<DistExpr, ParseError> {
        let expected = ["delta", "heaviside", "piece", "D", "'('", "number"];
        match self.peek().clone() {
            Tok::Ident(name) if name == "delta" => {
                self.bump();
                let order = if self.eat_sym('\'') {
                    1
                } else if self.eat_sym('^') {
                    self.small_int()?
                } else {
                    0
                };
                self.expect_sym('(')?;
                let point = self.number()?;
                self.expect_sym(')')?;
                Ok(DistExpr::Delta { point, order })
            }
            Tok::Ident(name) if name == "heaviside" => {
                self.bump();
                self.expect_sym('(')?;
                let point = self.number()?;
                self.expect_sym(')')?;
                Ok(DistExpr::Heaviside(point))
            }
            Tok::Ident(name) if name == "piece" => {
                self.bump();
                self.expect_sym('(')?;
                let lo = self.bound()?;
                self.expect_sym(',')?;
                let hi = self.bound()?;
                self.expect_sym(':')?;
                let poly = self.poly()?;
                self.expect_sym(')')?;
                Ok(DistExpr::Piece { lo, hi, poly })
            }
            Tok::Ident(name) if name == "D" => {
                self.bump();
                self.expect_sym('(')?;
                let inner = self.expr()?;
                self.expect_sym(')')?;
                Ok(DistExpr::Derivative(Box::new(inner)))
            }
            Tok::Sym('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect_sym(')')?;
                Ok(inner)
            }
            _ => self.error(&expected),
        }
    }

    fn bound(&mut self) -> Result<Bound, ParseError> {
        let negative = self.eat_sym('-');
        if self.is_ident("inf") {
            self.bump();
            return Ok(if negative { Bound::NegInf } else { Bound::PosInf });
        }
        if !matches!(self.peek(), Tok::Num(_)) {
            return self.error(&["number", "inf"]);
        }
        let offset = self.offset();
        let v = self.scalar()?;
        let v = if negative { -v } else { v };
        match v.as_real() {
            Some(r) => Ok(Bound::Finite(r.clone())),
            None => Err(ParseError {
                offset,
                expected: vec!["real number".to_string()],
                found: format!("{v}"),
            }),
        }
    }

    fn poly(&mut self) -> Result<Poly, ParseError> {
        let mut acc = Poly::zero();
        let mut negative = self.eat_sym('-');
        loop {
            let m = self.mono()?;
            acc = if negative { &acc - &m } else { &acc + &m };
            negative = match self.peek() {
                Tok::Sym('+') => false,
                Tok::Sym('-') => true,
                _ => break,
            };
            self.bump();
        }
        Ok(acc)
    }

    fn mono(&mut self) -> Result<Poly, ParseError> {
        let coeff = if self.is_ident("x") {
            Scalar::one()
        } else if self.peek() == &Tok::Sym('(') {
            self.bump();
            let c = self.complex()?;
            self.expect_sym(')')?;
            c
        } else if self.starts_scalar() {
            self.scalar()?
        } else {
            return self.error(&["number", "'('", "x"]);
        };
        let has_var = if self.is_ident("x") {
            true
        } else if self.peek() == &Tok::Sym('*') && matches!(self.peek_at(1), Tok::Ident(s) if s == "x") {
            self.bump();
            true
        } else {
            false
        };
        if !has_var {
            return Ok(Poly::constant(coeff));
        }
        self.bump();
        let degree = if self.eat_sym('^') { self.small_int()? } else { 1 };
        Ok(Poly::monomial(coeff, degree as usize))
    }

    /// Complex literal inside parentheses, e.g. `1+2i` or `-1/2-i`.
    fn complex(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = Scalar::zero();
        let mut negative = self.eat_sym('-');
        loop {
            if !self.starts_scalar() {
                return self.error(&["number"]);
            }
            let v = self.scalar()?;
            acc = if negative { acc - v } else { acc + v };
            negative = match self.peek() {
                Tok::Sym('+') => false,
                Tok::Sym('-') => true,
                _ => break,
            };
            self.bump();
        }
        Ok(acc)
    }
}

pub fn parse_expr(text: &str) -> Result<DistExpr, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return p.error(&["'+'", "'-'", "'*'", "end of input"]);
    }
    Ok(e)
}

/// Parses a standalone polynomial such as `1-1/2*x^2`.
pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let poly = p.poly()?;
    if p.peek() != &Tok::End {
        return p.error(&["'+'", "'-'", "end of input"]);
    }
    Ok(poly)
}

/// Parses a signed rational, rejecting decimals and complex literals.
pub fn parse_exact_rational(text: &str) -> Option<crate::scalar::Rational> {
    if text.contains('.') {
        return None;
    }
    parse_rational(text).ok()
}
