//! Parser for polynomial expressions.
//!
//! Accepts the canonical output grammar (`-1/12*x^2 + 1/45`) and, more
//! generally, sums, products, parenthesised factors, integer powers and
//! division by constants, so factored forms such as
//! `-q^3*(1-q)^3*(1+q)*alpha_0^3` can be read directly.

use super::multipoly::MultiPoly;
use super::symbol::Symbol;
use crate::error::{Error, Result};
use crate::rational::{Integer, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(Integer),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token::Num(src[start..i].parse()?));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Token::Ident(src[start..i].to_string()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    // expr := ['-'|'+'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor (('*'|'/') factor)*
    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let d = self.factor()?;
                    acc = acc
                        .div_exact(&d)
                        .map_err(|_| Error::Parse(format!("division by `{d}` is not exact")))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // factor := atom ['^' ['-'] integer]
    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let exp = match self.next() {
            Some(Token::Num(n)) => n
                .to_i64()
                .and_then(|v| i32::try_from(v).ok())
                .ok_or_else(|| Error::Parse("exponent too large".into()))?,
            got => return Err(Error::Parse(format!("expected exponent, found {got:?}"))),
        };
        base.pow_laurent(if negative { -exp } else { exp })
            .map_err(|e| Error::Parse(e.to_string()))
    }

    // atom := integer | symbol | '(' expr ')' | '-' atom
    fn atom(&mut self) -> Result<MultiPoly> {
        match self.next() {
            Some(Token::Num(n)) => Ok(MultiPoly::constant(Rational::from_integer(&n))),
            Some(Token::Ident(name)) => Ok(MultiPoly::var(name.parse::<Symbol>()?)),
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Some(Token::Minus) => Ok(self.atom()?.neg()),
            got => Err(Error::Parse(format!("unexpected token {got:?}"))),
        }
    }
}

/// Parses a polynomial expression.
pub fn parse_poly(src: &str) -> Result<MultiPoly> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            p.tokens[p.pos]
        )));
    }
    Ok(e)
}

impl std::str::FromStr for MultiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}
