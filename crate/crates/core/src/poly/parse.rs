//! Recursive-descent parser for the polynomial text format.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | identifier | '(' expr ')'
//! ```
//!
//! Whitespace is ignored between tokens. Exponents are positive integers;
//! `/` is only allowed between integer literals.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::polynomial::Polynomial;
use super::rational::Q;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '/' => out.push((start, Tok::Slash)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(v)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'.')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.at += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.at += 1;
            match self.peek().cloned() {
                Some(Tok::Int(e)) => {
                    let e: u32 = match u32::try_from(&e) {
                        Ok(e) if e > 0 => e,
                        _ => return self.err("exponent must be a positive integer"),
                    };
                    self.at += 1;
                    Ok(base.pow(e))
                }
                _ => self.err("expected exponent after `^`"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                let mut value = BigRational::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.at += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if d != BigInt::from(0) => {
                            self.at += 1;
                            value /= BigRational::from_integer(d);
                        }
                        Some(Tok::Int(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected integer denominator after `/`"),
                    }
                }
                Ok(Polynomial::constant(self.ring, Q::from_big(value)))
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => {
                    self.at += 1;
                    Ok(Polynomial::var(self.ring, i))
                }
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` in `ring`; see the module docs for the grammar.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        ring,
    };
    let poly = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input (missing `*` or operator?)");
    }
    Ok(poly)
}
