//! Recursive-descent parser for the canonical polynomial text format:
//! sums of `*`-joined factors, `^` powers, parenthesized subexpressions,
//! integer or `p/q` rational literals, and variable names from the ring.

use num_bigint::BigInt;

use super::{Polynomial, PolyError, VarSet};
use crate::rat::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Token>, PolyError> {
    let mut out = Vec::new();
    let mut it = src.chars().peekable();
    while let Some(&ch) = it.peek() {
        match ch {
            c if c.is_whitespace() => {
                it.next();
            }
            '+' => {
                it.next();
                out.push(Token::Plus);
            }
            '-' => {
                it.next();
                out.push(Token::Minus);
            }
            '*' => {
                it.next();
                out.push(Token::Star);
            }
            '^' => {
                it.next();
                out.push(Token::Caret);
            }
            '/' => {
                it.next();
                out.push(Token::Slash);
            }
            '(' => {
                it.next();
                out.push(Token::LParen);
            }
            ')' => {
                it.next();
                out.push(Token::RParen);
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                let n: BigInt = digits
                    .parse()
                    .map_err(|_| PolyError::Parse(format!("bad integer `{digits}`")))?;
                out.push(Token::Num(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&d) = it.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        ident.push(d);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(ident));
            }
            other => {
                return Err(PolyError::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    vars: &'a VarSet,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut negate = false;
        if self.eat(&Token::Minus) {
            negate = true;
        } else {
            self.eat(&Token::Plus);
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat(&Token::Plus) {
                let t = self.term()?;
                acc = acc.try_add(&t)?;
            } else if self.eat(&Token::Minus) {
                let t = self.term()?;
                acc = acc.try_sub(&t)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(&Token::Star) {
            let f = self.factor()?;
            acc = acc.try_mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.eat(&Token::Caret) {
            match self.bump() {
                Some(Token::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| PolyError::Parse("exponent out of range".into()))?;
                    Ok(base.pow(e))
                }
                other => Err(PolyError::Parse(format!(
                    "expected exponent after `^`, found {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.bump() {
            Some(Token::Num(n)) => {
                // optional `/q` turns the literal into a rational constant
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.bump() {
                        Some(Token::Num(d)) => {
                            if d == BigInt::from(0) {
                                return Err(PolyError::Parse("zero denominator".into()));
                            }
                            Ok(Polynomial::constant(self.vars, Rational::new(n, d)))
                        }
                        other => Err(PolyError::Parse(format!(
                            "expected denominator after `/`, found {other:?}"
                        ))),
                    }
                } else {
                    Ok(Polynomial::constant(self.vars, Rational::from_integer(n)))
                }
            }
            Some(Token::Ident(name)) => Polynomial::variable(self.vars, &name),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                if self.eat(&Token::RParen) {
                    Ok(inner)
                } else {
                    Err(PolyError::Parse("missing `)`".into()))
                }
            }
            other => Err(PolyError::Parse(format!(
                "expected a number, variable, or `(`, found {other:?}"
            ))),
        }
    }
}

pub(super) fn parse(vars: &VarSet, src: &str) -> Result<Polynomial, PolyError> {
    let tokens = tokenize(src)?;
    let mut p = Parser {
        vars,
        tokens,
        pos: 0,
    };
    let result = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(PolyError::Parse(format!(
            "trailing input at token {}",
            p.pos
        )));
    }
    Ok(result)
}
