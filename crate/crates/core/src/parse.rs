//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr    = [ "-" ] term { ("+" | "-") term } ;
//! term    = factor { "*" factor } ;
//! factor  = atom [ "^" natural ] ;
//! atom    = natural | identifier | "(" expr ")" ;
//! natural = digit { digit } ;
//! ```
//!
//! Identifiers must be declared ring variables; integer literals are reduced
//! mod p; `^` takes a non-negative integer exponent.

use std::sync::Arc;

use thiserror::Error;

use crate::error::ArithError;
use crate::monomial::MonomialOrder;
use crate::poly::{PolyRing, SparsePolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("column {col}: unknown identifier `{name}`")]
    UnknownIdentifier { name: String, col: usize },

    #[error("column {col}: unexpected character `{ch}`")]
    UnexpectedChar { ch: char, col: usize },

    #[error("column {col}: expected {expected}")]
    Expected { expected: String, col: usize },

    #[error("unexpected end of input (expected {expected})")]
    UnexpectedEnd { expected: String },

    #[error("column {col}: integer literal too large")]
    LiteralTooLarge { col: usize },

    #[error("column {col}: exponent too large")]
    ExponentTooLarge { col: usize },

    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

/// 1-based column of each token, for error messages.
struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut toks = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let col = i + 1;
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, col));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, col));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit = &text[start..i];
                let v: u64 = lit
                    .parse()
                    .map_err(|_| ParseError::LiteralTooLarge { col })?;
                toks.push((Tok::Int(v), col));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), col));
            }
            other => return Err(ParseError::UnexpectedChar { ch: other, col }),
        }
    }
    Ok(toks)
}

impl Lexer {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, c)| c)
            .unwrap_or(usize::MAX)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if *t == tok => {
                self.pos += 1;
                Ok(())
            }
            Some(_) => Err(ParseError::Expected {
                expected: what.to_string(),
                col: self.col(),
            }),
            None => Err(ParseError::UnexpectedEnd {
                expected: what.to_string(),
            }),
        }
    }
}

struct Parser<'a> {
    lx: Lexer,
    ring: &'a Arc<PolyRing>,
    order: MonomialOrder,
}

impl<'a> Parser<'a> {
    fn expr(&mut self) -> Result<SparsePolynomial, ParseError> {
        let mut negate = false;
        if matches!(self.lx.peek(), Some(Tok::Minus)) {
            self.lx.bump();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.lx.peek() {
                Some(Tok::Plus) => {
                    self.lx.bump();
                    let t = self.term()?;
                    acc = acc.try_add(&t)?;
                }
                Some(Tok::Minus) => {
                    self.lx.bump();
                    let t = self.term()?;
                    acc = acc.try_sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SparsePolynomial, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.lx.peek(), Some(Tok::Star)) {
            self.lx.bump();
            let f = self.factor()?;
            acc = acc.try_mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SparsePolynomial, ParseError> {
        let base = self.atom()?;
        if matches!(self.lx.peek(), Some(Tok::Caret)) {
            self.lx.bump();
            let col = self.lx.col();
            match self.lx.bump() {
                Some(Tok::Int(e)) => {
                    let e = u32::try_from(e).map_err(|_| ParseError::ExponentTooLarge { col })?;
                    return Ok(base.try_pow(e)?);
                }
                Some(_) => {
                    return Err(ParseError::Expected {
                        expected: "non-negative integer exponent".to_string(),
                        col,
                    })
                }
                None => {
                    return Err(ParseError::UnexpectedEnd {
                        expected: "non-negative integer exponent".to_string(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<SparsePolynomial, ParseError> {
        let col = self.lx.col();
        match self.lx.bump() {
            Some(Tok::Int(v)) => {
                let p = u64::from(self.ring.prime());
                Ok(SparsePolynomial::constant(
                    self.ring,
                    self.order,
                    (v % p) as i64,
                ))
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(idx) => Ok(SparsePolynomial::variable(self.ring, self.order, idx)),
                None => Err(ParseError::UnknownIdentifier { name, col }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.lx.expect(Tok::RParen, "closing parenthesis")?;
                Ok(inner)
            }
            Some(_) => Err(ParseError::Expected {
                expected: "integer, variable, or parenthesized expression".to_string(),
                col,
            }),
            None => Err(ParseError::UnexpectedEnd {
                expected: "integer, variable, or parenthesized expression".to_string(),
            }),
        }
    }
}

/// Parses a polynomial expression into canonical form.
pub fn parse_polynomial(
    text: &str,
    ring: &Arc<PolyRing>,
    order: MonomialOrder,
) -> Result<SparsePolynomial, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ParseError::UnexpectedEnd {
            expected: "expression".to_string(),
        });
    }
    let mut parser = Parser {
        lx: Lexer { toks, pos: 0 },
        ring,
        order,
    };
    let poly = parser.expr()?;
    if parser.lx.peek().is_some() {
        return Err(ParseError::Expected {
            expected: "end of expression".to_string(),
            col: parser.lx.col(),
        });
    }
    Ok(poly)
}
