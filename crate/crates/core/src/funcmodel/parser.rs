//! Recursive-descent parser for the function expression language.
//!
//! ```text
//! expr   := term (("+"|"-") term)* ;
//! term   := factor (("*"|"/") factor)* ;
//! factor := "-" factor | base ("^" ["-"|"+"] number)? ;
//! base   := number | "x" | "pi" | "e" | ident "(" expr ")" | "(" expr ")" ;
//! ident  := "sin" | "cos" | "exp" | "ln" | "sqrt" | "abs" ;
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`.

use std::fmt;

use thiserror::Error;

use super::expr::{Expr, Func};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedEnd { expected: &'static str },
    UnexpectedChar { found: char, expected: &'static str },
    InvalidNumber(String),
    UnknownIdentifier(String),
    Arity {
        name: String,
        expected: usize,
        found: usize,
    },
    TrailingInput,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedEnd { expected } => {
                write!(f, "unexpected end of input, expected {expected}")
            }
            ParseErrorKind::UnexpectedChar { found, expected } => {
                write!(f, "unexpected {found:?}, expected {expected}")
            }
            ParseErrorKind::InvalidNumber(s) => write!(f, "invalid number {s:?}"),
            ParseErrorKind::UnknownIdentifier(s) => write!(f, "unknown identifier {s:?}"),
            ParseErrorKind::Arity {
                name,
                expected,
                found,
            } => write!(f, "{name} takes {expected} argument(s), got {found}"),
            ParseErrorKind::TrailingInput => write!(f, "unexpected trailing input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {offset}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn is_syntax(&self) -> bool {
        !matches!(
            self.kind,
            ParseErrorKind::UnknownIdentifier(_) | ParseErrorKind::Arity { .. }
        )
    }
}

type PResult<T> = Result<T, ParseError>;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

pub fn parse(src: &str) -> PResult<Expr> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error(ParseErrorKind::TrailingInput));
    }
    Ok(e)
}

impl<'a> Parser<'a> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            offset: self.pos,
            kind,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn unexpected(&mut self, expected: &'static str) -> ParseError {
        match self.peek() {
            Some(found) => self.error(ParseErrorKind::UnexpectedChar { found, expected }),
            None => self.error(ParseErrorKind::UnexpectedEnd { expected }),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, expected: &'static str) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> PResult<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if self.eat('^') {
            let negative = if self.eat('-') {
                true
            } else {
                self.eat('+');
                false
            };
            let e = self.number("exponent")?;
            let e = if negative { -e } else { e };
            return Ok(Expr::Pow(Box::new(base), Box::new(Expr::Num(e))));
        }
        Ok(base)
    }

    fn number(&mut self, expected: &'static str) -> PResult<f64> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '.' => {}
            _ => return Err(self.unexpected(expected)),
        }
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut i = self.pos;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
            i += 1;
        }
        if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
            let mut j = i + 1;
            if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                j += 1;
            }
            if j < bytes.len() && bytes[j].is_ascii_digit() {
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                i = j;
            }
        }
        let text = &self.src[start..i];
        match text.parse::<f64>() {
            Ok(v) => {
                self.pos = i;
                Ok(v)
            }
            Err(_) => Err(self.error(ParseErrorKind::InvalidNumber(text.to_string()))),
        }
    }

    fn base(&mut self) -> PResult<Expr> {
        match self.peek() {
            None => Err(self.unexpected("an operand")),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')', "')'")?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => Ok(Expr::Num(self.number("a number")?)),
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.identifier(),
            Some(_) => Err(self.unexpected("an operand")),
        }
    }

    fn identifier(&mut self) -> PResult<Expr> {
        let start = self.pos;
        let name_len = self.src[start..]
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.src.len() - start);
        let name = &self.src[start..start + name_len];
        self.pos += name_len;

        let nullary = match name {
            "x" => Some(Expr::X),
            "pi" => Some(Expr::Num(std::f64::consts::PI)),
            "e" => Some(Expr::Num(std::f64::consts::E)),
            _ => None,
        };
        let func = Func::from_name(name);
        if nullary.is_none() && func.is_none() {
            return Err(ParseError {
                offset: start,
                kind: ParseErrorKind::UnknownIdentifier(name.to_string()),
            });
        }

        if self.peek() != Some('(') {
            return match nullary {
                Some(e) => Ok(e),
                None => Err(self.unexpected("'(' after function name")),
            };
        }
        self.pos += 1;
        let args = self.arguments()?;
        match (nullary, func) {
            (_, Some(f)) if args.len() == 1 => {
                Ok(Expr::Call(f, Box::new(args.into_iter().next().unwrap())))
            }
            (_, f) => Err(ParseError {
                offset: start,
                kind: ParseErrorKind::Arity {
                    name: name.to_string(),
                    expected: usize::from(f.is_some()),
                    found: args.len(),
                },
            }),
        }
    }

    // after '(' ; consumes the closing ')'
    fn arguments(&mut self) -> PResult<Vec<Expr>> {
        let mut args = Vec::new();
        if self.eat(')') {
            return Ok(args);
        }
        loop {
            args.push(self.expr()?);
            if self.eat(',') {
                continue;
            }
            self.expect(')', "',' or ')'")?;
            return Ok(args);
        }
    }
}
