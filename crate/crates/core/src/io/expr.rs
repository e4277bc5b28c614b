//! Recursive-descent parser for scalar expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | name | 'sqrt' '(' expr ')' | '(' expr ')'
//! ```
//!
//! `-x^2` parses as `-(x^2)`. `U+2212` is accepted as a minus sign.
//! `sqrt(d)` is only defined when `d` is the radicand of the field.

use num_bigint::BigInt;

use super::IoError;
use crate::fields::{Field, FieldError, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Op(char),
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, IoError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits")), start));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Name(chars[start..i].iter().collect()), start));
        } else if "+-*/^()".contains(c) || c == '\u{2212}' {
            out.push((Tok::Op(if c == '\u{2212}' { '-' } else { c }), i));
            i += 1;
        } else {
            return Err(IoError::Syntax { position: i, message: format!("unexpected character {c:?}") });
        }
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    field: &'a Field,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, op: char) -> Result<(), IoError> {
        if *self.peek() == Tok::Op(op) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected '{op}'")))
        }
    }

    fn unexpected(&self, what: &str) -> IoError {
        let found = match self.peek() {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Name(s) => format!("name {s:?}"),
            Tok::Op(c) => format!("'{c}'"),
            Tok::End => "end of input".to_string(),
        };
        IoError::Syntax { position: self.pos(), message: format!("{what}, found {found}") }
    }

    fn arith(&self, r: Result<Scalar, FieldError>, position: usize) -> Result<Scalar, IoError> {
        r.map_err(|e| match e {
            FieldError::DivisionByZero => IoError::DivisionByZero { position },
            other => IoError::Syntax { position, message: other.to_string() },
        })
    }

    fn expr(&mut self) -> Result<Scalar, IoError> {
        let mut acc = self.term()?;
        loop {
            let pos = self.pos();
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.arith(acc.try_add(&rhs), pos)?;
                }
                Tok::Op('-') => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.arith(acc.try_sub(&rhs), pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, IoError> {
        let mut acc = self.unary()?;
        loop {
            let pos = self.pos();
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.arith(acc.try_mul(&rhs), pos)?;
                }
                Tok::Op('/') => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.arith(acc.try_div(&rhs), pos)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, IoError> {
        match self.peek() {
            Tok::Op('-') => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Op('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar, IoError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Op('^') {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Int(n) => {
                let e: u32 = (&n)
                    .try_into()
                    .map_err(|_| IoError::Syntax { position: pos, message: format!("exponent {n} is too large") })?;
                Ok(base.pow(e))
            }
            _ => Err(IoError::Syntax { position: pos, message: "exponent must be a non-negative integer".into() }),
        }
    }

    fn atom(&mut self) -> Result<Scalar, IoError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(self.field.big_int(&n))
            }
            Tok::Op('(') => {
                self.bump();
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Tok::Name(name) if name == "sqrt" => {
                self.bump();
                self.expect('(')?;
                let inner_pos = self.pos();
                let inner = self.expr()?;
                self.expect(')')?;
                let is_radicand = |d: &Scalar| matches!(inner.quadratic_parts(), Some((a, b)) if b.is_zero() && a == *d);
                match self.field.radicand() {
                    Some(d) if is_radicand(d) => Ok(self.field.sqrt_d().expect("quadratic field")),
                    Some(d) => Err(IoError::Syntax {
                        position: inner_pos,
                        message: format!("sqrt is only defined for the radicand {d}"),
                    }),
                    None => Err(IoError::Syntax { position: pos, message: format!("sqrt is not available in {}", self.field) }),
                }
            }
            Tok::Name(name) => {
                self.bump();
                self.field.var(&name).map_err(|_| IoError::UnknownVariable { name, position: pos })
            }
            _ => Err(self.unexpected("expected a number, a name or '('")),
        }
    }
}

/// Parses `text` as an element of `field`.
pub fn parse_scalar(text: &str, field: &Field) -> Result<Scalar, IoError> {
    let mut p = Parser { toks: tokenize(text)?, at: 0, field };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("expected an operator or end of input"));
    }
    Ok(v)
}
