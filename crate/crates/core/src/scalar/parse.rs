//! Recursive-descent parser for scalar expressions:
//! `expr := ['-'] term (('+'|'-') term)*`, `term := factor (('*'|'/') factor)*`,
//! `factor := atom ['^' ['-'] int]`, `atom := int | 'i' | name | '(' expr ')'`.

use crate::error::{Error, Result};

use super::{GaussRat, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Name(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let st = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            out.push(Tok::Int(chars[st..k].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let st = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push(Tok::Name(chars[st..k].iter().collect()));
        } else if "+-*/^()·".contains(c) {
            out.push(Tok::Sym(if c == '·' { '*' } else { c }));
            k += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc += self.term()?;
            } else if self.eat('-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                let d = self.factor()?;
                let inv = invert(&d)?;
                acc = &acc * &inv;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e: u32 = match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                s.parse().map_err(|_| Error::ExponentOverflow)?
            }
            other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        };
        if e > i32::MAX as u32 {
            return Err(Error::ExponentOverflow);
        }
        if neg {
            Ok(invert(&base)?.pow(e))
        } else {
            Ok(base.pow(e))
        }
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                let n: num_bigint::BigInt = s.parse().map_err(|_| Error::Parse(s.clone()))?;
                Ok(Scalar::constant(GaussRat::from(
                    num_rational::BigRational::from_integer(n),
                )))
            }
            Some(Tok::Name(n)) => {
                self.pos += 1;
                if n == "i" {
                    Ok(Scalar::i())
                } else {
                    Ok(Scalar::param(&n))
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn invert(s: &Scalar) -> Result<Scalar> {
    if s.is_zero() {
        return Err(Error::DivisionByZero("scalar expression".into()));
    }
    s.inv_unit()
        .ok_or_else(|| Error::Parse(format!("cannot divide by non-monomial `{s}`")))
}

pub(crate) fn parse_scalar(s: &str) -> Result<Scalar> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in `{s}`")));
    }
    Ok(v)
}
