//! Text grammar for polynomials and the canonical printer.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ('^' integer)?
//! atom   := integer | name | '(' expr ')' | ('+'|'-') factor
//! ```
//! Division is only allowed by a nonzero constant.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Coeff, OrderRef, Polynomial};
use crate::error::{Error, Result};

pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((Tok::Num(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Name(src[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            let ch = src[i..].chars().next().unwrap();
            return Err(Error::Parse { pos: i, msg: format!("unexpected character '{ch}'") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
    names: &'a [String],
    order: &'a OrderRef,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.1).unwrap_or(self.end)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let pos = self.pos();
                self.at += 1;
                let d = self.factor()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Parse { pos, msg: "division only by a nonzero constant".into() });
                }
                acc = acc.scale(&d.terms()[0].1.recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            let pos = self.pos();
            match self.toks.get(self.at).cloned() {
                Some((Tok::Num(k), _)) => {
                    self.at += 1;
                    let k = u32::try_from(&k)
                        .map_err(|_| Error::Parse { pos, msg: "exponent too large".into() })?;
                    return Ok(base.pow(k));
                }
                _ => return Err(Error::Parse { pos, msg: "expected non-negative integer exponent".into() }),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        match self.toks.get(self.at).cloned() {
            Some((Tok::Num(n), _)) => {
                self.at += 1;
                Ok(Polynomial::constant(self.order, Coeff::from_integer(n)))
            }
            Some((Tok::Name(name), _)) => {
                self.at += 1;
                match self.names.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::var(self.order, i)),
                    None => Err(Error::UnknownVariable { name, pos }),
                }
            }
            Some((Tok::Op('('), _)) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse { pos: self.pos(), msg: "expected ')'".into() });
                }
                Ok(inner)
            }
            Some((Tok::Op('-'), _)) => {
                self.at += 1;
                Ok(-&self.factor()?)
            }
            Some((Tok::Op('+'), _)) => {
                self.at += 1;
                self.factor()
            }
            Some((Tok::Op(c), _)) => Err(Error::Parse { pos, msg: format!("unexpected '{c}'") }),
            None => Err(Error::Parse { pos, msg: "unexpected end of input".into() }),
        }
    }
}

/// Parses one polynomial over the variables `names` (in order).
pub fn parse_polynomial(src: &str, names: &[String], order: &OrderRef) -> Result<Polynomial> {
    if names.len() != order.nvars() {
        return Err(Error::Dimension { expected: order.nvars(), found: names.len() });
    }
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty polynomial".into() });
    }
    let mut p = Parser { toks, at: 0, end: src.len(), names, order };
    let out = p.expr()?;
    if p.at < p.toks.len() {
        return Err(Error::Parse { pos: p.pos(), msg: "unexpected trailing input".into() });
    }
    Ok(out)
}

/// Splits a comma separated list at top-level commas, returning each piece
/// with its byte offset.
pub fn split_list(src: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in src.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push((&src[start..i], start));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((&src[start..], start));
    out.retain(|(s, _)| !s.trim().is_empty());
    out
}

/// Parses a comma separated list of polynomials; positions in errors refer
/// to the whole input.
pub fn parse_polynomial_list(src: &str, names: &[String], order: &OrderRef) -> Result<Vec<Polynomial>> {
    split_list(src)
        .into_iter()
        .map(|(piece, off)| {
            parse_polynomial(piece, names, order).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: pos + off, msg },
                Error::UnknownVariable { name, pos } => Error::UnknownVariable { name, pos: pos + off },
                other => other,
            })
        })
        .collect()
}

pub fn format_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_monomial(e: &[u32], names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], k)),
        }
    }
    parts.join("*")
}

/// Canonical text form: terms in descending order, `c*m` with unit
/// coefficients elided. Re-parses to the same polynomial.
pub fn format_polynomial(p: &Polynomial, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (k, (e, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { "-" } else { "+" });
        }
        let mono = format_monomial(e.as_slice(), names);
        if mono.is_empty() {
            s.push_str(&format_coeff(&abs));
        } else if abs.is_one() {
            s.push_str(&mono);
        } else {
            let _ = write!(s, "{}*{}", format_coeff(&abs), mono);
        }
    }
    s
}
