//! Text grammars for fields, field elements, skew polynomials and elements of
//! `F_q + vF_q`.
//!
//! All three value grammars share one expression syntax: signed sums of
//! products of atoms, where an atom is an integer, a symbol (`w`, `x`, `v`)
//! or a parenthesized expression, optionally raised to an integer power.
//! Juxtaposition multiplies, so `2x^2`, `wx` and `2*w*x` are all accepted.
//! Products are evaluated left to right in the target ring, which matters in
//! the skew ring: `w*x` is `w x` while `x*w` is `theta(w) x`.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Sym(char),
    Caret,
    Star,
    Plus,
    Minus,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: i64 = 0;
                while let Some(&d) = chars.peek() {
                    let Some(dv) = d.to_digit(10) else { break };
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(dv as i64))
                        .ok_or_else(|| Error::parse(s, "integer literal too large"))?;
                    chars.next();
                }
                out.push(Tok::Int(v));
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' | '\u{2212}' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '(' | '{' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' | '}' => {
                chars.next();
                out.push(Tok::RParen);
            }
            c if c.is_alphabetic() => {
                chars.next();
                out.push(Tok::Sym(c));
            }
            other => return Err(Error::parse(s, format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

/// A ring in which parsed expressions are evaluated.
pub(crate) trait Algebra {
    type V: Clone;
    fn integer(&self, c: i64) -> Self::V;
    fn symbol(&self, c: char) -> Option<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn pow(&self, a: &Self::V, e: i64) -> Result<Self::V>;
}

struct Parser<'a, A: Algebra> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    alg: &'a A,
}

impl<'a, A: Algebra> Parser<'a, A> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, reason: &str) -> Error {
        Error::parse(self.src, reason)
    }

    fn expr(&mut self) -> Result<A::V> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.next();
            }
            Some(Tok::Minus) => {
                self.next();
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { self.alg.neg(&first) } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = self.alg.add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = self.alg.add(&acc, &self.alg.neg(&t));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<A::V> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    let f = self.factor()?;
                    acc = self.alg.mul(&acc, &f);
                }
                Some(Tok::Int(_)) | Some(Tok::Sym(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = self.alg.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<A::V> {
        let base = match self.next() {
            Some(Tok::Int(v)) => self.alg.integer(v),
            Some(Tok::Sym(c)) => self
                .alg
                .symbol(c)
                .ok_or_else(|| self.err(&format!("unknown symbol {c:?}")))?,
            Some(Tok::LParen) => {
                let v = self.expr()?;
                if self.next() != Some(Tok::RParen) {
                    return Err(self.err("missing closing parenthesis"));
                }
                v
            }
            _ => return Err(self.err("expected a number, symbol or '('")),
        };
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            let sign = if self.peek() == Some(&Tok::Minus) {
                self.next();
                -1
            } else {
                1
            };
            let e = match self.next() {
                Some(Tok::Int(e)) => e,
                Some(Tok::LParen) => {
                    let e = match self.next() {
                        Some(Tok::Int(e)) => e,
                        _ => return Err(self.err("expected integer exponent")),
                    };
                    if self.next() != Some(Tok::RParen) {
                        return Err(self.err("missing closing parenthesis"));
                    }
                    e
                }
                _ => return Err(self.err("expected integer exponent")),
            };
            return self.alg.pow(&base, sign * e);
        }
        Ok(base)
    }
}

pub(crate) fn parse_expr<A: Algebra>(alg: &A, s: &str) -> Result<A::V> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::parse(s, "empty expression"));
    }
    let mut p = Parser {
        src: s,
        toks,
        pos: 0,
        alg,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(s, "trailing input"));
    }
    Ok(v)
}

struct FieldAlg<'a>(&'a Field);

impl Algebra for FieldAlg<'_> {
    type V = Elem;
    fn integer(&self, c: i64) -> Elem {
        self.0.from_int(c)
    }
    fn symbol(&self, c: char) -> Option<Elem> {
        (c == self.0.symbol()).then(|| self.0.generator())
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.add(*a, *b)
    }
    fn neg(&self, a: &Elem) -> Elem {
        self.0.neg(*a)
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.mul(*a, *b)
    }
    fn pow(&self, a: &Elem, e: i64) -> Result<Elem> {
        if e < 0 && a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.0.pow_signed(*a, e))
    }
}

pub(crate) fn parse_field_elem(field: &Field, s: &str) -> Result<Elem> {
    parse_expr(&FieldAlg(field), s)
}

/// `GF(p^t; m0,...,mt)`, `GF(p^t)` or `GF(q)`.
pub(crate) fn parse_field_spec(s: &str) -> Result<Field> {
    let body = s
        .trim()
        .strip_prefix("GF(")
        .or_else(|| s.trim().strip_prefix("gf("))
        .and_then(|b| b.strip_suffix(')'))
        .ok_or_else(|| Error::parse(s, "expected GF(...)"))?;
    let (order, modulus) = match body.split_once(';') {
        Some((o, m)) => (o.trim(), Some(m.trim())),
        None => (body.trim(), None),
    };
    let num = |x: &str| {
        x.trim()
            .parse::<i64>()
            .map_err(|_| Error::parse(s, format!("bad integer {x:?}")))
    };
    let (p, t) = match order.split_once('^') {
        Some((p, t)) => (num(p)?, num(t)?),
        None => {
            let q = num(order)?;
            prime_power(q).ok_or_else(|| Error::parse(s, "order is not a prime power"))?
        }
    };
    if p <= 1 || t <= 0 || p > u32::MAX as i64 {
        return Err(Error::parse(s, "bad field order"));
    }
    match modulus {
        Some(m) => {
            let coeffs = m.split(',').map(num).collect::<Result<Vec<i64>>>()?;
            Field::new(p as u32, t as usize, &coeffs)
        }
        None => Field::default_for(p as u32, t as usize),
    }
}

fn prime_power(q: i64) -> Option<(i64, i64)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut t) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        t += 1;
    }
    (rest == 1).then_some((p, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_specs() {
        assert_eq!(parse_field_spec("GF(3^2; 2,2,1)").unwrap(), Field::gf9());
        assert_eq!(parse_field_spec("GF(2^4)").unwrap(), Field::gf16());
        assert_eq!(parse_field_spec("GF(4)").unwrap(), Field::gf4());
        assert_eq!(parse_field_spec("GF(5)").unwrap().q(), 5);
        assert!(parse_field_spec("GF(6)").is_err());
        assert!(parse_field_spec("F(9)").is_err());
    }

    #[test]
    fn elements() {
        let f = Field::gf16();
        assert_eq!(f.parse_elem("w^5+w^10").unwrap(), f.one());
        assert_eq!(f.parse_elem("w^{10}").unwrap(), f.gen_pow(10));
        assert_eq!(f.parse_elem("1+w").unwrap(), f.gen_pow(4));
        assert_eq!(f.parse_elem("0").unwrap(), f.zero());
        assert_eq!(f.parse_elem("w^-1").unwrap(), f.gen_pow(14));
        let f9 = Field::gf9();
        assert_eq!(f9.parse_elem("-1").unwrap(), f9.from_int(2));
        assert_eq!(f9.parse_elem("2*w").unwrap(), f9.gen_pow(5));
        assert!(f9.parse_elem("x").is_err());
        assert!(f9.parse_elem("w^").is_err());
        assert!(f9.parse_elem("(w").is_err());
    }

    #[test]
    fn element_display_round_trip() {
        for f in [
            Field::gf4(),
            Field::gf9(),
            Field::gf16(),
            Field::new(2, 4, &[1, 1, 1, 1, 1]).unwrap(),
        ] {
            for a in f.elements() {
                assert_eq!(f.parse_elem(&f.format(a)).unwrap(), a, "{}", f.format(a));
            }
        }
    }
}
