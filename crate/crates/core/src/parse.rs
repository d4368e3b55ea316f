//! Expression parser for polynomials.
//!
//! Accepts `x1`..`x8`, blades `e1`, `e12`, …, the imaginary unit `i`, the
//! complex shorthands `z_+ z_- w_+ w_-` (also `zp zm wp wm` and `z_{+}`),
//! integers, `+ - * / ^`, parentheses and juxtaposition. Products are
//! geometric products taken left to right; division is by constants only.

use crate::clifford::Blade;
use crate::error::{Error, Result};
use crate::mvpoly::MVPolynomial;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Var(usize),
    Blade(Vec<usize>),
    I,
    Z(bool),
    W(bool),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |msg: String| Error::Parse(msg);
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' | '−' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' | '·' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Tok::Num(
                    s.parse()
                        .map_err(|_| err(format!("number too large: {s}")))?,
                ));
            }
            'x' | 'e' => {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(err(format!("expected index after '{c}'")));
                }
                let digits: Vec<usize> = chars[start..i]
                    .iter()
                    .map(|d| d.to_digit(10).unwrap() as usize)
                    .collect();
                if c == 'x' {
                    let s: String = chars[start..i].iter().collect();
                    out.push(Tok::Var(s.parse().map_err(|_| err(s.clone()))?));
                } else {
                    out.push(Tok::Blade(digits));
                }
            }
            'i' => {
                out.push(Tok::I);
                i += 1
            }
            'z' | 'w' => {
                i += 1;
                let rest: String = chars[i..].iter().take(4).collect();
                let (plus, used) = if rest.starts_with("_{+}") {
                    (true, 4)
                } else if rest.starts_with("_{-}") {
                    (false, 4)
                } else if rest.starts_with("_+") {
                    (true, 2)
                } else if rest.starts_with("_-") {
                    (false, 2)
                } else if rest.starts_with('p') {
                    (true, 1)
                } else if rest.starts_with('m') {
                    (false, 1)
                } else {
                    return Err(err(format!("expected '_+', '_-', 'p' or 'm' after '{c}'")));
                };
                i += used;
                out.push(if c == 'z' { Tok::Z(plus) } else { Tok::W(plus) });
            }
            other => return Err(err(format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    dim: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MVPolynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MVPolynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let c = constant_of(&d)
                        .ok_or_else(|| Error::Parse("division by a non-constant".into()))?;
                    let inv = c
                        .inv()
                        .ok_or_else(|| Error::Parse("division by zero".into()))?;
                    acc = acc.scalar_mul(&inv);
                }
                Some(
                    Tok::Num(_)
                    | Tok::Var(_)
                    | Tok::Blade(_)
                    | Tok::I
                    | Tok::Z(_)
                    | Tok::W(_)
                    | Tok::LParen,
                ) => {
                    acc = acc.mul(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MVPolynomial> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(e)) if e <= 255 => return base.pow(e as u32),
                _ => return Err(Error::Parse("expected a small integer exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MVPolynomial> {
        let m = self.dim;
        let need2 = |what: &str| {
            if m < 2 {
                Err(Error::Parse(format!(
                    "{what} requires dimension at least 2"
                )))
            } else {
                Ok(())
            }
        };
        match self.next() {
            Some(Tok::Num(n)) => Ok(MVPolynomial::scalar(m, Scalar::from_int(n as i64))),
            Some(Tok::I) => Ok(MVPolynomial::scalar(m, Scalar::i())),
            Some(Tok::Var(j)) => {
                if j == 0 || j > m {
                    return Err(Error::IndexOutOfRange { index: j, dim: m });
                }
                Ok(MVPolynomial::var(m, j))
            }
            Some(Tok::Blade(ix)) => {
                let mut acc = MVPolynomial::one(m);
                for &j in &ix {
                    if j == 0 || j > m {
                        return Err(Error::IndexOutOfRange { index: j, dim: m });
                    }
                    acc = acc.mul(&MVPolynomial::blade(m, Blade::generator(j)))?;
                }
                Ok(acc)
            }
            Some(Tok::Z(plus)) => {
                need2("z_±")?;
                let s = if plus { Scalar::i() } else { -Scalar::i() };
                MVPolynomial::var(m, 1).add(&MVPolynomial::var(m, 2).scalar_mul(&s))
            }
            Some(Tok::W(plus)) => {
                need2("w_±")?;
                let s = if plus { Scalar::i() } else { -Scalar::i() };
                MVPolynomial::e(m, 1).add(&MVPolynomial::e(m, 2).scalar_mul(&s))
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Parse("expected ')'".into())),
                }
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

fn constant_of(p: &MVPolynomial) -> Option<Scalar> {
    if p.is_zero() {
        return Some(Scalar::zero());
    }
    if p.len() != 1 {
        return None;
    }
    let ((mono, blade), c) = p.terms().next()?;
    (mono.degree() == 0 && *blade == Blade::SCALAR).then(|| c.clone())
}

/// Parses `src` as a polynomial on ℝ^dim.
pub fn parse(src: &str, dim: usize) -> Result<MVPolynomial> {
    crate::clifford::check_dim(dim)?;
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, dim };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(out)
}
