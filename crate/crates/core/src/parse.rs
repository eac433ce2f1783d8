//! Polynomial expressions in `x` with exact rational literals.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' nat]
//! atom   := nat | nat '/' nat | 'x' | '(' expr ')' | '-' factor
//! ```
//!
//! Implicit multiplication (`2x`) is rejected.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Integer, RatPoly, Rational};

/// Largest accepted exponent literal.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(Integer),
    Ratio(Integer, Integer),
    X,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    pub fn eval(&self) -> RatPoly {
        match self {
            Expr::Int(n) => RatPoly::constant(Rational::from_integer(n.clone())),
            Expr::Ratio(n, d) => RatPoly::constant(Rational::new(n.clone(), d.clone())),
            Expr::X => RatPoly::x(),
            Expr::Neg(e) => -e.eval(),
            Expr::Add(a, b) => &a.eval() + &b.eval(),
            Expr::Sub(a, b) => &a.eval() - &b.eval(),
            Expr::Mul(a, b) => &a.eval() * &b.eval(),
            Expr::Pow(a, e) => a.eval().pow(*e),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nat(&mut self) -> Result<(Integer, usize)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected a natural number");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok((text.parse().expect("digits parse"), start))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat(b'*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let (e, at) = self.nat()?;
        match u32::try_from(&e) {
            Ok(v) if v <= MAX_EXPONENT => Ok(Expr::Pow(Box::new(base), v)),
            _ => self.err(at, format!("exponent exceeds {MAX_EXPONENT}")),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Expr::X)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err(self.pos, "expected ')'");
                }
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(c) if c.is_ascii_digit() => {
                let (n, _) = self.nat()?;
                if self.eat(b'/') {
                    let (d, at) = self.nat()?;
                    if d.is_zero() {
                        return self.err(at, "zero denominator");
                    }
                    Ok(Expr::Ratio(n, d))
                } else {
                    Ok(Expr::Int(n))
                }
            }
            Some(c) => self.err(self.pos, format!("unexpected '{}'", c as char)),
            None => self.err(self.pos, "unexpected end of input"),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(c) => p.err(p.pos, format!("unexpected '{}'", c as char)),
    }
}

pub fn parse_polynomial(text: &str) -> Result<RatPoly> {
    Ok(parse_expr(text)?.eval())
}
