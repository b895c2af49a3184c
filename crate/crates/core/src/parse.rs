//! Text syntax for polynomials: `+ - * ^`, parentheses (multiplication may be
//! implicit), integers, variables `x1`, `x_-1`, `x_{-1}`, `y2`, `z`, `t3`,
//! generators `c2`, Schur functions `S[2,1]` and pfaffians `Q[3,1]`.

use crate::error::{Error, Result};
use crate::poly::{BasePoly, LambdaPoly, Partition, Var};
use crate::ring::Ring;
use crate::Int;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(Int),
    Var(Var),
    C(u32),
    Schur { parts: Vec<u32>, pos: usize },
    Pfaffian { parts: Vec<u32>, pos: usize },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// A ring the expression language can be evaluated in.
pub trait Target: Ring {
    fn from_integer(n: Int) -> Self;
    fn from_var(v: Var) -> Self;
    fn generator(k: u32) -> Result<Self>;
    fn schur(parts: &[u32]) -> Result<Self>;
    fn pfaffian(parts: &[u32]) -> Result<Self>;
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(Error::parse(self.pos, format!("expected `{want}`, found `{c}`"))),
            None => Err(Error::parse(self.pos, format!("expected `{want}`, found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        self.skip_ws();
        if self.peek() == Some('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.peek() == Some('+') {
            self.bump();
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let start = self.pos;
            let e = self.digits()?;
            let e: u32 = e
                .parse()
                .map_err(|_| Error::parse(start, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected digits"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn signed(&mut self) -> Result<i64> {
        let start = self.pos;
        let neg = self.peek() == Some('-');
        if neg {
            self.bump();
        }
        let d = self.digits()?;
        let v: i64 = d.parse().map_err(|_| Error::parse(start, "index out of range"))?;
        Ok(if neg { -v } else { v })
    }

    /// Index after a variable letter: `3`, `-3`, `_3`, `_-3`, `_{-3}`.
    fn index(&mut self) -> Result<i64> {
        if self.peek() == Some('_') {
            self.bump();
            if self.peek() == Some('{') {
                self.bump();
                self.skip_ws();
                let v = self.signed()?;
                self.expect('}')?;
                return Ok(v);
            }
        }
        self.signed()
    }

    fn int_list(&mut self) -> Result<Vec<u32>> {
        self.expect('[')?;
        let mut out = Vec::new();
        self.skip_ws();
        if self.peek() == Some(']') {
            self.bump();
            return Ok(out);
        }
        loop {
            self.skip_ws();
            let start = self.pos;
            let d = self.digits()?;
            out.push(d.parse().map_err(|_| Error::parse(start, "part too large"))?);
            self.skip_ws();
            match self.bump() {
                Some(',') => continue,
                Some(']') => return Ok(out),
                _ => return Err(Error::parse(self.pos.saturating_sub(1), "expected `,` or `]`")),
            }
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            None => Err(Error::parse(start, "unexpected end of input")),
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                let n: Int = d.parse().map_err(|_| Error::parse(start, "bad integer"))?;
                Ok(Expr::Int(n))
            }
            Some('S') => {
                self.bump();
                Ok(Expr::Schur { parts: self.int_list()?, pos: start })
            }
            Some('Q') => {
                self.bump();
                Ok(Expr::Pfaffian { parts: self.int_list()?, pos: start })
            }
            Some('z') => {
                self.bump();
                Ok(Expr::Var(Var::Z))
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.bump();
                let idx = self.index()?;
                let idx32 = i32::try_from(idx).map_err(|_| Error::parse(start, "index out of range"))?;
                Ok(match c {
                    'c' => {
                        if idx < 0 {
                            return Err(Error::parse(start, "generator index must be nonnegative"));
                        }
                        Expr::C(idx as u32)
                    }
                    'x' => Expr::Var(Var::X(idx32)),
                    'y' => Expr::Var(Var::Y(idx32)),
                    other => Expr::Var(Var::Aux(other, idx32)),
                })
            }
            Some(c) => Err(Error::parse(start, format!("unexpected character `{c}`"))),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    Ok(e)
}

pub fn eval<T: Target>(e: &Expr) -> Result<T> {
    Ok(match e {
        Expr::Int(n) => T::from_integer(n.clone()),
        Expr::Var(v) => T::from_var(*v),
        Expr::C(k) => T::generator(*k)?,
        Expr::Schur { parts, pos } => T::schur(parts).map_err(|e| at(*pos, e))?,
        Expr::Pfaffian { parts, pos } => T::pfaffian(parts).map_err(|e| at(*pos, e))?,
        Expr::Add(a, b) => eval::<T>(a)?.add_ref(&eval(b)?),
        Expr::Sub(a, b) => eval::<T>(a)?.sub_ref(&eval(b)?),
        Expr::Mul(a, b) => eval::<T>(a)?.mul_ref(&eval(b)?),
        Expr::Neg(a) => eval::<T>(a)?.neg_ref(),
        Expr::Pow(a, k) => eval::<T>(a)?.pow(*k),
    })
}

fn at(pos: usize, e: Error) -> Error {
    match e {
        Error::Domain(msg) => Error::parse(pos, msg),
        other => other,
    }
}

pub fn parse_into<T: Target>(src: &str) -> Result<T> {
    eval(&parse_expr(src)?)
}

pub fn parse_lambda(src: &str) -> Result<LambdaPoly> {
    parse_into(src)
}

pub fn parse_base(src: &str) -> Result<BasePoly> {
    parse_into::<LambdaPoly>(src)?
        .as_base()
        .ok_or_else(|| Error::parse(0, "expected a polynomial without c"))
}

impl Target for LambdaPoly {
    fn from_integer(n: Int) -> Self {
        LambdaPoly::from_base(BasePoly::constant(n))
    }
    fn from_var(v: Var) -> Self {
        LambdaPoly::from_base(BasePoly::var(v))
    }
    fn generator(k: u32) -> Result<Self> {
        Ok(LambdaPoly::c(k as i64))
    }
    fn schur(parts: &[u32]) -> Result<Self> {
        Ok(LambdaPoly::schur(Partition::new(parts.to_vec())?))
    }
    fn pfaffian(_: &[u32]) -> Result<Self> {
        Err(Error::domain("Q[...] is only available in the type C ring"))
    }
}
