//! Input language: rational expressions in `n` and `x`.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := unary (('*'|'/') unary)*
//! unary  := '-' unary | factor
//! factor := base ('^' '-'? int)?
//! base   := int | int '/' int | 'n' | 'x' | '(' expr ')'
//! ```
//!
//! `a/b` is read as a rational literal only at the start of a term and when
//! no `^` follows, so it always means the same as the division would.

use mixedct::arith::{BigRat, Field, NRat, QPoly, QRat, XPoly, XRat};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    N,
    X,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Rat(BigInt, BigInt),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at offset {offset} (only n and x are allowed)")]
    UnknownVariable { name: String, offset: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LowerError {
    #[error("expression does not lie in {0}")]
    DomainMismatch(&'static str),
    #[error("division by zero")]
    DivisionByZeroExpr,
    #[error("exponent {0} out of range")]
    ExponentRange(i64),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(src[start..i].parse().unwrap()), start));
                continue;
            }
            _ if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().unwrap();
                return Err(ParseError::Syntax { offset: start, message: format!("unexpected character `{ch}`") });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: &str) -> Result<T, ParseError> {
        let found = match self.peek() {
            Tok::End => "end of input".to_string(),
            Tok::Int(a) => format!("`{a}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        };
        Err(ParseError::Syntax { offset: self.offset(), message: format!("{message}, found {found}") })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary(true)?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary(false)?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary(false)?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self, lead: bool) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary(lead)?)));
        }
        self.factor(lead)
    }

    fn factor(&mut self, lead: bool) -> Result<Expr, ParseError> {
        let base = self.base(lead)?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let neg = *self.peek() == Tok::Minus;
        if neg {
            self.bump();
        }
        let at = self.offset();
        let Tok::Int(e) = self.peek().clone() else {
            return self.err("expected an integer exponent");
        };
        self.bump();
        let e = e.to_i64().ok_or(ParseError::Syntax { offset: at, message: "exponent too large".into() })?;
        Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
    }

    fn base(&mut self, lead: bool) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(a) => {
                self.bump();
                if lead && *self.peek() == Tok::Slash && *self.peek_at(2) != Tok::Caret {
                    if let Tok::Int(b) = self.peek_at(1).clone() {
                        self.bump();
                        self.bump();
                        return Ok(Expr::Rat(a, b));
                    }
                }
                Ok(Expr::Int(a))
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "n" => Ok(Expr::Var(Var::N)),
                    "x" => Ok(Expr::Var(Var::X)),
                    _ => Err(ParseError::UnknownVariable { name, offset: at }),
                }
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(e)
            }
            _ => self.err("expected a number, a variable or `(`"),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Target domain for [`lower`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// Rational function of `n` alone.
    NRat,
    /// Polynomial in `x` over ℚ(n).
    XPoly,
    /// Rational function of `x` alone.
    QRat,
    /// Rational function of `n` and `x`.
    XRat,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    NRat(NRat),
    XPoly(XPoly),
    QRat(QRat),
    XRat(XRat),
}

fn eval(e: &Expr) -> Result<XRat, LowerError> {
    let c = |r: BigRat| XRat::constant(NRat::from_rat(&r));
    Ok(match e {
        Expr::Int(a) => c(BigRat::from_integer(a.clone())),
        Expr::Rat(a, b) => {
            if b.is_zero() {
                return Err(LowerError::DivisionByZeroExpr);
            }
            c(BigRat::new(a.clone(), b.clone()))
        }
        Expr::Var(Var::N) => XRat::constant(NRat::n()),
        Expr::Var(Var::X) => XRat::from_poly(XPoly::x()),
        Expr::Neg(a) => eval(a)?.neg(),
        Expr::Add(a, b) => eval(a)?.add(&eval(b)?),
        Expr::Sub(a, b) => eval(a)?.sub(&eval(b)?),
        Expr::Mul(a, b) => eval(a)?.mul(&eval(b)?),
        Expr::Div(a, b) => {
            let d = eval(b)?;
            if d.is_zero() {
                return Err(LowerError::DivisionByZeroExpr);
            }
            eval(a)?.div(&d).map_err(|_| LowerError::DivisionByZeroExpr)?
        }
        Expr::Pow(a, k) => {
            let v = eval(a)?;
            let mag = u32::try_from(k.unsigned_abs()).map_err(|_| LowerError::ExponentRange(*k))?;
            if *k < 0 {
                if v.is_zero() {
                    return Err(LowerError::DivisionByZeroExpr);
                }
                v.inv().map_err(|_| LowerError::DivisionByZeroExpr)?.pow(mag)
            } else {
                v.pow(mag)
            }
        }
    })
}

fn x_constant(v: &XRat) -> Option<NRat> {
    (v.num().deg().unwrap_or(0) == 0 && v.den().deg() == Some(0)).then(|| v.num().coeff(0).div(&v.den().coeff(0)))
}

fn to_xpoly(v: &XRat) -> Option<XPoly> {
    if v.den().deg() != Some(0) {
        return None;
    }
    let d = v.den().coeff(0).inv();
    Some(v.num().scale(&d))
}

fn to_qrat(v: &XRat) -> Option<QRat> {
    let q = |p: &XPoly| -> Option<QPoly> { Some(QPoly::new(p.coeffs().iter().map(NRat::as_rat).collect::<Option<Vec<_>>>()?)) };
    Some(QRat::new(q(v.num())?, q(v.den())?))
}

/// Exact evaluation into the requested domain.
pub fn lower(e: &Expr, target: Target) -> Result<Value, LowerError> {
    let v = eval(e)?;
    match target {
        Target::NRat => x_constant(&v).map(Value::NRat).ok_or(LowerError::DomainMismatch("Q(n)")),
        Target::XPoly => to_xpoly(&v).map(Value::XPoly).ok_or(LowerError::DomainMismatch("Q(n)[x]")),
        Target::QRat => to_qrat(&v).map(Value::QRat).ok_or(LowerError::DomainMismatch("Q(x)")),
        Target::XRat => Ok(Value::XRat(v)),
    }
}

pub fn lower_nrat(e: &Expr) -> Result<NRat, LowerError> {
    match lower(e, Target::NRat)? {
        Value::NRat(v) => Ok(v),
        _ => unreachable!(),
    }
}

pub fn lower_xpoly(e: &Expr) -> Result<XPoly, LowerError> {
    match lower(e, Target::XPoly)? {
        Value::XPoly(v) => Ok(v),
        _ => unreachable!(),
    }
}

pub fn lower_qrat(e: &Expr) -> Result<QRat, LowerError> {
    match lower(e, Target::QRat)? {
        Value::QRat(v) => Ok(v),
        _ => unreachable!(),
    }
}

pub fn lower_xrat(e: &Expr) -> Result<XRat, LowerError> {
    match lower(e, Target::XRat)? {
        Value::XRat(v) => Ok(v),
        _ => unreachable!(),
    }
}

/// Canonical text; `lower(parse_expr(format_expr(v)))` gives back `v`.
pub fn format_expr(v: &Value) -> String {
    match v {
        Value::NRat(c) => c.to_string(),
        Value::XPoly(p) => p.to_string(),
        Value::QRat(r) => format_ratfn(r),
        Value::XRat(r) => format_ratfn(r),
    }
}

fn top_level_has(s: &str, ops: &[u8]) -> bool {
    let mut depth = 0i32;
    for (i, b) in s.bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ if depth == 0 && i > 0 && ops.contains(&b) => return true,
            _ => {}
        }
    }
    false
}

fn format_ratfn<C: Field>(r: &mixedct::arith::RatFn<C>) -> String {
    let num = r.num().to_string();
    if r.den().is_one() {
        return num;
    }
    let den = r.den().to_string();
    let num = if top_level_has(&num, b"+-") { format!("({num})") } else { num };
    let den = if top_level_has(&den, b"+-*/") || den.starts_with('-') { format!("({den})") } else { den };
    format!("{num}/{den}")
}
