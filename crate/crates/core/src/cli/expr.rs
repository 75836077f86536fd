//! Bracket-product expressions such as `[q,x,q/x;q] [q*x^2,q/x^2;q^2]`.
//!
//! ```text
//! exprs    := bracket { ws bracket } ;
//! bracket  := "[" base { "," base } ";" "q" [ "^" posint ] "]" ;
//! base     := [ "-" ] factor { ("*" | "/") factor } ;
//! factor   := "q" [ "^" int ] | "x" [ "^" int ] | int [ "/" posint ] ;
//! ```
//!
//! `/` between factors multiplies by the inverse factor. Whitespace is
//! allowed between any two tokens.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{Monomial, Rational};
use crate::qcomb::ProductSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at column {column}: {message}")]
pub struct ExprError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError { column: at + 1, message: message.into() })
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

    fn describe(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("'{}'", c as char),
            None => "end of input".to_string(),
        }
    }

    fn expect(&mut self, c: u8, what: &str) -> Result<(), ExprError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            let found = self.describe();
            self.err(self.pos, format!("expected {what}, found {found}"))
        }
    }

    fn digits(&mut self) -> Result<BigInt, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            let found = self.describe();
            return self.err(start, format!("expected digits, found {found}"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits parse"))
    }

    fn int(&mut self) -> Result<i64, ExprError> {
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let start = self.pos;
        let v = self.digits()?;
        let v = if negative { -v } else { v };
        match i64::try_from(v) {
            Ok(v) => Ok(v),
            Err(_) => self.err(start, "exponent out of range"),
        }
    }

    fn exponent(&mut self) -> Result<i64, ExprError> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.int()
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<Monomial, ExprError> {
        let start = self.pos;
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(Monomial::unit(self.exponent()?, 0))
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(Monomial::unit(0, self.exponent()?))
            }
            Some(c) if c.is_ascii_digit() || c == b'-' => {
                let at = self.pos;
                let negative = c == b'-';
                if negative {
                    self.pos += 1;
                }
                let num = self.digits()?;
                let num = if negative { -num } else { num };
                let mut value = Rational::from_integer(num);
                let save = self.pos;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    if matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                        let den_at = self.pos;
                        let den = self.digits()?;
                        if den.is_zero() {
                            return self.err(den_at, "zero denominator");
                        }
                        value /= Rational::from_integer(den);
                    } else {
                        self.pos = save;
                    }
                }
                if value.is_zero() {
                    return self.err(at, "zero coefficient");
                }
                Ok(Monomial::new(value, 0, 0).expect("nonzero"))
            }
            _ => {
                let found = self.describe();
                self.err(start.max(self.pos), format!("expected 'q', 'x' or an integer, found {found}"))
            }
        }
    }

    fn base(&mut self) -> Result<Monomial, ExprError> {
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let mut m = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    m = m.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    m = m.mul(&self.factor()?.inv());
                }
                _ => break,
            }
        }
        Ok(if negative { m.neg() } else { m })
    }

    fn bracket(&mut self) -> Result<ProductSpec, ExprError> {
        self.skip_ws();
        let open = self.pos;
        self.expect(b'[', "'['")?;
        let mut bases = vec![self.base()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            bases.push(self.base()?);
        }
        self.expect(b';', "',' or ';'")?;
        self.expect(b'q', "'q' after ';'")?;
        let mut modulus = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let d = self.digits()?;
            if d.is_zero() {
                return self.err(at, "zero modulus");
            }
            modulus = match u32::try_from(d) {
                Ok(d) => d,
                Err(_) => return self.err(at, "modulus out of range"),
            };
        }
        if self.peek() != Some(b']') {
            let found = self.describe();
            return self.err(self.pos, format!("expected ']' closing the bracket at column {}, found {found}", open + 1));
        }
        self.pos += 1;
        Ok(ProductSpec::new(bases, modulus).expect("nonempty with positive modulus"))
    }
}

/// Parses a whitespace-separated sequence of brackets.
pub fn parse_product_expr(src: &str) -> Result<Vec<ProductSpec>, ExprError> {
    if let Some((i, _)) = src.char_indices().find(|(_, c)| !c.is_ascii()) {
        return Err(ExprError { column: src[..i].chars().count() + 1, message: "non-ASCII character".into() });
    }
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let mut specs = vec![p.bracket()?];
    while p.peek().is_some() {
        specs.push(p.bracket()?);
    }
    Ok(specs)
}

fn render_power(name: &str, e: i64) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

/// Canonical text for a base, e.g. `q/x`, `-2/3*q*x^2`, `1/q^2`.
pub fn render_monomial(m: &Monomial) -> String {
    let c = m.coeff();
    let abs = c.abs();
    let mut up = Vec::new();
    if !abs.is_one() {
        up.push(abs.to_string());
    }
    let mut down = Vec::new();
    for (name, e) in [("q", m.q_exp()), ("x", m.x_exp())] {
        if e > 0 {
            up.push(render_power(name, e));
        } else if e < 0 {
            down.push(render_power(name, -e));
        }
    }
    if up.is_empty() {
        up.push("1".to_string());
    }
    let mut out = String::new();
    if c.is_negative() {
        out.push('-');
    }
    out.push_str(&up.join("*"));
    for d in down {
        out.push('/');
        out.push_str(&d);
    }
    out
}

pub fn render_spec(spec: &ProductSpec) -> String {
    let bases: Vec<String> = spec.bases().iter().map(render_monomial).collect();
    if spec.modulus() == 1 {
        format!("[{};q]", bases.join(","))
    } else {
        format!("[{};q^{}]", bases.join(","), spec.modulus())
    }
}

/// Renders several specs separated by single spaces.
pub struct RenderedExpr<'a>(pub &'a [ProductSpec]);

impl fmt::Display for RenderedExpr<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(render_spec).collect();
        f.write_str(&parts.join(" "))
    }
}
