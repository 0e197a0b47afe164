//! Canonical printing and a small expression parser.
//!
//! Letters print as `a`, `a*`, `g_a` (`g_{a*}` for longer names), `d(a)`,
//! `D(a)` for `∂/∂a`, `E_1`, `E*_1`, `dPhi_1`, `dPhi*_1`; idempotents as `e_1`.

use num::{One, Signed, Zero};
use thiserror::Error;

use super::element::Element;
use super::symbol::Symbol;
use super::tensor::Tensor;
use super::word::Word;
use super::Q;
use crate::quiver::{DoubleQuiver, Vertex};

pub fn symbol_string(s: Symbol, dq: &DoubleQuiver) -> String {
    match s {
        Symbol::Arrow(c) => dq.name(c).to_string(),
        Symbol::Inv(c) => {
            let n = dq.name(c);
            if n.len() == 1 {
                format!("g_{n}")
            } else {
                format!("g_{{{n}}}")
            }
        }
        Symbol::Diff(c) => format!("d({})", dq.name(c)),
        Symbol::Partial(c) => format!("D({})", dq.name(c)),
        Symbol::Euler(p) => format!("E_{p}"),
        Symbol::EStar(p) => format!("E*_{p}"),
        Symbol::DPhi(p) => format!("dPhi_{p}"),
        Symbol::DPhiStar(p) => format!("dPhi*_{p}"),
    }
}

pub fn word_string(w: &Word, dq: &DoubleQuiver) -> String {
    if w.is_empty() {
        return format!("e_{}", w.start);
    }
    w.syms
        .iter()
        .map(|&s| symbol_string(s, dq))
        .collect::<Vec<_>>()
        .join(" · ")
}

fn push_term(out: &mut String, c: &Q, body: &str) {
    if out.is_empty() {
        if c.is_negative() {
            out.push('-');
        }
    } else if c.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let mag = c.abs();
    if !mag.is_one() {
        out.push_str(&mag.to_string());
        out.push(' ');
    }
    out.push_str(body);
}

pub fn element_string(x: &Element, dq: &DoubleQuiver) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (w, c) in x.terms() {
        push_term(&mut out, c, &word_string(w, dq));
    }
    out
}

pub fn tensor_string(t: &Tensor, dq: &DoubleQuiver) -> String {
    if t.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (legs, c) in t.terms() {
        let body = legs
            .iter()
            .map(|w| word_string(w, dq))
            .collect::<Vec<_>>()
            .join(" ⊗ ");
        push_term(&mut out, c, &format!("({body})"));
    }
    out
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at offset {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    dq: &'a DoubleQuiver,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek_str(&self) -> &str {
        std::str::from_utf8(&self.src[self.pos..]).unwrap_or("")
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.peek_str().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn number(&mut self) -> Option<num::BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    /// An arrow name with an optional attached star.
    fn arrow_name(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        self.eat("{");
        self.skip_ws();
        let Some(mut name) = self.ident() else {
            return self.err("expected arrow name");
        };
        if self.src.get(self.pos) == Some(&b'*') {
            let starred = format!("{name}*");
            let next = self.src.get(self.pos + 1).copied();
            let attached = !matches!(next, Some(c) if c.is_ascii_alphanumeric() || c == b'(');
            if attached && self.dq.index_of(&starred).is_some() {
                self.pos += 1;
                name = starred;
            }
        }
        self.eat("}");
        match self.dq.index_of(&name) {
            Some(c) => Ok(c),
            None => self.err(format!("unknown arrow `{name}`")),
        }
    }

    fn vertex(&mut self) -> Result<Vertex, ParseError> {
        self.eat("{");
        let Some(n) = self.number() else {
            return self.err("expected vertex label");
        };
        self.eat("}");
        let v: Vertex = n.try_into().map_err(|_| ParseError {
            pos: self.pos,
            message: "vertex label out of range".into(),
        })?;
        if self.dq.vertex_position(v).is_none() {
            return self.err(format!("unknown vertex {v}"));
        }
        Ok(v)
    }

    fn letter(&mut self, s: Symbol) -> Element {
        Element::letter(s, self.dq)
    }

    fn atom(&mut self) -> Result<Element, ParseError> {
        self.skip_ws();
        let rest = self.peek_str();
        if rest.starts_with('(') {
            self.pos += 1;
            let x = self.expr()?;
            if !self.eat(")") {
                return self.err("expected `)`");
            }
            return Ok(x);
        }
        if rest.starts_with(|c: char| c.is_ascii_digit()) {
            let n = self.number().expect("digit present");
            let mut c = Q::from_integer(n);
            if self.eat("/") {
                self.skip_ws();
                match self.number() {
                    Some(d) if !d.is_zero() => c /= Q::from_integer(d),
                    _ => return self.err("expected nonzero denominator"),
                }
            }
            return Ok(Element::one(self.dq).scale(&c));
        }
        for (prefix, kind) in [("dPhi*_", 3u8), ("dPhi_", 2), ("E*_", 1), ("E_", 0)] {
            if rest.starts_with(prefix) {
                self.pos += prefix.len();
                let v = self.vertex()?;
                let s = match kind {
                    0 => Symbol::Euler(v),
                    1 => Symbol::EStar(v),
                    2 => Symbol::DPhi(v),
                    _ => Symbol::DPhiStar(v),
                };
                return Ok(self.letter(s));
            }
        }
        if rest.starts_with("d(") || rest.starts_with("D(") {
            let partial = rest.starts_with('D');
            self.pos += 2;
            let c = self.arrow_name()?;
            if !self.eat(")") {
                return self.err("expected `)`");
            }
            let s = if partial { Symbol::Partial(c) } else { Symbol::Diff(c) };
            return Ok(self.letter(s));
        }
        if rest.starts_with("e_") {
            self.pos += 2;
            let v = self.vertex()?;
            return Ok(Element::idempotent(v));
        }
        if rest.starts_with("g_") {
            self.pos += 2;
            let c = self.arrow_name()?;
            return Ok(self.letter(Symbol::Inv(c)));
        }
        let c = self.arrow_name()?;
        Ok(self.letter(Symbol::Arrow(c)))
    }

    fn starts_atom(&mut self) -> bool {
        self.skip_ws();
        matches!(self.src.get(self.pos), Some(c) if c.is_ascii_alphanumeric() || *c == b'(')
    }

    fn term(&mut self) -> Result<Element, ParseError> {
        let mut x = self.atom()?;
        loop {
            if self.eat("*") || self.eat("·") || self.starts_atom() {
                x = x.mul(&self.atom()?);
            } else {
                return Ok(x);
            }
        }
    }

    fn expr(&mut self) -> Result<Element, ParseError> {
        let mut acc = if self.eat("-") { -self.term()? } else { self.term()? };
        loop {
            if self.eat("+") {
                acc += &self.term()?;
            } else if self.eat("-") {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }
}

/// Parses an expression such as `g_a * a` or `1/2 (e_1 + a a*)`.
///
/// Juxtaposition multiplies. A `*` glued to an arrow name is read as the
/// star when that reversed arrow exists and no letter follows directly.
pub fn parse_element(text: &str, dq: &DoubleQuiver) -> Result<Element, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        dq,
    };
    let x = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return p.err("unexpected trailing input");
    }
    Ok(x)
}
