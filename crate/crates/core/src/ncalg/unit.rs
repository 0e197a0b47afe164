//! Syntactic unit recognition: products of `(e + c c*)^{±1}` and vertex sums of those.

use std::collections::BTreeMap;

use thiserror::Error;

use super::element::Element;
use crate::quiver::{DoubleQuiver, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnitError {
    #[error("not a recognized unit: {0}")]
    NotARecognizedUnit(String),
}

/// `e + c c*` or its inverse `g_c`; both live at `t(c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnitFactor {
    OnePlus(usize),
    Inv(usize),
}

impl UnitFactor {
    pub fn arrow(self) -> usize {
        match self {
            UnitFactor::OnePlus(c) | UnitFactor::Inv(c) => c,
        }
    }

    pub fn vertex(self, dq: &DoubleQuiver) -> Vertex {
        dq.tail(self.arrow())
    }

    pub fn inverse(self) -> Self {
        match self {
            UnitFactor::OnePlus(c) => UnitFactor::Inv(c),
            UnitFactor::Inv(c) => UnitFactor::OnePlus(c),
        }
    }

    pub fn element(self, dq: &DoubleQuiver) -> Element {
        match self {
            UnitFactor::OnePlus(c) => {
                let e = Element::idempotent(dq.tail(c));
                &e + &Element::arrow(c, dq).mul(&Element::arrow(c ^ 1, dq))
            }
            UnitFactor::Inv(c) => Element::inv(c, dq),
        }
    }
}

/// An ordered product of unit factors at one vertex (empty product = `e_p`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitProduct {
    pub vertex: Vertex,
    pub factors: Vec<UnitFactor>,
}

impl UnitProduct {
    pub fn element(&self, dq: &DoubleQuiver) -> Element {
        let mut acc = Element::idempotent(self.vertex);
        for f in &self.factors {
            acc = acc.mul(&f.element(dq));
        }
        acc
    }

    pub fn inverse(&self) -> UnitProduct {
        UnitProduct {
            vertex: self.vertex,
            factors: self.factors.iter().rev().map(|f| f.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &UnitProduct) -> UnitProduct {
        assert_eq!(self.vertex, other.vertex);
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().copied());
        UnitProduct {
            vertex: self.vertex,
            factors,
        }
    }
}

const MAX_FACTORS: usize = 4;

fn factorize(x: &Element, p: Vertex, cands: &[UnitFactor], depth: usize, dq: &DoubleQuiver) -> Option<Vec<UnitFactor>> {
    if *x == Element::idempotent(p) {
        return Some(Vec::new());
    }
    if depth == 0 {
        return None;
    }
    for &f in cands {
        let y = f.inverse().element(dq).mul(x);
        if let Some(mut rest) = factorize(&y, p, cands, depth - 1, dq) {
            rest.insert(0, f);
            return Some(rest);
        }
    }
    None
}

/// Recognizes `x` as a vertex sum of unit products.
pub fn recognize(x: &Element, dq: &DoubleQuiver) -> Result<Vec<UnitProduct>, UnitError> {
    let fail = || UnitError::NotARecognizedUnit(format!("{} terms", x.len()));
    if x.is_zero() {
        return Err(fail());
    }
    let mut parts: BTreeMap<Vertex, Element> = BTreeMap::new();
    for (w, c) in x.terms() {
        if !w.is_loop() || w.degree() != 0 {
            return Err(fail());
        }
        parts.entry(w.start).or_default().add_term(w.clone(), c.clone());
    }
    let mut out = Vec::new();
    for (p, comp) in parts {
        let cands: Vec<UnitFactor> = (0..dq.num_arrows())
            .filter(|&c| dq.tail(c) == p)
            .flat_map(|c| [UnitFactor::OnePlus(c), UnitFactor::Inv(c)])
            .collect();
        let factors = factorize(&comp, p, &cands, MAX_FACTORS, dq).ok_or_else(fail)?;
        out.push(UnitProduct { vertex: p, factors });
    }
    Ok(out)
}

/// Two-sided inverse of a recognized unit.
pub fn invert(x: &Element, dq: &DoubleQuiver) -> Result<Element, UnitError> {
    let mut out = Element::zero();
    for u in recognize(x, dq)? {
        out += &u.inverse().element(dq);
    }
    Ok(out)
}
