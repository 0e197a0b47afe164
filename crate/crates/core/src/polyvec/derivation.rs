//! Double derivations stored by their values on arrows.

use std::collections::BTreeMap;

use num::One;

use crate::ncalg::{Element, Symbol, Tensor, Word, Q};
use crate::quiver::{DoubleQuiver, Vertex};

/// A double derivation `A -> A ⊗ A` (outer bimodule structure), given by
/// `δ(c)` for every arrow `c` of the double quiver. Missing entries are zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DoubleDerivation {
    coords: BTreeMap<usize, Tensor>,
}

impl DoubleDerivation {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coords(coords: BTreeMap<usize, Tensor>) -> Self {
        let mut out = Self::zero();
        for (c, t) in coords {
            out.set(c, t);
        }
        out
    }

    pub fn set(&mut self, c: usize, t: Tensor) {
        if t.is_zero() {
            self.coords.remove(&c);
        } else {
            self.coords.insert(c, t);
        }
    }

    pub fn coord(&self, c: usize) -> Tensor {
        self.coords.get(&c).cloned().unwrap_or_else(|| Tensor::zero(2))
    }

    pub fn coords(&self) -> &BTreeMap<usize, Tensor> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// The coordinate derivation `∂/∂c`.
    pub fn partial(c: usize, dq: &DoubleQuiver) -> Self {
        let mut out = Self::zero();
        out.set(
            c,
            Tensor::pair(
                &Element::idempotent(dq.tail(c)),
                &Element::idempotent(dq.head(c)),
            ),
        );
        out
    }

    /// `E_p(c) = c e_p ⊗ e_p - e_p ⊗ e_p c`.
    pub fn euler(p: Vertex, dq: &DoubleQuiver) -> Self {
        let mut out = Self::zero();
        let e = Element::idempotent(p);
        for c in 0..dq.num_arrows() {
            let x = Element::arrow(c, dq);
            let t = Tensor::pair(&x.mul(&e), &e) - Tensor::pair(&e, &e.mul(&x));
            out.set(c, t);
        }
        out
    }

    /// `E = Σ_p E_p`.
    pub fn euler_total(dq: &DoubleQuiver) -> Self {
        let mut out = Self::zero();
        for &p in dq.vertices() {
            out = &out + &Self::euler(p, dq);
        }
        out
    }

    pub fn scale(&self, k: &Q) -> Self {
        Self::from_coords(self.coords.iter().map(|(c, t)| (*c, t.scale(k))).collect())
    }

    /// Value on a single letter of degree 0.
    pub fn on_letter(&self, s: Symbol, dq: &DoubleQuiver) -> Tensor {
        match s {
            Symbol::Arrow(c) => self.coord(c),
            Symbol::Inv(c) => {
                // δ(g) = -g δ(c c*) g, with δ(c c*) = δ(c) c* + c δ(c*).
                let g = Element::inv(c, dq);
                let cs = Element::arrow(c ^ 1, dq);
                let cc = Element::arrow(c, dq);
                let dcc = self.coord(c).outer(None, Some(&cs)) + self.coord(c ^ 1).outer(Some(&cc), None);
                -dcc.outer(Some(&g), Some(&g))
            }
            _ => panic!("double derivations act on algebra letters only"),
        }
    }

    /// `δ(w)` by the Leibniz rule for the outer structure.
    pub fn apply_word(&self, w: &Word, dq: &DoubleQuiver) -> Tensor {
        let mut out = Tensor::zero(2);
        for (i, &s) in w.syms.iter().enumerate() {
            if let Symbol::Arrow(c) = s {
                if !self.coords.contains_key(&c) {
                    continue;
                }
            }
            let v = self.on_letter(s, dq);
            if v.is_zero() {
                continue;
            }
            let pre = Element::from_word(w.slice(0, i, dq));
            let post = Element::from_word(w.slice(i + 1, w.len(), dq));
            out += &v.outer(Some(&pre), Some(&post));
        }
        out
    }

    pub fn apply(&self, x: &Element, dq: &DoubleQuiver) -> Tensor {
        let mut out = Tensor::zero(2);
        for (w, c) in x.terms() {
            out.add_scaled(&self.apply_word(w, dq), c);
        }
        out
    }

    /// The degree-one polyvector `Σ u ∂/∂c v` with `δ(c) = Σ v ⊗ u`.
    pub fn to_polyvector(&self, dq: &DoubleQuiver) -> Element {
        let mut out = Element::zero();
        for (&c, t) in &self.coords {
            let d = Element::letter(Symbol::Partial(c), dq);
            for (legs, k) in t.terms() {
                let u = Element::from_word(legs[1].clone());
                let v = Element::from_word(legs[0].clone());
                out.add_scaled(&u.mul(&d).mul(&v), k);
            }
        }
        out
    }

    /// Inverse of [`DoubleDerivation::to_polyvector`] on degree-one polyvectors.
    pub fn from_polyvector(x: &Element, dq: &DoubleQuiver) -> Self {
        let mut coords: BTreeMap<usize, Tensor> = BTreeMap::new();
        for (w, k) in x.terms() {
            let pos: Vec<usize> = (0..w.len()).filter(|&i| w.syms[i].degree() == 1).collect();
            assert_eq!(pos.len(), 1, "expected a degree-one polyvector");
            let i = pos[0];
            let Symbol::Partial(c) = w.syms[i] else {
                panic!("expected a partial-derivative letter");
            };
            let u = w.slice(0, i, dq);
            let v = w.slice(i + 1, w.len(), dq);
            let mut t = Tensor::zero(2);
            t.add_term(vec![v, u], k.clone());
            *coords.entry(c).or_insert_with(|| Tensor::zero(2)) += &t;
        }
        Self::from_coords(coords)
    }
}

impl std::ops::Add for &DoubleDerivation {
    type Output = DoubleDerivation;
    fn add(self, rhs: &DoubleDerivation) -> DoubleDerivation {
        let mut coords = self.coords.clone();
        for (c, t) in &rhs.coords {
            *coords.entry(*c).or_insert_with(|| Tensor::zero(2)) += t;
        }
        DoubleDerivation::from_coords(coords)
    }
}

impl std::ops::Sub for &DoubleDerivation {
    type Output = DoubleDerivation;
    fn sub(self, rhs: &DoubleDerivation) -> DoubleDerivation {
        self + &rhs.scale(&-Q::one())
    }
}

impl std::ops::Neg for &DoubleDerivation {
    type Output = DoubleDerivation;
    fn neg(self) -> DoubleDerivation {
        self.scale(&-Q::one())
    }
}
