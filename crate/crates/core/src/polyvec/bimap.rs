//! Morphisms between free bimodules, stored by their values on basis letters.
//!
//! A map on a direct sum is one map on the union of the bases, so block
//! matrices compose by plain composition.

use std::collections::BTreeMap;

use num::One;

use crate::ncalg::{Element, Symbol, Tensor, Q};
use crate::quiver::DoubleQuiver;

use super::pairing::{dual, pair, split_linear, Generator};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BimoduleMap {
    images: BTreeMap<Symbol, Element>,
}

impl BimoduleMap {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_images<I: IntoIterator<Item = (Symbol, Element)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (s, x) in it {
            out.set(s, x);
        }
        out
    }

    /// Builds a map on the basis of `kind` from a function of the basis letter.
    pub fn on_basis<F: FnMut(Symbol) -> Element>(kind: Generator, dq: &DoubleQuiver, mut f: F) -> Self {
        Self::from_images(kind.letters(dq).into_iter().map(|s| (s, f(s))))
    }

    pub fn identity(kinds: &[Generator], dq: &DoubleQuiver) -> Self {
        let mut out = Self::zero();
        for &k in kinds {
            out = out.union(&Self::on_basis(k, dq, |s| Element::letter(s, dq)));
        }
        out
    }

    pub fn set(&mut self, s: Symbol, x: Element) {
        if x.is_zero() {
            self.images.remove(&s);
        } else {
            self.images.insert(s, x);
        }
    }

    pub fn image(&self, s: Symbol) -> Element {
        self.images.get(&s).cloned().unwrap_or_default()
    }

    pub fn images(&self) -> &BTreeMap<Symbol, Element> {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.is_empty()
    }

    /// `u X v ↦ u α(X) v`, extended linearly.
    pub fn apply(&self, x: &Element, dq: &DoubleQuiver) -> Element {
        let mut out = Element::zero();
        for (w, k) in x.terms() {
            let (u, s, v) = split_linear(w, dq);
            let Some(img) = self.images.get(&s) else { continue };
            let y = Element::from_word(u).mul(img).mul(&Element::from_word(v));
            out.add_scaled(&y, k);
        }
        out
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &BimoduleMap, dq: &DoubleQuiver) -> BimoduleMap {
        Self::from_images(inner.images.iter().map(|(&s, x)| (s, self.apply(x, dq))))
    }

    /// Merges two maps; on shared letters the images are added.
    pub fn union(&self, other: &BimoduleMap) -> BimoduleMap {
        self + other
    }

    /// Restriction to the basis letters of the given kinds.
    pub fn restrict(&self, kinds: &[Generator], dq: &DoubleQuiver) -> BimoduleMap {
        let keep: Vec<Symbol> = kinds.iter().flat_map(|k| k.letters(dq)).collect();
        Self::from_images(
            self.images
                .iter()
                .filter(|(s, _)| keep.contains(s))
                .map(|(&s, x)| (s, x.clone())),
        )
    }

    pub fn scale(&self, k: &Q) -> BimoduleMap {
        Self::from_images(self.images.iter().map(|(&s, x)| (s, x.scale(k))))
    }

    /// The adjoint `β` with `⟨α(X), Z⟩ = ⟨X, β(Z)⟩`, defined on the basis of
    /// `target`, where `α` is defined on the basis of `source`.
    pub fn adjoint(&self, source: Generator, target: Generator, dq: &DoubleQuiver) -> BimoduleMap {
        let src = source.letters(dq);
        Self::on_basis(target, dq, |z| {
            let z = Element::letter(z, dq);
            let mut out = Element::zero();
            for &x in &src {
                let xd = Element::letter(dual(x).unwrap(), dq);
                let t = pair(&self.image(x), &z, dq);
                out += &t.map_to_element(|legs| {
                    Element::from_word(legs[0].clone())
                        .mul(&xd)
                        .mul(&Element::from_word(legs[1].clone()))
                });
            }
            out
        })
    }

    /// `⟨p, α(p')⟩ = -⟨p', α(p)⟩°` on all basis pairs of `source`.
    pub fn is_antisymmetric(&self, source: Generator, dq: &DoubleQuiver) -> bool {
        let letters = source.letters(dq);
        letters.iter().all(|&p| {
            letters.iter().all(|&p2| {
                let lhs = pair(&Element::letter(p, dq), &self.image(p2), dq);
                let rhs = pair(&Element::letter(p2, dq), &self.image(p), dq).swap();
                lhs == -rhs
            })
        })
    }

    /// The degree-two element `-½ Σ_α α(p_α) q_α` whose `ı` is this map.
    pub fn to_two_form(&self, source: Generator, dq: &DoubleQuiver) -> Element {
        let mut out = Element::zero();
        for p in source.letters(dq) {
            let q = Element::letter(dual(p).unwrap(), dq);
            out += &self.image(p).mul(&q);
        }
        out.scale(&Q::new((-1).into(), 2.into()))
    }
}

/// `ı(ω)`: the map `p ↦ ı_p(ω)` on the basis of `source`.
pub fn iota_map(omega: &Element, source: Generator, dq: &DoubleQuiver) -> BimoduleMap {
    BimoduleMap::on_basis(source, dq, |p| super::pairing::iota(&Element::letter(p, dq), omega, dq))
}

/// Inverse of [`iota_map`] on anti-symmetric maps.
pub fn omega_from_map(
    alpha: &BimoduleMap,
    source: Generator,
    dq: &DoubleQuiver,
) -> Result<Element, NotAntisymmetric> {
    if !alpha.is_antisymmetric(source, dq) {
        return Err(NotAntisymmetric);
    }
    Ok(alpha.to_two_form(source, dq))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("map is not anti-symmetric")]
pub struct NotAntisymmetric;

impl std::ops::Add for &BimoduleMap {
    type Output = BimoduleMap;
    fn add(self, rhs: &BimoduleMap) -> BimoduleMap {
        let mut out = self.clone();
        for (&s, x) in &rhs.images {
            let sum = &out.image(s) + x;
            out.set(s, sum);
        }
        out
    }
}

impl std::ops::Sub for &BimoduleMap {
    type Output = BimoduleMap;
    fn sub(self, rhs: &BimoduleMap) -> BimoduleMap {
        self + &rhs.scale(&-Q::one())
    }
}

impl std::ops::Neg for &BimoduleMap {
    type Output = BimoduleMap;
    fn neg(self) -> BimoduleMap {
        self.scale(&-Q::one())
    }
}

/// Letter-wise substitution: an algebra morphism of tensor algebras fixing `A`
/// and sending each degree-one letter to the given element.
pub fn substitute(x: &Element, images: &BimoduleMap, dq: &DoubleQuiver) -> Element {
    x.map_words(|w| {
        let mut acc = Element::from_word(crate::ncalg::Word::idempotent(w.start));
        for &s in &w.syms {
            let f = if s.degree() == 0 {
                Element::letter(s, dq)
            } else {
                images.image(s)
            };
            acc = acc.mul(&f);
            if acc.is_zero() {
                break;
            }
        }
        acc
    })
}

/// [`substitute`] on every leg of a tensor.
pub fn substitute_tensor(t: &Tensor, images: &BimoduleMap, dq: &DoubleQuiver) -> Tensor {
    let mut out = t.clone();
    for i in 0..t.arity() {
        out = out.map_leg(i, |w| substitute(&Element::from_word(w.clone()), images, dq));
    }
    out
}
