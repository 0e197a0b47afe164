use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{One, Zero};

use super::rewrite::normal_form_from;
use super::symbol::Symbol;
use super::word::Word;
use super::Q;
use crate::quiver::{DoubleQuiver, Vertex};

/// A rational combination of normal-form words.
///
/// The same type carries algebra elements, forms (with `Diff` letters),
/// polyvectors (with `Partial` letters) and the formal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Element {
    terms: BTreeMap<Word, Q>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn idempotent(p: Vertex) -> Self {
        Self::from_word(Word::idempotent(p))
    }

    /// Sum of all vertex idempotents.
    pub fn one(dq: &DoubleQuiver) -> Self {
        let mut out = Self::zero();
        for &p in dq.vertices() {
            out.add_term(Word::idempotent(p), Q::one());
        }
        out
    }

    pub fn letter(s: Symbol, dq: &DoubleQuiver) -> Self {
        Self::from_word(Word::letter(s, dq))
    }

    pub fn arrow(c: usize, dq: &DoubleQuiver) -> Self {
        Self::letter(Symbol::Arrow(c), dq)
    }

    pub fn inv(c: usize, dq: &DoubleQuiver) -> Self {
        Self::letter(Symbol::Inv(c), dq)
    }

    /// A normal-form word, stored as is.
    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Q::one());
        Element { terms }
    }

    /// Normal form of a raw composable word.
    pub fn normal_form(w: Word) -> Self {
        normal_form_from(w, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Q)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (w, c) in it {
            out.add_term(w, c);
        }
        out
    }

    pub fn scalar(c: Q, x: &Element) -> Self {
        x.scale(&c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, Q> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, Q> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    /// Adds `c · w`; `w` must already be in normal form.
    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (w, k) in &other.terms {
            self.add_term(w.clone(), k * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Product `word · word`, normalized; zero when not composable.
    pub fn mul_words(x: &Word, y: &Word) -> Element {
        match x.concat(y) {
            None => Element::zero(),
            Some(w) => normal_form_from(w, x.len().saturating_sub(2)),
        }
    }

    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                if x.end != y.start {
                    continue;
                }
                let ab = a * b;
                for (w, k) in Element::mul_words(x, y).terms {
                    out.add_term(w, k * &ab);
                }
            }
        }
        out
    }

    pub fn product<'a, I: IntoIterator<Item = &'a Element>>(factors: I, dq: &DoubleQuiver) -> Element {
        let mut acc = Element::one(dq);
        for f in factors {
            acc = acc.mul(f);
        }
        acc
    }

    /// `e_p · self · e_q`.
    pub fn component(&self, p: Vertex, q: Vertex) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.start == p && w.end == q)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous degree, or `None` if mixed (zero counts as degree 0).
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|w| w.degree());
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Applies a linear map defined on words.
    pub fn map_words<F: FnMut(&Word) -> Element>(&self, mut f: F) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    /// Whether every letter is an algebra letter.
    pub fn is_algebra(&self) -> bool {
        self.terms.keys().all(|w| w.syms.iter().all(|s| s.is_algebra()))
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c.clone());
        }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        self -= &rhs;
        self
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        Element::mul(self, rhs)
    }
}

