//! A generic graded double bracket, extended from its values on letters.
//!
//! With `s(X) = |X| + shift`, the extension rules are
//!
//! * `{{X, YZ}} = {{X, Y}} Z + (-1)^{s(X)|Y|} Y {{X, Z}}` (outer actions),
//! * `{{X, Y}} = -(-1)^{s(X)s(Y)} {{Y, X}}°` with the graded leg swap,
//! * `{{X, g}} = -g {{X, c c*}} g` for `g = g_c`.

use std::cell::RefCell;
use std::collections::HashMap;

use num::One;

use crate::ncalg::{Element, Symbol, Tensor, Word, Q};
use crate::quiver::DoubleQuiver;

/// Generator data of a double bracket.
pub trait BracketRules {
    /// Whether `s(X) = |X| + shift` has odd shift (degree -1 brackets).
    fn odd_shift(&self) -> bool;

    /// `{{x, y}}` on letters other than inverses; `None` means "use
    /// antisymmetry with the swapped pair".
    fn letters(&self, x: Symbol, y: Symbol, dq: &DoubleQuiver) -> Option<Tensor>;
}

fn sgn(odd: bool) -> Q {
    if odd {
        -Q::one()
    } else {
        Q::one()
    }
}

/// Extends [`BracketRules`] to all elements, caching letter pairs.
pub struct Bracket<'a, R: BracketRules> {
    rules: &'a R,
    dq: &'a DoubleQuiver,
    cache: RefCell<HashMap<(Symbol, Symbol), Tensor>>,
}

impl<'a, R: BracketRules> Bracket<'a, R> {
    pub fn new(rules: &'a R, dq: &'a DoubleQuiver) -> Self {
        Bracket {
            rules,
            dq,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn dq(&self) -> &DoubleQuiver {
        self.dq
    }

    fn s_odd_deg(&self, deg: u32) -> bool {
        (deg % 2 == 1) != self.rules.odd_shift()
    }

    fn letter_pair(&self, x: Symbol, y: Symbol) -> Tensor {
        if let Some(t) = self.cache.borrow().get(&(x, y)) {
            return t.clone();
        }
        let t = self.letter_pair_uncached(x, y);
        self.cache.borrow_mut().insert((x, y), t.clone());
        t
    }

    fn letter_pair_uncached(&self, x: Symbol, y: Symbol) -> Tensor {
        let dq = self.dq;
        let xw = Word::letter(x, dq);
        if let Symbol::Inv(c) = y {
            let g = Element::inv(c, dq);
            let cc = Element::arrow(c, dq).mul(&Element::arrow(c ^ 1, dq));
            return -self.word_element(&xw, &cc).outer(Some(&g), Some(&g));
        }
        if matches!(x, Symbol::Inv(_)) {
            return self.antisym(&Word::letter(y, dq), &xw, |s| s.letter_pair(y, x));
        }
        if let Some(t) = self.rules.letters(x, y, dq) {
            return t;
        }
        let back = self
            .rules
            .letters(y, x, dq)
            .unwrap_or_else(|| panic!("no bracket rule for {x:?}, {y:?}"));
        self.antisym(&Word::letter(y, dq), &xw, |_| back.clone())
    }

    /// `{{X, Y}}` from `{{Y, X}}` (supplied by `f`).
    fn antisym<F: FnOnce(&Self) -> Tensor>(&self, y: &Word, x: &Word, f: F) -> Tensor {
        let odd = self.s_odd_deg(x.degree()) && self.s_odd_deg(y.degree());
        f(self).swap().scale(&-sgn(odd))
    }

    /// `{{x, Y}}` for a letter `x`, by Leibniz in `Y`.
    fn letter_word(&self, x: Symbol, y: &Word) -> Tensor {
        let dq = self.dq;
        let sx = self.s_odd_deg(x.degree());
        let mut out = Tensor::zero(2);
        let mut deg = 0u32;
        for (i, &s) in y.syms.iter().enumerate() {
            let v = self.letter_pair(x, s);
            if !v.is_zero() {
                let pre = Element::from_word(y.slice(0, i, dq));
                let post = Element::from_word(y.slice(i + 1, y.len(), dq));
                out.add_scaled(&v.outer(Some(&pre), Some(&post)), &sgn(sx && deg % 2 == 1));
            }
            deg += s.degree();
        }
        out
    }

    /// `{{X, y}}` for a word `X` and a letter `y`.
    fn word_letter(&self, x: &Word, y: Symbol) -> Tensor {
        match x.len() {
            0 => Tensor::zero(2),
            1 => self.letter_pair(x.syms[0], y),
            _ => self.antisym(&Word::letter(y, self.dq), x, |s| s.letter_word(y, x)),
        }
    }

    pub fn words(&self, x: &Word, y: &Word) -> Tensor {
        let dq = self.dq;
        let sx = self.s_odd_deg(x.degree());
        let mut out = Tensor::zero(2);
        let mut deg = 0u32;
        for (i, &s) in y.syms.iter().enumerate() {
            let v = self.word_letter(x, s);
            if !v.is_zero() {
                let pre = Element::from_word(y.slice(0, i, dq));
                let post = Element::from_word(y.slice(i + 1, y.len(), dq));
                out.add_scaled(&v.outer(Some(&pre), Some(&post)), &sgn(sx && deg % 2 == 1));
            }
            deg += s.degree();
        }
        out
    }

    fn word_element(&self, x: &Word, y: &Element) -> Tensor {
        let mut out = Tensor::zero(2);
        for (w, k) in y.terms() {
            out.add_scaled(&self.words(x, w), k);
        }
        out
    }

    /// `{{x, y}}`, bilinear.
    pub fn bracket(&self, x: &Element, y: &Element) -> Tensor {
        let mut out = Tensor::zero(2);
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                out.add_scaled(&self.words(u, v), &(a * b));
            }
        }
        out
    }

    /// `{{x, t}}_L = {{x, t'}} ⊗ t''` for a tensor `t` of arity n.
    pub fn bracket_left(&self, x: &Element, t: &Tensor) -> Tensor {
        t.expand_leg(0, 2, |w| self.bracket(x, &Element::from_word(w.clone())))
    }

    fn s_odd(&self, x: &Element) -> bool {
        self.s_odd_deg(x.degree().expect("homogeneous element"))
    }

    /// The double Jacobiator `{{a, b, c}}` on homogeneous elements.
    pub fn triple(&self, a: &Element, b: &Element, c: &Element) -> Tensor {
        let (sa, sb, sc) = (self.s_odd(a), self.s_odd(b), self.s_odd(c));
        let t1 = self.bracket_left(a, &self.bracket(b, c));
        let t2 = self
            .bracket_left(b, &self.bracket(c, a))
            .permute(&[1, 2, 0])
            .scale(&sgn(sa && (sb != sc)));
        let t3 = self
            .bracket_left(c, &self.bracket(a, b))
            .permute(&[2, 0, 1])
            .scale(&sgn(sc && (sa != sb)));
        t1 + t2 + t3
    }

    /// `{x, y} = {{x, y}}' {{x, y}}''`.
    pub fn mod_bracket(&self, x: &Element, y: &Element) -> Element {
        self.bracket(x, y).multiply_legs()
    }
}
