//! The double bracket `{{-,-}}_P` of a bivector `P`.

use std::collections::BTreeMap;

use crate::ncalg::{Element, Symbol, Tensor};
use crate::quiver::DoubleQuiver;

use super::bracket::{Bracket, BracketRules};
use super::derivation::DoubleDerivation;

/// Values `{{c, d}}_P` on arrow pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PBracket {
    table: BTreeMap<(usize, usize), Tensor>,
}

impl PBracket {
    /// Reads `{{-,-}}_P` off a degree-two polyvector.
    ///
    /// A word `u ∂/∂c v ∂/∂d w` is `δΔ` with `δ = u ∂/∂c` and
    /// `Δ = v ∂/∂d w`, which contributes `w u ⊗ v` to `{{c, d}}` and
    /// `-v ⊗ w u` to `{{d, c}}`.
    pub fn from_bivector(p: &Element, dq: &DoubleQuiver) -> Self {
        let mut table: BTreeMap<(usize, usize), Tensor> = BTreeMap::new();
        for (word, k) in p.terms() {
            let pos: Vec<usize> = (0..word.len()).filter(|&i| word.syms[i].degree() == 1).collect();
            assert_eq!(pos.len(), 2, "expected a bivector");
            let (i, j) = (pos[0], pos[1]);
            let (Symbol::Partial(c), Symbol::Partial(d)) = (word.syms[i], word.syms[j]) else {
                panic!("expected partial-derivative letters");
            };
            let u = Element::from_word(word.slice(0, i, dq));
            let v = Element::from_word(word.slice(i + 1, j, dq));
            let w = Element::from_word(word.slice(j + 1, word.len(), dq));
            let wu = w.mul(&u);
            let t = Tensor::pair(&wu, &v).scale(k);
            *table.entry((c, d)).or_insert_with(|| Tensor::zero(2)) += &t;
            let t = Tensor::pair(&v, &wu).scale(k);
            *table.entry((d, c)).or_insert_with(|| Tensor::zero(2)) -= &t;
        }
        table.retain(|_, t| !t.is_zero());
        PBracket { table }
    }

    pub fn on_arrows(&self, c: usize, d: usize) -> Tensor {
        self.table.get(&(c, d)).cloned().unwrap_or_else(|| Tensor::zero(2))
    }

    pub fn bracket<'a>(&'a self, dq: &'a DoubleQuiver) -> Bracket<'a, PBracket> {
        Bracket::new(self, dq)
    }
}

impl BracketRules for PBracket {
    fn odd_shift(&self) -> bool {
        false
    }

    fn letters(&self, x: Symbol, y: Symbol, _dq: &DoubleQuiver) -> Option<Tensor> {
        match (x, y) {
            (Symbol::Arrow(c), Symbol::Arrow(d)) => Some(self.on_arrows(c, d)),
            _ => panic!("double brackets on A take algebra letters, got {x:?}, {y:?}"),
        }
    }
}

/// `H_a = {{a, -}}` as a double derivation.
pub fn hamiltonian<R: BracketRules>(br: &Bracket<'_, R>, a: &Element) -> DoubleDerivation {
    let dq = br.dq();
    let mut coords = BTreeMap::new();
    for c in 0..dq.num_arrows() {
        coords.insert(c, br.bracket(a, &Element::arrow(c, dq)));
    }
    DoubleDerivation::from_coords(coords)
}
