use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num::{One, Zero};

use super::element::Element;
use super::word::Word;
use super::Q;

/// Element of the n-th tensor power; each leg is a normal-form word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tensor {
    arity: usize,
    terms: BTreeMap<Vec<Word>, Q>,
}

fn koszul(bits: impl IntoIterator<Item = u32>) -> bool {
    bits.into_iter().sum::<u32>() % 2 == 1
}

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        Tensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, Q> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, legs: Vec<Word>, c: Q) {
        debug_assert_eq!(legs.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
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

    pub fn add_scaled(&mut self, other: &Tensor, c: &Q) {
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        if c.is_zero() {
            return;
        }
        for (legs, k) in &other.terms {
            self.add_term(legs.clone(), k * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Tensor {
        let mut out = Tensor::zero(self.arity);
        out.add_scaled(self, c);
        out
    }

    /// `x_1 ⊗ ⋯ ⊗ x_n`.
    pub fn product(legs: &[&Element]) -> Tensor {
        let mut acc: Vec<(Vec<Word>, Q)> = vec![(Vec::new(), Q::one())];
        for x in legs {
            let mut next = Vec::with_capacity(acc.len() * x.len());
            for (ws, c) in &acc {
                for (w, k) in x.terms() {
                    let mut ws2 = ws.clone();
                    ws2.push(w.clone());
                    next.push((ws2, c * k));
                }
            }
            acc = next;
        }
        let mut out = Tensor::zero(legs.len());
        for (ws, c) in acc {
            out.add_term(ws, c);
        }
        out
    }

    pub fn pair(x: &Element, y: &Element) -> Tensor {
        Tensor::product(&[x, y])
    }

    pub fn from_element(x: &Element) -> Tensor {
        Tensor::product(&[x])
    }

    /// Inverse of [`Tensor::from_element`] for arity-1 tensors.
    pub fn to_element(&self) -> Element {
        assert_eq!(self.arity, 1);
        Element::from_terms(self.terms.iter().map(|(l, c)| (l[0].clone(), c.clone())))
    }

    /// Applies a map that is linear in every leg simultaneously: each term
    /// `w_1 ⊗ ⋯ ⊗ w_n` is sent to `c · f(w_1, …, w_n)`.
    pub fn map_terms<F: FnMut(&[Word]) -> Tensor>(&self, arity: usize, mut f: F) -> Tensor {
        let mut out = Tensor::zero(arity);
        for (legs, c) in &self.terms {
            out.add_scaled(&f(legs), c);
        }
        out
    }

    /// Same as [`Tensor::map_terms`] with an element-valued map.
    pub fn map_to_element<F: FnMut(&[Word]) -> Element>(&self, mut f: F) -> Element {
        let mut out = Element::zero();
        for (legs, c) in &self.terms {
            out.add_scaled(&f(legs), c);
        }
        out
    }

    /// Replaces leg `i` by the image of a linear map.
    pub fn map_leg<F: FnMut(&Word) -> Element>(&self, i: usize, mut f: F) -> Tensor {
        let mut out = Tensor::zero(self.arity);
        for (legs, c) in &self.terms {
            for (w, k) in f(&legs[i]).terms() {
                let mut l2 = legs.clone();
                l2[i] = w.clone();
                out.add_term(l2, c * k);
            }
        }
        out
    }

    /// Replaces leg `i` by a tensor of arity `m`, giving arity `n + m - 1`.
    pub fn expand_leg<F: FnMut(&Word) -> Tensor>(&self, i: usize, m: usize, mut f: F) -> Tensor {
        let mut out = Tensor::zero(self.arity + m - 1);
        for (legs, c) in &self.terms {
            let img = f(&legs[i]);
            for (ws, k) in img.terms() {
                let mut l2 = legs[..i].to_vec();
                l2.extend(ws.iter().cloned());
                l2.extend_from_slice(&legs[i + 1..]);
                out.add_term(l2, c * k);
            }
        }
        out
    }

    pub fn left_mul_leg(&self, i: usize, x: &Element) -> Tensor {
        self.map_leg(i, |w| x.mul(&Element::from_word(w.clone())))
    }

    pub fn right_mul_leg(&self, i: usize, x: &Element) -> Tensor {
        self.map_leg(i, |w| Element::from_word(w.clone()).mul(x))
    }

    /// Outer bimodule action `x · t · y` (first leg on the left, last leg on the right).
    pub fn outer(&self, x: Option<&Element>, y: Option<&Element>) -> Tensor {
        let mut t = self.clone();
        if let Some(x) = x {
            t = t.left_mul_leg(0, x);
        }
        if let Some(y) = y {
            t = t.right_mul_leg(self.arity - 1, y);
        }
        t
    }

    /// Inner bimodule action on arity 2: `x * (u ⊗ v) * y = u y ⊗ x v`.
    pub fn inner(&self, x: Option<&Element>, y: Option<&Element>) -> Tensor {
        assert_eq!(self.arity, 2);
        let mut t = self.clone();
        if let Some(y) = y {
            t = t.right_mul_leg(0, y);
        }
        if let Some(x) = x {
            t = t.left_mul_leg(1, x);
        }
        t
    }

    /// Permutes legs: leg `j` of the input lands at `sigma[j]`, with the Koszul
    /// sign for the given leg degrees.
    pub fn permute_with<D: Fn(&Word) -> u32>(&self, sigma: &[usize], deg: D) -> Tensor {
        assert_eq!(sigma.len(), self.arity, "permutation arity mismatch");
        let mut out = Tensor::zero(self.arity);
        for (legs, c) in &self.terms {
            let degs: Vec<u32> = legs.iter().map(&deg).collect();
            let mut odd = false;
            for j in 0..legs.len() {
                for k in j + 1..legs.len() {
                    if sigma[j] > sigma[k] && degs[j] % 2 == 1 && degs[k] % 2 == 1 {
                        odd = !odd;
                    }
                }
            }
            let mut l2 = legs.clone();
            for (j, w) in legs.iter().enumerate() {
                l2[sigma[j]] = w.clone();
            }
            out.add_term(l2, if odd { -c.clone() } else { c.clone() });
        }
        out
    }

    pub fn permute(&self, sigma: &[usize]) -> Tensor {
        self.permute_with(sigma, |w| w.degree())
    }

    /// Graded swap `(u ⊗ v)° = ±v ⊗ u`.
    pub fn swap(&self) -> Tensor {
        self.permute(&[1, 0])
    }

    /// `°(c_1 ⊗ ⋯ ⊗ c_n) = ±c_n c_1 ⋯ c_{n-1}`.
    pub fn circ(&self) -> Element {
        self.map_to_element(|legs| {
            let n = legs.len();
            let last = legs[n - 1].degree();
            let rest: u32 = legs[..n - 1].iter().map(|w| w.degree()).sum();
            let mut acc = Element::from_word(legs[n - 1].clone());
            for w in &legs[..n - 1] {
                acc = acc.mul(&Element::from_word(w.clone()));
            }
            if koszul([last * rest]) {
                -acc
            } else {
                acc
            }
        })
    }

    /// Multiplies legs in order: `c_1 c_2 ⋯ c_n`.
    pub fn multiply_legs(&self) -> Element {
        self.map_to_element(|legs| {
            let mut acc = Element::from_word(legs[0].clone());
            for w in &legs[1..] {
                acc = acc.mul(&Element::from_word(w.clone()));
            }
            acc
        })
    }

    /// Multiplies legs `i` and `i + 1`.
    pub fn contract(&self, i: usize) -> Tensor {
        let mut out = Tensor::zero(self.arity - 1);
        for (legs, c) in &self.terms {
            for (w, k) in Element::mul_words(&legs[i], &legs[i + 1]).terms() {
                let mut l2 = legs[..i].to_vec();
                l2.push(w.clone());
                l2.extend_from_slice(&legs[i + 2..]);
                out.add_term(l2, c * k);
            }
        }
        out
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Tensor) -> Tensor {
        let mut out = Tensor::zero(self.arity + other.arity);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut l = a.clone();
                l.extend(b.iter().cloned());
                out.add_term(l, x * y);
            }
        }
        out
    }

    /// Total degree of each term, if homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self
            .terms
            .keys()
            .map(|l| l.iter().map(|w| w.degree()).sum::<u32>());
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }
}

impl AddAssign<&Tensor> for Tensor {
    fn add_assign(&mut self, rhs: &Tensor) {
        self.add_scaled(rhs, &Q::one());
    }
}

impl SubAssign<&Tensor> for Tensor {
    fn sub_assign(&mut self, rhs: &Tensor) {
        self.add_scaled(rhs, &-Q::one());
    }
}

impl Add for &Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Tensor {
    type Output = Tensor;
    fn add(mut self, rhs: Tensor) -> Tensor {
        self += &rhs;
        self
    }
}

impl Sub for Tensor {
    type Output = Tensor;
    fn sub(mut self, rhs: Tensor) -> Tensor {
        self -= &rhs;
        self
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        self.scale(&-Q::one())
    }
}

impl Neg for Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        -&self
    }
}
