//! Relative differential forms: `d`, contractions and Lie derivatives.
//!
//! Forms are words with `dc` letters. `d e_p = 0` and
//! `d g_c = -g_c (dc c* + c dc*) g_c`, so forms are free on the `dc`.

use num::One;

use crate::ncalg::{cyclic_reduce, Cyclic, Element, Symbol, Tensor, Word, Q};
use crate::polyvec::DoubleDerivation;
use crate::quiver::DoubleQuiver;

fn sign(odd: bool) -> Q {
    if odd {
        -Q::one()
    } else {
        Q::one()
    }
}

fn d_letter(s: Symbol, dq: &DoubleQuiver) -> Element {
    match s {
        Symbol::Arrow(c) => Element::letter(Symbol::Diff(c), dq),
        Symbol::Inv(c) => {
            let g = Element::inv(c, dq);
            let inner = Element::letter(Symbol::Diff(c), dq).mul(&Element::arrow(c ^ 1, dq))
                + Element::arrow(c, dq).mul(&Element::letter(Symbol::Diff(c ^ 1), dq));
            -g.mul(&inner).mul(&g)
        }
        Symbol::Diff(_) | Symbol::DPhi(_) => Element::zero(),
        other => panic!("d is not defined on {other:?}"),
    }
}

/// `d` on a single word, by the graded Leibniz rule.
pub fn d_word(w: &Word, dq: &DoubleQuiver) -> Element {
    let mut out = Element::zero();
    let mut deg = 0u32;
    for (i, &s) in w.syms.iter().enumerate() {
        let ds = d_letter(s, dq);
        if !ds.is_zero() {
            let pre = Element::from_word(w.slice(0, i, dq));
            let post = Element::from_word(w.slice(i + 1, w.len(), dq));
            out.add_scaled(&pre.mul(&ds).mul(&post), &sign(deg % 2 == 1));
        }
        deg += s.degree();
    }
    out
}

pub fn d(x: &Element, dq: &DoubleQuiver) -> Element {
    x.map_words(|w| d_word(w, dq))
}

/// `d` extended to tensors as a graded derivation over the legs.
pub fn d_tensor(t: &Tensor, dq: &DoubleQuiver) -> Tensor {
    let mut out = Tensor::zero(t.arity());
    for i in 0..t.arity() {
        let mut part = Tensor::zero(t.arity());
        for (legs, k) in t.terms() {
            let before: u32 = legs[..i].iter().map(|w| w.degree()).sum();
            let dl = d_word(&legs[i], dq);
            for (w, c) in dl.terms() {
                let mut l2 = legs.clone();
                l2[i] = w.clone();
                part.add_term(l2, k * c * sign(before % 2 == 1));
            }
        }
        out += &part;
    }
    out
}

/// `i_δ` on a word: degree -1 double derivation with `i_δ(dc) = δ(c)`.
pub fn contract_i_word(delta: &DoubleDerivation, w: &Word, dq: &DoubleQuiver) -> Tensor {
    let mut out = Tensor::zero(2);
    let mut deg = 0u32;
    for (i, &s) in w.syms.iter().enumerate() {
        if let Symbol::Diff(c) = s {
            let v = delta.coord(c);
            if !v.is_zero() {
                let pre = Element::from_word(w.slice(0, i, dq));
                let post = Element::from_word(w.slice(i + 1, w.len(), dq));
                out.add_scaled(&v.outer(Some(&pre), Some(&post)), &sign(deg % 2 == 1));
            }
        }
        deg += s.degree();
    }
    out
}

pub fn contract_i(delta: &DoubleDerivation, x: &Element, dq: &DoubleQuiver) -> Tensor {
    let mut out = Tensor::zero(2);
    for (w, c) in x.terms() {
        out.add_scaled(&contract_i_word(delta, w, dq), c);
    }
    out
}

/// `ı_δ = ° i_δ`; well defined on classes modulo graded commutators.
pub fn contract_iota(delta: &DoubleDerivation, x: &Element, dq: &DoubleQuiver) -> Element {
    contract_i(delta, x, dq).circ()
}

/// `L_δ = d i_δ + i_δ d`.
pub fn lie_l(delta: &DoubleDerivation, x: &Element, dq: &DoubleQuiver) -> Tensor {
    d_tensor(&contract_i(delta, x, dq), dq) + contract_i(delta, &d(x, dq), dq)
}

/// `𝓛_δ = ° L_δ`.
pub fn script_l(delta: &DoubleDerivation, x: &Element, dq: &DoubleQuiver) -> Element {
    lie_l(delta, x, dq).circ()
}

/// Class in the Karoubi–de Rham complex.
pub fn dr_class(x: &Element, dq: &DoubleQuiver) -> Cyclic {
    cyclic_reduce(x, dq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::parse_element;
    use crate::quiver::QuiverPresentation;
    use crate::sample::{self, Alphabet};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn basic() -> DoubleQuiver {
        QuiverPresentation::basic().double()
    }

    fn p(s: &str, dq: &DoubleQuiver) -> Element {
        parse_element(s, dq).unwrap()
    }

    #[test]
    fn d_examples() {
        let dq = basic();
        assert_eq!(d(&p("a", &dq), &dq), p("d(a)", &dq));
        assert_eq!(
            d(&p("g_a", &dq), &dq),
            -p("g_a (d(a) a* + a d(a*)) g_a", &dq)
        );
        assert!(d(&p("d(a)", &dq), &dq).is_zero());
        assert!(d(&p("e_1", &dq), &dq).is_zero());
    }

    #[test]
    fn contraction_examples() {
        let dq = basic();
        let da = DoubleDerivation::partial(0, &dq);
        assert_eq!(
            contract_i(&da, &p("d(a)", &dq), &dq),
            Tensor::pair(&p("e_1", &dq), &p("e_2", &dq))
        );
        assert!(contract_i(&da, &p("a a*", &dq), &dq).is_zero());
        // i_E(dΦ) = E(Φ) for Φ = e_1 + a a*.
        let e = DoubleDerivation::euler_total(&dq);
        let phi = p("e_1 + a a*", &dq);
        assert_eq!(contract_i(&e, &d(&phi, &dq), &dq), e.apply(&phi, &dq));
        // ı_{∂/∂a}(da da*) = da* up to idempotents.
        assert_eq!(contract_iota(&da, &p("d(a) d(a*)", &dq), &dq), p("d(a*)", &dq));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn d_squared_and_leibniz(seed in any::<u64>(), dx in 0u32..2, dy in 0u32..2) {
            let dq = basic();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = sample::element(&dq, Alphabet::Forms, 3, 5, dx, &mut rng);
            let y = sample::element(&dq, Alphabet::Forms, 3, 5, dy, &mut rng);
            prop_assert!(d(&d(&x, &dq), &dq).is_zero());
            let lhs = d(&x.mul(&y), &dq);
            let mut rhs = d(&x, &dq).mul(&y);
            rhs.add_scaled(&x.mul(&d(&y, &dq)), &sign(dx % 2 == 1));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn iota_ignores_commutators(seed in any::<u64>(), dx in 0u32..3) {
            let dq = basic();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = sample::element(&dq, Alphabet::Forms, 2, 4, dx, &mut rng);
            let y = sample::element(&dq, Alphabet::Forms, 2, 4, 2 - dx.min(2), &mut rng);
            let comm = crate::ncalg::cyclic::graded_commutator(&x, &y);
            let delta = DoubleDerivation::euler_total(&dq);
            let w = sample::element(&dq, Alphabet::Forms, 2, 4, 2, &mut rng);
            let lhs = contract_iota(&delta, &(&w + &comm), &dq);
            let rhs = contract_iota(&delta, &w, &dq);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
