use num::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::quiver::{Arrow, QuiverPresentation};
use crate::sample::{self, Alphabet};

fn basic() -> crate::DoubleQuiver {
    QuiverPresentation::basic().double()
}

fn two_loops() -> crate::DoubleQuiver {
    QuiverPresentation::new(
        vec![1, 2],
        vec![
            Arrow { name: "a".into(), tail: 1, head: 2 },
            Arrow { name: "b".into(), tail: 2, head: 2 },
        ],
    )
    .unwrap()
    .double()
}

fn p(s: &str, dq: &crate::DoubleQuiver) -> Element {
    parse_element(s, dq).unwrap()
}

#[test]
fn multiply_examples() {
    let dq = basic();
    assert_eq!(p("a * a* * g_a", &dq), p("e_1 - g_a", &dq));
    assert_eq!(p("g_a * a", &dq), p("a", &dq).mul(&Element::inv(1, &dq)));
    assert!(p("a * a", &dq).is_zero());
    assert_eq!(element_string(&p("g_a * a", &dq), &dq), "a · g_{a*}");
}

#[test]
fn normal_form_examples() {
    let dq = basic();
    let w = Word::from_symbols(&[Symbol::Inv(0), Symbol::Arrow(0), Symbol::Arrow(1)], &dq).unwrap();
    assert_eq!(Element::normal_form(w), p("e_1 - g_a", &dq));
    assert_eq!(p("e_1 a e_2", &dq), p("a", &dq));
    let fixed = Word::from_symbols(&[Symbol::Arrow(1), Symbol::Inv(0)], &dq).unwrap();
    assert!(rewrite::is_normal(&fixed));
    assert_eq!(Element::normal_form(fixed.clone()), Element::from_word(fixed));
}

#[test]
fn invert_examples() {
    let dq = basic();
    assert_eq!(invert(&p("e_1 + a a*", &dq), &dq).unwrap(), p("g_a", &dq));
    assert_eq!(invert(&p("g_a", &dq), &dq).unwrap(), p("e_1 + a a*", &dq));
    assert!(matches!(invert(&p("a", &dq), &dq), Err(UnitError::NotARecognizedUnit(_))));
    let phi = p("e_1 + a a* + g_{a*}", &dq);
    let inv = invert(&phi, &dq).unwrap();
    assert_eq!(phi.mul(&inv), Element::one(&dq));
    assert_eq!(inv.mul(&phi), Element::one(&dq));
}

#[test]
fn invert_products() {
    let dq = two_loops();
    let x = p("(e_2 + a* a) g_b (e_2 + b* b)", &dq);
    let inv = invert(&x, &dq).unwrap();
    assert_eq!(x.mul(&inv), Element::idempotent(2));
    assert_eq!(inv.mul(&x), Element::idempotent(2));
}

#[test]
fn permute_and_circ() {
    let dq = basic();
    let u = p("a", &dq);
    let v = p("a*", &dq);
    let t = Tensor::pair(&u, &v);
    assert_eq!(t.permute(&[1, 0]), Tensor::pair(&v, &u));
    assert_eq!(t.permute(&[0, 1]), t);
    let du = p("d(a)", &dq);
    let dv = p("d(a*)", &dq);
    assert_eq!(Tensor::pair(&du, &dv).swap(), -Tensor::pair(&dv, &du));
    assert_eq!(t.circ(), v.mul(&u));
    assert_eq!(Tensor::pair(&du, &dv).circ(), -dv.mul(&du));
    assert_eq!(Tensor::from_element(&u).circ(), u);
}

#[test]
fn cyclic_examples() {
    let dq = basic();
    let u = p("a", &dq);
    let v = p("a* g_a", &dq);
    assert!(cyclic_reduce(&(&u.mul(&v) - &v.mul(&u)), &dq).is_zero());
    let x = p("d(a)", &dq);
    let y = p("d(a*)", &dq);
    assert!(cyclic_reduce(&(&x.mul(&y) + &y.mul(&x)), &dq).is_zero());
    // A non-loop word is a commutator.
    assert!(cyclic_reduce(&u, &dq).is_zero());
    // g_a a a* and g_a - g_a g_a differ by a commutator.
    let lhs = p("g_a a a*", &dq);
    assert_eq!(cyclic_reduce(&lhs, &dq), cyclic_reduce(&p("e_1 - g_a", &dq), &dq));
}

#[test]
fn printing_round_trip() {
    let dq = two_loops();
    let x = p("1/2 a g_{a*} b - 3 d(b) D(b*) + E_1 - dPhi*_2 + e_2", &dq);
    let s = element_string(&x, &dq);
    assert_eq!(parse_element(&s, &dq).unwrap(), x);
}

#[test]
fn rewriting_confluence_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for dq in [basic(), two_loops()] {
        for _ in 0..200 {
            let Some(w) = sample::reducible_word(&dq, 7, &mut rng) else { continue };
            let reference = Element::normal_form(w.clone());
            for k in 0..4usize {
                let mut i = k;
                let alt = rewrite::normal_form_with(w.clone(), |n| {
                    i = i.wrapping_mul(31).wrapping_add(17);
                    i % n
                });
                assert_eq!(alt, reference);
            }
        }
    }
}

fn dq_strategy() -> impl Strategy<Value = crate::DoubleQuiver> {
    prop_oneof![Just(basic()), Just(two_loops())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiply_is_associative(dq in dq_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = sample::element(&dq, Alphabet::Forms, 3, 4, 0, &mut rng);
        let y = sample::element(&dq, Alphabet::Forms, 3, 4, 1, &mut rng);
        let z = sample::element(&dq, Alphabet::Forms, 3, 4, 0, &mut rng);
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&(&y + &z)), &x.mul(&y) + &x.mul(&z));
        prop_assert_eq!(Element::one(&dq).mul(&x), x.clone());
    }

    #[test]
    fn graded_commutators_vanish(dq in dq_strategy(), seed in any::<u64>(), dx in 0u32..3, dy in 0u32..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = sample::element(&dq, Alphabet::Forms, 2, 5, dx, &mut rng);
        let y = sample::element(&dq, Alphabet::Poly, 2, 5, dy, &mut rng);
        let c = cyclic::graded_commutator(&x, &y);
        prop_assert!(cyclic_reduce(&c, &dq).is_zero());
    }

    #[test]
    fn cyclic_reduce_is_idempotent(dq in dq_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = sample::element(&dq, Alphabet::Forms, 4, 6, 2, &mut rng);
        let once = cyclic_reduce(&x, &dq);
        prop_assert_eq!(cyclic_reduce(once.element(), &dq), once);
    }
}

#[test]
fn zero_coefficients_are_dropped() {
    let dq = basic();
    let x = p("a - a", &dq);
    assert!(x.is_zero());
    assert!(x.terms().values().all(|c| !c.is_zero()));
}

fn normal_words(dq: &crate::DoubleQuiver, max_len: usize) -> Vec<Word> {
    let mut all: Vec<Word> = dq.vertices().iter().map(|&v| Word::idempotent(v)).collect();
    let mut frontier = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for c in 0..dq.num_arrows() {
                for s in [Symbol::Arrow(c), Symbol::Inv(c)] {
                    if let Some(v) = w.concat(&Word::letter(s, dq)) {
                        if rewrite::is_normal(&v) {
                            next.push(v);
                        }
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

#[test]
fn commutators_of_short_words_vanish() {
    for dq in [basic(), two_loops()] {
        let words = normal_words(&dq, 3);
        for u in &words {
            for v in &words {
                let x = Element::from_word(u.clone());
                let y = Element::from_word(v.clone());
                let c = &x.mul(&y) - &y.mul(&x);
                assert!(
                    cyclic_reduce(&c, &dq).is_zero(),
                    "[{}, {}]",
                    word_string(u, &dq),
                    word_string(v, &dq)
                );
            }
        }
    }
}
