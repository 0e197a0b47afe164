use num::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::ncalg::{parse_element, Element, Symbol, Tensor, Q};
use crate::quiver::{Arrow, DoubleQuiver, QuiverPresentation};
use crate::sample::{self, Alphabet};

fn basic() -> DoubleQuiver {
    QuiverPresentation::basic().double()
}

fn loop_quiver() -> DoubleQuiver {
    QuiverPresentation::new(vec![1], vec![Arrow { name: "a".into(), tail: 1, head: 1 }])
        .unwrap()
        .double()
}

fn p(s: &str, dq: &DoubleQuiver) -> Element {
    parse_element(s, dq).unwrap()
}

fn pair(x: &str, y: &str, dq: &DoubleQuiver) -> Tensor {
    Tensor::pair(&p(x, dq), &p(y, dq))
}

#[test]
fn partial_derivatives() {
    let dq = basic();
    let da = DoubleDerivation::partial(0, &dq);
    assert_eq!(da.apply(&p("a", &dq), &dq), pair("e_1", "e_2", &dq));
    assert!(da.apply(&p("a*", &dq), &dq).is_zero());
    assert_eq!(da.apply(&p("a a*", &dq), &dq), pair("e_1", "a*", &dq));
}

#[test]
fn euler_coordinates() {
    let dq = basic();
    let a = p("a", &dq);
    assert_eq!(DoubleDerivation::euler(1, &dq).apply(&a, &dq), -pair("e_1", "a", &dq));
    assert_eq!(DoubleDerivation::euler(2, &dq).apply(&a, &dq), pair("a", "e_2", &dq));
    assert_eq!(
        DoubleDerivation::euler_total(&dq).apply(&a, &dq),
        pair("a", "e_2", &dq) - pair("e_1", "a", &dq)
    );
    // E_1 = ∂/∂a* a* - a ∂/∂a as a polyvector.
    assert_eq!(
        DoubleDerivation::euler(1, &dq).to_polyvector(&dq),
        p("D(a*) a* - a D(a)", &dq)
    );
}

#[test]
fn polyvector_round_trip() {
    let dq = basic();
    let x = p("a* D(a*) g_a - 1/2 g_{a*} D(a) a", &dq);
    assert_eq!(DoubleDerivation::from_polyvector(&x, &dq).to_polyvector(&dq), x);
}

#[test]
fn derivation_on_inverse_matches_leibniz() {
    let dq = basic();
    let e = DoubleDerivation::euler_total(&dq);
    let g = p("g_a", &dq);
    let unit = p("e_1 + a a*", &dq);
    // δ(g (e + a a*)) = δ(e_1) = 0.
    let lhs = e.apply(&g, &dq).outer(None, Some(&unit)) + e.apply(&unit, &dq).outer(Some(&g), None);
    assert!(lhs.is_zero());
}

#[test]
fn schouten_generators() {
    let dq = basic();
    let sn = schouten(&dq);
    assert_eq!(sn.bracket(&p("D(a)", &dq), &p("a", &dq)), pair("e_1", "e_2", &dq));
    assert!(sn.bracket(&p("D(a)", &dq), &p("D(a*)", &dq)).is_zero());
    assert!(sn.bracket(&p("a", &dq), &p("a*", &dq)).is_zero());
}

fn euler_poly(dq: &DoubleQuiver) -> Element {
    DoubleDerivation::euler_total(dq).to_polyvector(dq)
}

// Relative `x ⊗ 1 - 1 ⊗ x`, i.e. `Σ_p x e_p ⊗ e_p - e_p ⊗ e_p x`.
fn one_legs(x: &Element, dq: &DoubleQuiver) -> Tensor {
    let mut out = Tensor::zero(2);
    for &v in dq.vertices() {
        let e = Element::idempotent(v);
        out += &Tensor::pair(&x.mul(&e), &e);
        out -= &Tensor::pair(&e, &e.mul(x));
    }
    out
}

#[test]
fn euler_bracket_on_letters() {
    let dq = basic();
    let sn = schouten(&dq);
    let e = euler_poly(&dq);
    for s in ["a", "a*", "g_a", "D(a)", "D(a*)", "a D(a) a*"] {
        let x = p(s, &dq);
        assert_eq!(sn.bracket(&e, &x), one_legs(&x, &dq), "{s}");
    }
}

fn random_poly(dq: &DoubleQuiver, deg: u32, rng: &mut ChaCha8Rng) -> Element {
    sample::element(dq, Alphabet::Poly, 2, 4, deg, rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn schouten_antisymmetry(seed in any::<u64>(), dx in 0u32..3, dy in 0u32..3) {
        let dq = basic();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_poly(&dq, dx, &mut rng);
        let y = random_poly(&dq, dy, &mut rng);
        let sn = schouten(&dq);
        let odd = (dx + 1) % 2 == 1 && (dy + 1) % 2 == 1;
        let sign = if odd { Q::one() } else { -Q::one() };
        prop_assert_eq!(sn.bracket(&x, &y), sn.bracket(&y, &x).swap().scale(&sign));
    }

    #[test]
    fn schouten_double_jacobi(seed in any::<u64>(), da in 0u32..3, db in 0u32..3, dc in 0u32..3) {
        let dq = if seed % 2 == 0 { basic() } else { loop_quiver() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_poly(&dq, da, &mut rng);
        let b = random_poly(&dq, db, &mut rng);
        let c = random_poly(&dq, dc, &mut rng);
        let sn = schouten(&dq);
        prop_assert!(sn.triple(&a, &b, &c).is_zero());
    }

    #[test]
    fn euler_bracket_general(seed in any::<u64>(), dx in 0u32..3) {
        let dq = basic();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_poly(&dq, dx, &mut rng);
        let sn = schouten(&dq);
        prop_assert_eq!(sn.bracket(&euler_poly(&dq), &x), one_legs(&x, &dq));
    }
}

#[test]
fn pairing_on_letters() {
    let dq = basic();
    let t = pairing::pair(&p("D(a)", &dq), &p("d(a)", &dq), &dq);
    assert_eq!(t, pair("e_1", "e_2", &dq));
    assert!(pairing::pair(&p("D(a)", &dq), &p("d(a*)", &dq), &dq).is_zero());
    // ⟨a ∂a a, d(a)⟩ = a ⊗ a.
    let t = pairing::pair(&p("a D(a) a", &dq), &p("d(a)", &dq), &dq);
    assert_eq!(t, pair("a", "a", &dq));
}

#[test]
fn bimodule_map_round_trip() {
    let dq = basic();
    // A two-form and its map on vector fields.
    let omega = p("d(a) d(a*) + 1/2 a* d(a) g_a d(a*) a", &dq);
    let alpha = iota_map(&omega, Generator::Vectors, &dq);
    assert!(alpha.is_antisymmetric(Generator::Vectors, &dq));
    let back = omega_from_map(&alpha, Generator::Vectors, &dq).unwrap();
    assert!(pairing::cyclic_multiple(&back, &omega, 1, &dq));
    let not_anti = BimoduleMap::from_images([(Symbol::Partial(0), p("d(a*)", &dq))]);
    assert!(!not_anti.is_antisymmetric(Generator::Vectors, &dq));
}

#[test]
fn adjoint_is_involutive() {
    let dq = basic();
    let alpha = BimoduleMap::from_images([
        (Symbol::Partial(0), p("a* d(a) g_a + d(a*)", &dq)),
        (Symbol::Partial(1), p("g_a d(a) a", &dq)),
    ]);
    let beta = alpha.adjoint(Generator::Vectors, Generator::Vectors, &dq);
    let again = beta.adjoint(Generator::Vectors, Generator::Vectors, &dq);
    assert_eq!(again, alpha);
    for x in Generator::Vectors.letters(&dq) {
        for z in Generator::Vectors.letters(&dq) {
            let xe = Element::letter(x, &dq);
            let ze = Element::letter(z, &dq);
            assert_eq!(
                pairing::pair(&alpha.image(x), &ze, &dq),
                pairing::pair(&xe, &beta.image(z), &dq)
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pairing_contract_matches_diffcalc(seed in any::<u64>(), deg in 1u32..4) {
        let dq = if seed % 2 == 0 { basic() } else { loop_quiver() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = sample::element(&dq, Alphabet::Poly, 2, 3, 1, &mut rng);
        let form = sample::element(&dq, Alphabet::Forms, 2, 4, deg, &mut rng);
        let delta = DoubleDerivation::from_polyvector(&v, &dq);
        prop_assert_eq!(
            pairing::contract(&v, &form, &dq),
            crate::diffcalc::contract_i(&delta, &form, &dq)
        );
    }

    #[test]
    fn reconstruction_identities(seed in any::<u64>(), deg in 1u32..4) {
        let dq = if seed % 2 == 0 { basic() } else { loop_quiver() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let form = sample::element(&dq, Alphabet::Forms, 2, 4, deg, &mut rng);
        let rec = pairing::reconstruct(&form, Generator::Vectors, &dq);
        prop_assert!(pairing::cyclic_multiple(&rec, &form, deg as i64, &dq));
        prop_assert_eq!(pairing::reconstruct_pr1(&form, Generator::Vectors, &dq), form);
    }
}
