//! Identities relating Hamiltonian vector fields `H_a = ı(P)(da)` to the
//! compatible two-form, used when passing from (P1) to (B1).

use crate::diffcalc::{contract_i, contract_iota, d};
use crate::ncalg::{element_string, qf, tensor_string, Element, Symbol, Tensor};
use crate::polyvec::{pairing, DoubleDerivation};
use crate::quiver::Vertex;

use super::moment::euler;
use super::prop54::leg_split_residuals;
use super::qp::{QBStructure, QPStructure};
use super::report::CheckReport;
use super::tilde::{inner_commutator, left_family, quarter_double_commutator};

fn hamiltonians(s: &QPStructure) -> Vec<DoubleDerivation> {
    let ip = s.iota_p();
    (0..s.dq.num_arrows())
        .map(|c| DoubleDerivation::from_polyvector(&ip.image(Symbol::Diff(c)), &s.dq))
        .collect()
}

/// `ı_{H_a}ω = da - ¼ Σ_p [a, Φ_p^{-1}dΦ_p - dΦ_pΦ_p^{-1}]`,
/// `i_{H_a}(dΦ_p) = -½[a, Φ_p⊗e_p + e_p⊗Φ_p]_*` and
/// `ı_{E_p}dω = ½(Φ_p^{-1}dΦ_pΦ_p^{-1}dΦ_p - dΦ_pΦ_p^{-1}dΦ_pΦ_p^{-1}) = (1/6) ı_{E_p}(Φ_p^{-1}dΦ_p)³`.
pub fn check_lemma77(s: &QPStructure, w: &QBStructure) -> CheckReport {
    CheckReport::timed("lemma77", |r| {
        let dq = &s.dq;
        let phi = &s.phi;
        for (c, h) in hamiltonians(s).iter().enumerate() {
            let a = Element::arrow(c, dq);
            let mut rhs = Element::letter(Symbol::Diff(c), dq);
            for p in phi.vertices() {
                let m = phi.mc_difference(p, dq);
                rhs = &rhs - &(&a.mul(&m) - &m.mul(&a)).scale(&qf(1, 4));
            }
            let res = &contract_iota(h, &w.omega, dq) - &rhs;
            if !res.is_zero() {
                r.fail(format!("ı_H ω for {}", dq.name(c)), Some(element_string(&res, dq)));
            }
            for p in phi.vertices() {
                let f = phi.phi(p, dq);
                let e = Element::idempotent(p);
                let t = Tensor::pair(&f, &e) + Tensor::pair(&e, &f);
                let res = contract_i(h, &phi.dphi(p, dq), dq) + inner_commutator(&a, &t).scale(&qf(1, 2));
                if !res.is_zero() {
                    r.fail(format!("i_H dΦ_{p} for {}", dq.name(c)), Some(tensor_string(&res, dq)));
                }
            }
        }
        let dw = d(&w.omega, dq);
        for p in phi.vertices() {
            let ep = DoubleDerivation::euler(p, dq);
            let (ml, mr) = (phi.maurer_cartan(p, dq), phi.maurer_cartan_right(p, dq));
            let expected = (&ml.mul(&ml) - &mr.mul(&mr)).scale(&qf(1, 2));
            let res = &contract_iota(&ep, &dw, dq) - &expected;
            if !res.is_zero() {
                r.fail(format!("ı_E dω at {p}"), Some(element_string(&res, dq)));
            }
            let cube = ml.mul(&ml).mul(&ml);
            let res = &contract_iota(&ep, &cube, dq).scale(&qf(1, 6)) - &expected;
            if !res.is_zero() {
                r.fail(format!("ı_E (Φ⁻¹dΦ)³/6 at {p}"), Some(element_string(&res, dq)));
            }
        }
    })
}

/// Evaluates the leg-0 vector field of `t ∈ D_A ⊗ A` on `Φ_p`, giving a
/// three-tensor.
fn on_phi(t: &Tensor, s: &QPStructure, p: Vertex) -> Tensor {
    let f = s.phi.phi(p, &s.dq);
    t.expand_leg(0, 2, |w| {
        DoubleDerivation::from_polyvector(&Element::from_word(w.clone()), &s.dq).apply(&f, &s.dq)
    })
}

/// The Hamiltonian bracket identity with vector field leg evaluated on `dΦ⊗1`.
/// Both sides are computed separately; for quiver structures each side is
/// nonzero in general, so this is a genuine instance check.
pub fn check_lemma78(s: &QPStructure) -> CheckReport {
    CheckReport::timed("lemma78", |r| {
        let dq = &s.dq;
        let eul = left_family(|p| euler(p, dq), dq);
        let mut nonzero = 0;
        for c in 0..dq.num_arrows() {
            for e in 0..dq.num_arrows() {
                let (a, b) = (Element::arrow(c, dq), Element::arrow(e, dq));
                let rhs = quarter_double_commutator(&a, &b, &eul);
                let lhs = &leg_split_residuals(s, c, e)[0] + &rhs;
                for p in s.phi.vertices() {
                    let (l, rr) = (on_phi(&lhs, s, p), on_phi(&rhs, s, p));
                    if !rr.is_zero() {
                        nonzero += 1;
                    }
                    if l != rr {
                        r.fail(
                            format!("({}, {}) on dΦ_{p}", dq.name(c), dq.name(e)),
                            Some(tensor_string(&(l - rr), dq)),
                        );
                    }
                }
            }
        }
        r.note(format!("{nonzero} nonzero evaluations"));
    })
}

/// `pr₁ i_{H_a} ı_{H_b}(dω - (1/6)Σ_p(Φ_p^{-1}dΦ_p)³) = 0` for all arrows.
pub fn check_lemma710(s: &QPStructure, w: &QBStructure) -> CheckReport {
    CheckReport::timed("lemma710", |r| {
        let dq = &s.dq;
        let eta = &d(&w.omega, dq) - &w.phi.cartan_three_form(dq);
        let hs = hamiltonians(s);
        for (c, ha) in hs.iter().enumerate() {
            for (e, hb) in hs.iter().enumerate() {
                let res = pairing::pr1(&contract_i(ha, &contract_iota(hb, &eta, dq), dq));
                if !res.is_zero() {
                    r.fail(
                        format!("({}, {})", dq.name(c), dq.name(e)),
                        Some(tensor_string(&res, dq)),
                    );
                }
            }
        }
    })
}
