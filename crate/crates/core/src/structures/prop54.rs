//! The Hamiltonian vector fields `H_a = ı(P)(da)` and their Schouten bracket,
//! split by which leg carries the vector field:
//!
//! * (2) `{{H_a, H_b}}_l - H_{x'}⊗x'' = ¼[b, [a, E⊗1]_*]`,
//! * (3) `{{H_a, H_b}}_r - x'⊗H_{x''} = -¼[b, [a, 1⊗E]_*]`,
//! * (4) `{{H_a, H_b}} - H_{{a,b}} = ¼[b, [a, E⊗1 - 1⊗E]_*]`,
//!
//! where `{{a, b}} = x'⊗x''`. These hold for all arrows exactly when (P1) does.

use crate::diffcalc::d;
use crate::ncalg::{tensor_string, Element, Symbol, Tensor};
use crate::polyvec::{schouten, BimoduleMap, PBracket};
use crate::quiver::DoubleQuiver;

use super::moment::euler;
use super::qp::QPStructure;
use super::report::CheckReport;
use super::tilde::{left_family, quarter_double_commutator, right_family};

/// `(l, r)`: the terms whose first, resp. second, leg has positive degree.
pub fn split_by_leg(t: &Tensor) -> (Tensor, Tensor) {
    let (mut l, mut r) = (Tensor::zero(2), Tensor::zero(2));
    for (legs, k) in t.terms() {
        if legs[0].degree() > 0 {
            l.add_term(legs.clone(), k.clone());
        } else {
            r.add_term(legs.clone(), k.clone());
        }
    }
    (l, r)
}

fn hamiltonian_of(x: &Element, ip: &BimoduleMap, dq: &DoubleQuiver) -> Element {
    ip.apply(&d(x, dq), dq)
}

/// The three residuals `(2), (3), (4)` for the arrows `c`, `d`.
pub fn leg_split_residuals(s: &QPStructure, c: usize, e: usize) -> [Tensor; 3] {
    let dq = &s.dq;
    let ip = s.iota_p();
    let pb = PBracket::from_bivector(&s.p, dq);
    let (a, b) = (Element::arrow(c, dq), Element::arrow(e, dq));
    let sn = schouten(dq);
    let hh = sn.bracket(&ip.image(Symbol::Diff(c)), &ip.image(Symbol::Diff(e)));
    let (l, r) = split_by_leg(&hh);
    let x = pb.on_arrows(c, e);
    let h_left = x.map_leg(0, |w| hamiltonian_of(&Element::from_word(w.clone()), &ip, dq));
    let h_right = x.map_leg(1, |w| hamiltonian_of(&Element::from_word(w.clone()), &ip, dq));
    let e_left = quarter_double_commutator(&a, &b, &left_family(|p| euler(p, dq), dq));
    let e_right = quarter_double_commutator(&a, &b, &right_family(|p| euler(p, dq), dq));
    let two = l - h_left.clone() - e_left.clone();
    let three = r - h_right.clone() + e_right.clone();
    let four = hh - h_left - h_right - e_left + e_right;
    [two, three, four]
}

pub fn check_prop54(s: &QPStructure) -> CheckReport {
    CheckReport::timed("prop54", |r| {
        let dq = &s.dq;
        for c in 0..dq.num_arrows() {
            for e in 0..dq.num_arrows() {
                let res = leg_split_residuals(s, c, e);
                for (item, t) in ["(2)", "(3)", "(4)"].iter().zip(&res) {
                    if !t.is_zero() {
                        r.fail(
                            format!("{item} for ({}, {})", dq.name(c), dq.name(e)),
                            Some(tensor_string(t, dq)),
                        );
                    }
                }
            }
        }
    })
}
