//! The double Lie algebroid `Ω̃_A = Ω_A ⊕ AEA` of a double quasi-Poisson
//! algebra, with the degree -1 bracket on `T_A Ω̃_A` given by
//!
//! * `{{da, b}} = {{a, b}}`,
//! * `{{da, db}} = d{{a, b}} + ¼[b, [a, E⊗1 - 1⊗E]_*]`, with `E⊗1 = Σ_p E_p⊗e_p`,
//!   the inner commutator in `a` and the outer one in `b`,
//! * `{{E, X}} = X⊗1 - 1⊗X`, per vertex `{{E_p, X}} = X e_p ⊗ e_p - e_p ⊗ e_p X`.

use crate::diffcalc::d_tensor;
use crate::ncalg::{qf, tensor_string, Element, Symbol, Tensor};
use crate::polyvec::{bimap::substitute_tensor, schouten, Bracket, BracketRules, BimoduleMap, PBracket};
use crate::quiver::DoubleQuiver;

use super::moment::euler;
use super::qp::QPStructure;
use super::report::CheckReport;

/// `Σ_p E_p ⊗ e_p` for the formal letters `E_p`, or for any per-vertex family.
pub fn left_family(f: impl Fn(crate::quiver::Vertex) -> Element, dq: &DoubleQuiver) -> Tensor {
    let mut out = Tensor::zero(2);
    for &p in dq.vertices() {
        out += &Tensor::pair(&f(p), &Element::idempotent(p));
    }
    out
}

/// `Σ_p e_p ⊗ E_p`.
pub fn right_family(f: impl Fn(crate::quiver::Vertex) -> Element, dq: &DoubleQuiver) -> Tensor {
    let mut out = Tensor::zero(2);
    for &p in dq.vertices() {
        out += &Tensor::pair(&Element::idempotent(p), &f(p));
    }
    out
}

/// `[a, t]_*` for the inner bimodule structure `a * (u ⊗ v) * b = u b ⊗ a v`.
pub fn inner_commutator(a: &Element, t: &Tensor) -> Tensor {
    t.inner(Some(a), None) - t.inner(None, Some(a))
}

/// `[a, t] = a t - t a` for the outer bimodule structure.
pub fn outer_commutator(a: &Element, t: &Tensor) -> Tensor {
    t.outer(Some(a), None) - t.outer(None, Some(a))
}

/// `¼[b, [a, t]_*]`, shared by the algebroid bracket and the Hamiltonian
/// bracket identities.
pub fn quarter_double_commutator(a: &Element, b: &Element, t: &Tensor) -> Tensor {
    outer_commutator(b, &inner_commutator(a, t)).scale(&qf(1, 4))
}

#[derive(Debug, Clone)]
pub struct TildeAlgebroid {
    pub pb: PBracket,
    e_minus: Tensor,
}

impl TildeAlgebroid {
    pub fn new(s: &QPStructure) -> Self {
        let dq = &s.dq;
        let letter = |p| Element::letter(Symbol::Euler(p), dq);
        TildeAlgebroid {
            pb: PBracket::from_bivector(&s.p, dq),
            e_minus: left_family(letter, dq) - right_family(letter, dq),
        }
    }

    pub fn bracket<'a>(&'a self, dq: &'a DoubleQuiver) -> Bracket<'a, TildeAlgebroid> {
        Bracket::new(self, dq)
    }
}

impl BracketRules for TildeAlgebroid {
    fn odd_shift(&self) -> bool {
        true
    }

    fn letters(&self, x: Symbol, y: Symbol, dq: &DoubleQuiver) -> Option<Tensor> {
        use Symbol::*;
        match (x, y) {
            (Arrow(_), Arrow(_)) => Some(Tensor::zero(2)),
            (Diff(c), Arrow(d)) => Some(self.pb.on_arrows(c, d)),
            (Diff(c), Diff(d)) => {
                let (a, b) = (Element::arrow(c, dq), Element::arrow(d, dq));
                Some(d_tensor(&self.pb.on_arrows(c, d), dq) + quarter_double_commutator(&a, &b, &self.e_minus))
            }
            (Euler(p), _) => {
                let e = Element::idempotent(p);
                let xl = Element::letter(y, dq);
                Some(Tensor::pair(&xl.mul(&e), &e) - Tensor::pair(&e, &e.mul(&xl)))
            }
            (_, Euler(_)) | (Arrow(_), Diff(_)) => None,
            _ => panic!("no algebroid rule for {x:?}, {y:?}"),
        }
    }
}

/// The anchor `Ω_A ⊕ AEA → D_A`: `dc ↦ ı(P)(dc)`, `E_p ↦ E_p`.
pub fn anchor(s: &QPStructure) -> BimoduleMap {
    let mut m = s.iota_p();
    for &p in s.dq.vertices() {
        m.set(Symbol::Euler(p), euler(p, &s.dq));
    }
    m
}

/// The generators `da`, `E_p` used for the Jacobi check.
pub fn generators(dq: &DoubleQuiver, with_arrows: bool) -> Vec<Element> {
    let mut out: Vec<Element> = (0..dq.num_arrows()).map(|c| Element::letter(Symbol::Diff(c), dq)).collect();
    out.extend(dq.vertices().iter().map(|&p| Element::letter(Symbol::Euler(p), dq)));
    if with_arrows {
        out.extend((0..dq.num_arrows()).map(|c| Element::arrow(c, dq)));
    }
    out
}

/// Double Jacobi on all generator triples, and the anchor as a bracket morphism
/// on generator pairs.
pub fn check_theorem53(s: &QPStructure, with_arrows: bool) -> CheckReport {
    CheckReport::timed("thm53", |r| {
        let dq = &s.dq;
        let t = TildeAlgebroid::new(s);
        let br = t.bracket(dq);
        let gens = generators(dq, with_arrows);
        let name = |x: &Element| crate::ncalg::element_string(x, dq);
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    let j = br.triple(x, y, z);
                    if !j.is_zero() {
                        r.fail(
                            format!("Jacobi ({}, {}, {})", name(x), name(y), name(z)),
                            Some(tensor_string(&j, dq)),
                        );
                    }
                }
            }
        }
        let rho = anchor(s);
        let sn = schouten(dq);
        for x in &gens {
            for y in &gens {
                let lhs = substitute_tensor(&br.bracket(x, y), &rho, dq);
                let rx = crate::polyvec::bimap::substitute(x, &rho, dq);
                let ry = crate::polyvec::bimap::substitute(y, &rho, dq);
                let rhs = sn.bracket(&rx, &ry);
                if lhs != rhs {
                    r.fail(
                        format!("anchor on ({}, {})", name(x), name(y)),
                        Some(tensor_string(&(lhs - rhs), dq)),
                    );
                }
            }
        }
        r.note("{{E_p, E_q}} taken from the {{E, X}} rule with X = E_q");
    })
}
