//! The conversion diagram between `Ω_A`, `D_A` and the four rank-one free
//! bimodules on the formal letters `E_p`, `E*_p`, `dΦ_p`, `(dΦ_p)*`.
//!
//! Every map is a [`BimoduleMap`] keyed by basis letter. Since the letters of
//! the six bimodules are distinct, all horizontal maps combine into one map
//! `H = e ∪ T⁰ ∪ c ∪ S⁰` and all vertical maps into `V = ı(P) ∪ ı(ω) ∪ ȷ ∪ ı`,
//! and the doubly infinite diagram is the pair `(H, V)`.

use crate::ncalg::{element_string, qf, Element, Symbol, Tensor};
use crate::polyvec::pairing::{self, split_linear};
use crate::polyvec::{BimoduleMap, DoubleDerivation, Generator};
use crate::quiver::DoubleQuiver;

use super::moment::{euler, sandwich_swapped};
use super::qp::{QBStructure, QPStructure};
use super::report::CheckReport;

const ALL: [Generator; 6] = [
    Generator::Forms,
    Generator::Vectors,
    Generator::Euler,
    Generator::EStar,
    Generator::DPhi,
    Generator::DPhiStar,
];

/// The formal generators only.
const FORMAL: [Generator; 4] = [Generator::EStar, Generator::DPhiStar, Generator::DPhi, Generator::Euler];

#[derive(Debug, Clone)]
pub struct DiagramMaps {
    pub dq: DoubleQuiver,
    /// `AdΦA → Ω_A` and `AEA → D_A`.
    pub c: BimoduleMap,
    /// `Ω_A → AE*A` and `D_A → A(dΦ)*A`.
    pub e: BimoduleMap,
    /// `AdΦA → AEA` and `AEA → AdΦA`.
    pub iota: BimoduleMap,
    /// `AE*A → A(dΦ)*A` and `A(dΦ)*A → AE*A`.
    pub jmath: BimoduleMap,
    pub s0: BimoduleMap,
    pub t0: BimoduleMap,
    pub iota_p: BimoduleMap,
    pub iota_omega: BimoduleMap,
}

fn letter(s: Symbol, dq: &DoubleQuiver) -> Element {
    Element::letter(s, dq)
}

pub fn build_diagram(p: &QPStructure, w: &QBStructure) -> DiagramMaps {
    let dq = &p.dq;
    let phi = &p.phi;
    let half = qf(1, 2);
    let verts: Vec<_> = dq.vertices().to_vec();

    let mut c = BimoduleMap::zero();
    let mut e = BimoduleMap::zero();
    let mut iota = BimoduleMap::zero();
    let mut jmath = BimoduleMap::zero();
    let mut s0 = BimoduleMap::zero();
    let mut t0 = BimoduleMap::zero();
    for &v in &verts {
        let f = phi.phi(v, dq);
        let g = phi.phi_inv(v, dq);
        let (ef, es, df, ds) = (
            letter(Symbol::Euler(v), dq),
            letter(Symbol::EStar(v), dq),
            letter(Symbol::DPhi(v), dq),
            letter(Symbol::DPhiStar(v), dq),
        );
        c.set(Symbol::DPhi(v), phi.dphi(v, dq));
        c.set(Symbol::Euler(v), euler(v, dq));
        iota.set(Symbol::DPhi(v), (&ef.mul(&f) + &f.mul(&ef)).scale(&half));
        iota.set(Symbol::Euler(v), (&g.mul(&df) + &df.mul(&g)).scale(&half));
        jmath.set(Symbol::DPhiStar(v), (&g.mul(&es) + &es.mul(&g)).scale(&-half.clone()));
        jmath.set(Symbol::EStar(v), (&f.mul(&ds) + &ds.mul(&f)).scale(&-half.clone()));
        s0.set(Symbol::DPhiStar(v), &ef.mul(&g) - &g.mul(&ef));
        t0.set(Symbol::EStar(v), &g.mul(&df) - &df.mul(&g));
    }
    for a in 0..dq.num_arrows() {
        let x = Element::arrow(a, dq);
        let img = &x.mul(&letter(Symbol::EStar(dq.head(a)), dq)) - &letter(Symbol::EStar(dq.tail(a)), dq).mul(&x);
        e.set(Symbol::Diff(a), img);
        let delta = DoubleDerivation::partial(a, dq);
        let mut img = Element::zero();
        for &v in &verts {
            let t: Tensor = delta.apply(&phi.phi(v, dq), dq);
            img += &sandwich_swapped(&t, &letter(Symbol::DPhiStar(v), dq));
        }
        e.set(Symbol::Partial(a), img);
    }
    DiagramMaps {
        dq: dq.clone(),
        c,
        e,
        iota,
        jmath,
        s0,
        t0,
        iota_p: p.iota_p(),
        iota_omega: w.iota_omega(),
    }
}

impl DiagramMaps {
    pub fn horizontal(&self) -> BimoduleMap {
        self.e.union(&self.t0).union(&self.c).union(&self.s0)
    }

    pub fn vertical(&self) -> BimoduleMap {
        self.iota_p.union(&self.iota_omega).union(&self.jmath).union(&self.iota)
    }

    /// `S = c S⁰ e` on `D_A`.
    pub fn s(&self) -> BimoduleMap {
        self.c.compose(&self.s0.compose(&self.e.restrict(&[Generator::Vectors], &self.dq), &self.dq), &self.dq)
    }

    /// `T = c T⁰ e` on `Ω_A`.
    pub fn t(&self) -> BimoduleMap {
        self.c.compose(&self.t0.compose(&self.e.restrict(&[Generator::Forms], &self.dq), &self.dq), &self.dq)
    }

    fn on(&self, m: &BimoduleMap, kinds: &[Generator]) -> BimoduleMap {
        m.restrict(kinds, &self.dq)
    }

    /// `ω̄ : D_A ⊕ AdΦA → Ω_A ⊕ AEA`.
    pub fn omega_bar(&self) -> BimoduleMap {
        let dq = &self.dq;
        let quarter = qf(1, 4);
        let vec = [Generator::Vectors];
        let dphi = [Generator::DPhi];
        let col1 = self.on(&self.iota_omega, &vec).union(&self.s0.compose(&self.on(&self.e, &vec), dq).scale(&quarter));
        let col2 = &self.on(&self.c, &dphi) - &self.on(&self.iota, &dphi);
        col1.union(&col2)
    }

    /// `P̄ : Ω_A ⊕ AEA → D_A ⊕ AdΦA`.
    pub fn p_bar(&self) -> BimoduleMap {
        let dq = &self.dq;
        let quarter = qf(1, 4);
        let forms = [Generator::Forms];
        let eul = [Generator::Euler];
        let col1 = self.on(&self.iota_p, &forms).union(&self.t0.compose(&self.on(&self.e, &forms), dq).scale(&quarter));
        let col2 = &self.on(&self.c, &eul) - &self.on(&self.iota, &eul);
        col1.union(&col2)
    }

    /// `ω̃ : D_A ⊕ Ω_A → Ω_A ⊕ D_A`.
    pub fn omega_tilde(&self) -> BimoduleMap {
        let dq = &self.dq;
        let col1 = self.iota_omega.union(&self.s().scale(&qf(1, 4)));
        let forms = BimoduleMap::identity(&[Generator::Forms], dq);
        let col2 = &forms - &self.iota_p;
        col1.union(&col2)
    }

    /// `P̃ : Ω_A ⊕ D_A → D_A ⊕ Ω_A`.
    pub fn p_tilde(&self) -> BimoduleMap {
        let dq = &self.dq;
        let col1 = self.iota_p.union(&self.t().scale(&qf(1, 4)));
        let vecs = BimoduleMap::identity(&[Generator::Vectors], dq);
        let col2 = &vecs - &self.iota_omega;
        col1.union(&col2)
    }
}

fn compare(r: &mut CheckReport, what: &str, lhs: &Element, rhs: &Element, dq: &DoubleQuiver) {
    let res = lhs - rhs;
    if !res.is_zero() {
        r.fail(what.to_string(), Some(element_string(&res, dq)));
    }
}

fn letter_name(s: Symbol, dq: &DoubleQuiver) -> String {
    crate::ncalg::print::symbol_string(s, dq)
}

/// Commutativity `HV = VH` on every basis letter, and `¼H³ + V² = 1` on the
/// formal letters.
pub fn check_lemma72(d: &DiagramMaps) -> CheckReport {
    CheckReport::timed("lemma72", |r| {
        let dq = &d.dq;
        let h = d.horizontal();
        let v = d.vertical();
        for kind in ALL {
            for s in kind.letters(dq) {
                let x = letter(s, dq);
                let hv = h.apply(&v.apply(&x, dq), dq);
                let vh = v.apply(&h.apply(&x, dq), dq);
                compare(r, &format!("square at {}", letter_name(s, dq)), &hv, &vh, dq);
            }
        }
        for kind in FORMAL {
            for s in kind.letters(dq) {
                let x = letter(s, dq);
                let h3 = h.apply(&h.apply(&h.apply(&x, dq), dq), dq);
                let v2 = v.apply(&v.apply(&x, dq), dq);
                let lhs = &h3.scale(&qf(1, 4)) + &v2;
                compare(r, &format!("¼γβα + εδ at {}", letter_name(s, dq)), &lhs, &x, dq);
            }
        }
    })
}

/// The symmetric pairing `⟨(δ,η),(δ',η')⟩ = ⟨δ,η'⟩ + ⟨δ',η⟩°` on `D_A ⊕ Ω_A`.
/// The swap on the second term makes it symmetric in the double sense,
/// `⟨x, y⟩ = ⟨y, x⟩°`.
pub fn symmetric_pairing(x: &Element, y: &Element, dq: &DoubleQuiver) -> Tensor {
    let split = |z: &Element| {
        let mut vec = Element::zero();
        let mut form = Element::zero();
        for (w, k) in z.terms() {
            match split_linear(w, dq).1 {
                Symbol::Partial(_) => vec.add_term(w.clone(), k.clone()),
                Symbol::Diff(_) => form.add_term(w.clone(), k.clone()),
                other => panic!("unexpected letter {other:?}"),
            }
        }
        (vec, form)
    };
    let (xd, xf) = split(x);
    let (yd, yf) = split(y);
    pairing::pair(&xd, &yf, dq) + pairing::pair(&yd, &xf, dq).swap()
}

fn maps_agree(r: &mut CheckReport, name: &str, m: &BimoduleMap, n: &BimoduleMap, kinds: &[Generator], dq: &DoubleQuiver) {
    for &k in kinds {
        for s in k.letters(dq) {
            let x = letter(s, dq);
            compare(r, &format!("{name} at {}", letter_name(s, dq)), &m.apply(&x, dq), &n.apply(&x, dq), dq);
        }
    }
}

/// The six equivalent forms of compatibility, and unitarity of `ω̃`.
pub fn check_prop74(d: &DiagramMaps) -> CheckReport {
    CheckReport::timed("prop74", |r| {
        let dq = &d.dq;
        let quarter = qf(1, 4);
        let id_v = BimoduleMap::identity(&[Generator::Vectors], dq);
        let id_f = BimoduleMap::identity(&[Generator::Forms], dq);
        let lhs = d.iota_p.compose(&d.iota_omega, dq);
        let rhs = &id_v - &d.s().scale(&quarter);
        maps_agree(r, "ı(P)ı(ω) = 1 - ¼S", &lhs, &rhs, &[Generator::Vectors], dq);
        let lhs = d.iota_omega.compose(&d.iota_p, dq);
        let rhs = &id_f - &d.t().scale(&quarter);
        maps_agree(r, "ı(ω)ı(P) = 1 - ¼T", &lhs, &rhs, &[Generator::Forms], dq);

        let (ob, pb) = (d.omega_bar(), d.p_bar());
        let id_vd = BimoduleMap::identity(&[Generator::Vectors, Generator::DPhi], dq);
        let id_fe = BimoduleMap::identity(&[Generator::Forms, Generator::Euler], dq);
        maps_agree(r, "P̄ω̄ = id", &pb.compose(&ob, dq), &id_vd, &[Generator::Vectors, Generator::DPhi], dq);
        maps_agree(r, "ω̄P̄ = id", &ob.compose(&pb, dq), &id_fe, &[Generator::Forms, Generator::Euler], dq);
        let (ot, pt) = (d.omega_tilde(), d.p_tilde());
        let both = [Generator::Vectors, Generator::Forms];
        let id_both = BimoduleMap::identity(&both, dq);
        maps_agree(r, "P̃ω̃ = id", &pt.compose(&ot, dq), &id_both, &both, dq);
        maps_agree(r, "ω̃P̃ = id", &ot.compose(&pt, dq), &id_both, &both, dq);

        let letters: Vec<Symbol> = both.iter().flat_map(|k| k.letters(dq)).collect();
        for &x in &letters {
            for &y in &letters {
                let (xe, ye) = (letter(x, dq), letter(y, dq));
                let lhs = symmetric_pairing(&ot.apply(&xe, dq), &ye, dq);
                let rhs = symmetric_pairing(&xe, &pt.apply(&ye, dq), dq);
                if lhs != rhs {
                    r.fail(
                        format!("unitarity at ({}, {})", letter_name(x, dq), letter_name(y, dq)),
                        Some(crate::ncalg::tensor_string(&(lhs - rhs), dq)),
                    );
                }
            }
        }
    })
}
