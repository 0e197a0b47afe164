//! The multiplicative moment map `Φ = Σ_p Φ_p` and the expressions built from it.

use crate::diffcalc::d;
use crate::ncalg::{qf, Element, Tensor, UnitProduct};
use crate::polyvec::DoubleDerivation;
use crate::quiver::{DoubleQuiver, Vertex};

/// The polyvector `E_p`.
pub fn euler(p: Vertex, dq: &DoubleQuiver) -> Element {
    DoubleDerivation::euler(p, dq).to_polyvector(dq)
}

/// `E = Σ_p E_p` as a polyvector.
pub fn euler_total(dq: &DoubleQuiver) -> Element {
    DoubleDerivation::euler_total(dq).to_polyvector(dq)
}

/// One recognized unit per vertex, in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MomentMap {
    pub components: Vec<UnitProduct>,
}

impl MomentMap {
    pub fn component(&self, p: Vertex) -> &UnitProduct {
        self.components
            .iter()
            .find(|u| u.vertex == p)
            .unwrap_or_else(|| panic!("no moment component at vertex {p}"))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.components.iter().map(|u| u.vertex)
    }

    pub fn phi(&self, p: Vertex, dq: &DoubleQuiver) -> Element {
        self.component(p).element(dq)
    }

    pub fn phi_inv(&self, p: Vertex, dq: &DoubleQuiver) -> Element {
        self.component(p).inverse().element(dq)
    }

    pub fn total(&self, dq: &DoubleQuiver) -> Element {
        let mut out = Element::zero();
        for p in self.vertices() {
            out += &self.phi(p, dq);
        }
        out
    }

    pub fn dphi(&self, p: Vertex, dq: &DoubleQuiver) -> Element {
        d(&self.phi(p, dq), dq)
    }

    /// `Φ_p^{-1} dΦ_p`.
    pub fn maurer_cartan(&self, p: Vertex, dq: &DoubleQuiver) -> Element {
        self.phi_inv(p, dq).mul(&self.dphi(p, dq))
    }

    /// `dΦ_p Φ_p^{-1}`.
    pub fn maurer_cartan_right(&self, p: Vertex, dq: &DoubleQuiver) -> Element {
        self.dphi(p, dq).mul(&self.phi_inv(p, dq))
    }

    /// `(1/6) Σ_p (Φ_p^{-1} dΦ_p)³`.
    pub fn cartan_three_form(&self, dq: &DoubleQuiver) -> Element {
        let mut out = Element::zero();
        for p in self.vertices() {
            let m = self.maurer_cartan(p, dq);
            out += &m.mul(&m).mul(&m);
        }
        out.scale(&qf(1, 6))
    }

    /// `½(Φ_p^{-1} dΦ_p + dΦ_p Φ_p^{-1})`, the prescribed `ı_{E_p} ω`.
    pub fn iota_euler(&self, p: Vertex, dq: &DoubleQuiver) -> Element {
        (&self.maurer_cartan(p, dq) + &self.maurer_cartan_right(p, dq)).scale(&qf(1, 2))
    }

    /// `½(E_p Φ_p + Φ_p E_p)`, the prescribed `ı(P)(dΦ_p)`.
    pub fn iota_dphi(&self, p: Vertex, dq: &DoubleQuiver) -> Element {
        let e = euler(p, dq);
        let f = self.phi(p, dq);
        (&e.mul(&f) + &f.mul(&e)).scale(&qf(1, 2))
    }

    /// `Φ_p^{-1} dΦ_p - dΦ_p Φ_p^{-1}`.
    pub fn mc_difference(&self, p: Vertex, dq: &DoubleQuiver) -> Element {
        &self.maurer_cartan(p, dq) - &self.maurer_cartan_right(p, dq)
    }

    /// `E_p Φ_p^{-1} - Φ_p^{-1} E_p`.
    pub fn euler_difference(&self, p: Vertex, dq: &DoubleQuiver) -> Element {
        let e = euler(p, dq);
        let g = self.phi_inv(p, dq);
        &e.mul(&g) - &g.mul(&e)
    }

    /// `T(dc) = c X_{h(c)} - X_{t(c)} c` with `X_p = Φ_p^{-1}dΦ_p - dΦ_pΦ_p^{-1}`.
    pub fn t_on_arrow(&self, c: usize, dq: &DoubleQuiver) -> Element {
        let a = Element::arrow(c, dq);
        &a.mul(&self.mc_difference(dq.head(c), dq)) - &self.mc_difference(dq.tail(c), dq).mul(&a)
    }

    /// `S(δ) = Σ_p δ(Φ_p)'' (E_pΦ_p^{-1} - Φ_p^{-1}E_p) δ(Φ_p)'`.
    pub fn s_on_derivation(&self, delta: &DoubleDerivation, dq: &DoubleQuiver) -> Element {
        let mut out = Element::zero();
        for p in self.vertices() {
            let mid = self.euler_difference(p, dq);
            let t: Tensor = delta.apply(&self.phi(p, dq), dq);
            out += &sandwich_swapped(&t, &mid);
        }
        out
    }
}

/// `Σ t'' x t'` for a two-leg tensor `t`.
pub fn sandwich_swapped(t: &Tensor, x: &Element) -> Element {
    t.map_to_element(|legs| {
        Element::from_word(legs[1].clone())
            .mul(x)
            .mul(&Element::from_word(legs[0].clone()))
    })
}

/// `Σ t' x t''` for a two-leg tensor `t`.
pub fn sandwich(t: &Tensor, x: &Element) -> Element {
    t.map_to_element(|legs| {
        Element::from_word(legs[0].clone())
            .mul(x)
            .mul(&Element::from_word(legs[1].clone()))
    })
}

/// `¼ °(E(a)° E(b)° E(c)°)`: the triple bracket that (P1) prescribes on `a, b, c`.
/// With `E(x)° = Σ_p e_p⊗x e_p - e_p x⊗e_p = Σ x_0⊗x_1`, the product is
/// `Σ z_1x_0 ⊗ x_1y_0 ⊗ y_1z_0`.
pub fn euler_triple(a: &Element, b: &Element, c: &Element, dq: &DoubleQuiver) -> Tensor {
    let e_circ = |x: &Element| -> Tensor {
        let mut out = Tensor::zero(2);
        for &v in dq.vertices() {
            let e = Element::idempotent(v);
            out += &Tensor::pair(&e, &x.mul(&e));
            out -= &Tensor::pair(&e.mul(x), &e);
        }
        out
    };
    let (x, y, z) = (e_circ(a), e_circ(b), e_circ(c));
    let mut out = Tensor::zero(3);
    for (xl, xk) in x.terms() {
        for (yl, yk) in y.terms() {
            for (zl, zk) in z.terms() {
                let first = Element::mul_words(&zl[1], &xl[0]);
                let mid = Element::mul_words(&xl[1], &yl[0]);
                let last = Element::mul_words(&yl[1], &zl[0]);
                out.add_scaled(&Tensor::product(&[&first, &mid, &last]), &(xk * yk * zk));
            }
        }
    }
    out.scale(&qf(1, 4))
}
