//! Quasi-Poisson data `(P, Φ)`, quasi-bisymplectic data `(ω, Φ)`, the quiver
//! constructor and the conversion between the two.

use thiserror::Error;

use crate::ncalg::{qf, Element, Symbol, UnitFactor, UnitProduct};
use crate::polyvec::{iota_map, BimoduleMap, DoubleDerivation, Generator};
use crate::quiver::DoubleQuiver;

use super::certificate::{find_certificates, Certificate};
use super::moment::{euler, MomentMap};

/// Longest multiplier used when searching non-degeneracy certificates.
pub const CERTIFICATE_LEN: usize = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("non-degeneracy not established: no certificate for {0}")]
    NonDegeneracyNotEstablished(String),
    #[error("the solved map is not anti-symmetric")]
    NotAntisymmetric,
}

/// A bivector `P` with a multiplicative moment map `Φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPStructure {
    pub dq: DoubleQuiver,
    pub p: Element,
    pub phi: MomentMap,
}

/// A two-form `ω` (a representative of its class) with a moment map `Φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QBStructure {
    pub dq: DoubleQuiver,
    pub omega: Element,
    pub phi: MomentMap,
}

/// `Φ_p = Π_{t(c)=p} (e + c c*)^{ε(c)}`, in arrow order.
pub fn quiver_moment(dq: &DoubleQuiver) -> MomentMap {
    let components = dq
        .vertices()
        .iter()
        .map(|&p| UnitProduct {
            vertex: p,
            factors: (0..dq.num_arrows())
                .filter(|&c| dq.tail(c) == p)
                .map(|c| {
                    if dq.sign(c) > 0 {
                        UnitFactor::OnePlus(c)
                    } else {
                        UnitFactor::Inv(c)
                    }
                })
                .collect(),
        })
        .collect();
    MomentMap { components }
}

/// The standard structure on a double quiver:
/// `P = ½ Σ_c ε(c)(e + c*c) ∂c ∂c* - ½ Σ_{c<d} (∂c* c* - c ∂c)(∂d* d* - d ∂d)`.
pub fn quiver_qp(dq: &DoubleQuiver) -> QPStructure {
    let n = dq.num_arrows();
    let partial = |c: usize| Element::letter(Symbol::Partial(c), dq);
    let arrow = |c: usize| Element::arrow(c, dq);
    let mut p = Element::zero();
    for c in 0..n {
        let unit = &Element::idempotent(dq.head(c)) + &arrow(c ^ 1).mul(&arrow(c));
        let term = unit.mul(&partial(c)).mul(&partial(c ^ 1));
        p.add_scaled(&term, &qf(dq.sign(c) as i64, 2));
    }
    let euler_part = |c: usize| &partial(c ^ 1).mul(&arrow(c ^ 1)) - &arrow(c).mul(&partial(c));
    for c in 0..n {
        for d in c + 1..n {
            p.add_scaled(&euler_part(c).mul(&euler_part(d)), &qf(-1, 2));
        }
    }
    QPStructure {
        dq: dq.clone(),
        p,
        phi: quiver_moment(dq),
    }
}

impl QPStructure {
    /// `ı(P)` on the basis `dc`.
    pub fn iota_p(&self) -> BimoduleMap {
        iota_map(&self.p, Generator::Forms, &self.dq)
    }

    /// Generators `ı(P)(dc)` followed by the `E_p`.
    pub fn image_generators(&self) -> Vec<Element> {
        let ip = self.iota_p();
        let mut gens: Vec<Element> = Generator::Forms
            .letters(&self.dq)
            .into_iter()
            .map(|s| ip.image(s))
            .collect();
        gens.extend(self.dq.vertices().iter().map(|&p| euler(p, &self.dq)));
        gens
    }

    /// Certificates writing each `∂/∂c` in terms of [`Self::image_generators`].
    pub fn certificates(&self, max_len: usize) -> Vec<Option<Certificate>> {
        let targets: Vec<Element> = Generator::Vectors
            .letters(&self.dq)
            .into_iter()
            .map(|s| Element::letter(s, &self.dq))
            .collect();
        find_certificates(&targets, &self.image_generators(), &self.dq, max_len)
    }
}

impl QBStructure {
    /// `ı(ω)` on the basis `∂/∂c`.
    pub fn iota_omega(&self) -> BimoduleMap {
        iota_map(&self.omega, Generator::Vectors, &self.dq)
    }

    /// Generators `ı(ω)(∂/∂c)` followed by the `dΦ_p`.
    pub fn image_generators(&self) -> Vec<Element> {
        let io = self.iota_omega();
        let mut gens: Vec<Element> = Generator::Vectors
            .letters(&self.dq)
            .into_iter()
            .map(|s| io.image(s))
            .collect();
        gens.extend(self.phi.vertices().map(|p| self.phi.dphi(p, &self.dq)));
        gens
    }

    /// Certificates writing each `dc` in terms of [`Self::image_generators`].
    pub fn certificates(&self, max_len: usize) -> Vec<Option<Certificate>> {
        let targets: Vec<Element> = Generator::Forms
            .letters(&self.dq)
            .into_iter()
            .map(|s| Element::letter(s, &self.dq))
            .collect();
        find_certificates(&targets, &self.image_generators(), &self.dq, max_len)
    }
}

fn unwrap_all(
    certs: Vec<Option<Certificate>>,
    dq: &DoubleQuiver,
) -> Result<Vec<Certificate>, StructureError> {
    certs
        .into_iter()
        .enumerate()
        .map(|(c, x)| {
            x.ok_or_else(|| StructureError::NonDegeneracyNotEstablished(dq.name(c).to_string()))
        })
        .collect()
}

/// The unique `ω` compatible with `(P, Φ)`: solves `ı(ω)` on `∂/∂c` from
/// `ı(ω)ı(P)(η) = η - ¼T(η)` and `ı(ω)(E_p) = ½(Φ_p^{-1}dΦ_p + dΦ_pΦ_p^{-1})`.
pub fn omega_from_p(s: &QPStructure) -> Result<QBStructure, StructureError> {
    let dq = &s.dq;
    let certs = unwrap_all(s.certificates(CERTIFICATE_LEN), dq)?;
    let quarter = qf(1, 4);
    let mut images: Vec<Element> = (0..dq.num_arrows())
        .map(|c| &Element::letter(Symbol::Diff(c), dq) - &s.phi.t_on_arrow(c, dq).scale(&quarter))
        .collect();
    images.extend(dq.vertices().iter().map(|&p| s.phi.iota_euler(p, dq)));
    let map = BimoduleMap::from_images(
        certs
            .iter()
            .enumerate()
            .map(|(c, cert)| (Symbol::Partial(c), cert.apply(&images))),
    );
    let omega = crate::polyvec::omega_from_map(&map, Generator::Vectors, dq)
        .map_err(|_| StructureError::NotAntisymmetric)?;
    Ok(QBStructure {
        dq: dq.clone(),
        omega,
        phi: s.phi.clone(),
    })
}

/// The dual construction: `ı(P)ı(ω)(δ) = δ - ¼S(δ)` and
/// `ı(P)(dΦ_p) = ½(E_pΦ_p + Φ_pE_p)`.
pub fn p_from_omega(s: &QBStructure) -> Result<QPStructure, StructureError> {
    let dq = &s.dq;
    let certs = unwrap_all(s.certificates(CERTIFICATE_LEN), dq)?;
    let quarter = qf(1, 4);
    let mut images: Vec<Element> = (0..dq.num_arrows())
        .map(|c| {
            let delta = DoubleDerivation::partial(c, dq);
            &Element::letter(Symbol::Partial(c), dq) - &s.phi.s_on_derivation(&delta, dq).scale(&quarter)
        })
        .collect();
    images.extend(s.phi.vertices().map(|p| s.phi.iota_dphi(p, dq)));
    let map = BimoduleMap::from_images(
        certs
            .iter()
            .enumerate()
            .map(|(c, cert)| (Symbol::Diff(c), cert.apply(&images))),
    );
    let p = crate::polyvec::omega_from_map(&map, Generator::Forms, dq)
        .map_err(|_| StructureError::NotAntisymmetric)?;
    Ok(QPStructure {
        dq: dq.clone(),
        p,
        phi: s.phi.clone(),
    })
}
