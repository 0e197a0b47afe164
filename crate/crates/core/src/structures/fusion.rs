//! Fusion of two vertices, transported to structures.

use crate::ncalg::{qf, Element, Symbol, UnitProduct, Word};
use crate::quiver::{fuse_vertices, QuiverError, Vertex, VertexGluing};

use super::moment::{euler, MomentMap};
use super::qp::QPStructure;

fn relabel_symbol(s: Symbol, g: &VertexGluing) -> Symbol {
    match s {
        Symbol::Euler(p) => Symbol::Euler(g.map(p)),
        Symbol::EStar(p) => Symbol::EStar(g.map(p)),
        Symbol::DPhi(p) => Symbol::DPhi(g.map(p)),
        Symbol::DPhiStar(p) => Symbol::DPhiStar(g.map(p)),
        other => other,
    }
}

/// Transports an element along the gluing. Arrow indices are unchanged, so
/// normal words stay normal.
pub fn relabel(x: &Element, g: &VertexGluing) -> Element {
    Element::from_terms(x.terms().iter().map(|(w, k)| {
        let w = Word {
            start: g.map(w.start),
            end: g.map(w.end),
            syms: w.syms.iter().map(|&s| relabel_symbol(s, g)).collect(),
        };
        (w, k.clone())
    }))
}

/// `P^ff = P^f - ½ E_v^f E_w^f`, with the moment map components at the glued
/// vertex multiplied in the order `Φ_v Φ_w`.
pub fn fuse_structure(s: &QPStructure, v: Vertex, w: Vertex) -> Result<QPStructure, QuiverError> {
    let g = fuse_vertices(s.dq.base(), v, w)?;
    let dq = g.glued.double();
    let ev = relabel(&euler(v, &s.dq), &g);
    let ew = relabel(&euler(w, &s.dq), &g);
    let p = &relabel(&s.p, &g) - &ev.mul(&ew).scale(&qf(1, 2));
    let glued = g.glued_vertex();
    let mut components: Vec<UnitProduct> = Vec::new();
    for &x in dq.vertices() {
        if x == glued {
            let mut u = s.phi.component(v).clone();
            u.vertex = glued;
            let mut rest = s.phi.component(w).clone();
            rest.vertex = glued;
            components.push(u.concat(&rest));
        } else {
            components.push(s.phi.component(x).clone());
        }
    }
    Ok(QPStructure {
        dq,
        p,
        phi: MomentMap { components },
    })
}
