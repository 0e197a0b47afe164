//! Representation spaces `Rep(A, α)` as an exact numeric oracle: algebra
//! elements, forms, double brackets and double derivations evaluated at
//! rational points through the standard index convention
//! `{a_ij, b_uv} = {{a,b}}'_uj {{a,b}}''_iv`.

pub mod checks;
pub mod eval;
pub mod matrix;
pub mod point;

use std::collections::BTreeMap;

use num::Zero;

use crate::ncalg::{Tensor, Word, Q};
use crate::polyvec::{DoubleDerivation, PBracket};
use crate::quiver::{DoubleQuiver, Vertex};

pub use eval::{evaluate, evaluate_form, evaluate_raw_word, Evaluator};
pub use matrix::{Dual, Matrix};
pub use point::{
    coordinates, random_point, ArrowMatrices, Coord, DimensionVector, MatrixPoint, RepError, TangentAssignment,
};

/// Global row/column of a coordinate's block entry.
fn global(ev: &Evaluator, c: usize, k: Coord) -> (usize, usize) {
    let a = ev.pt.alpha();
    (a.offset(ev.dq.tail(c)) + k.i, a.offset(ev.dq.head(c)) + k.j)
}

/// Evaluates the legs of a two-tensor once, with derivatives.
struct LegCache<'a, 'b> {
    ev: &'b Evaluator<'a>,
    cache: BTreeMap<Word, Dual>,
}

impl<'a, 'b> LegCache<'a, 'b> {
    fn new(ev: &'b Evaluator<'a>) -> Self {
        LegCache { ev, cache: BTreeMap::new() }
    }

    fn get(&mut self, w: &Word) -> Dual {
        if let Some(d) = self.cache.get(w) {
            return d.clone();
        }
        let d = self.ev.word(w, &[]);
        self.cache.insert(w.clone(), d.clone());
        d
    }

    /// `Σ k t'_{uj} t''_{iv}` with its derivative.
    fn index2(&mut self, t: &Tensor, (i, j): (usize, usize), (u, v): (usize, usize)) -> (Q, Q) {
        let (mut re, mut eps) = (Q::zero(), Q::zero());
        for (legs, k) in t.terms() {
            let (x, y) = (self.get(&legs[0]), self.get(&legs[1]));
            re += k * &(x.re.get(u, j) * y.re.get(i, v));
            eps += k * &(x.eps.get(u, j) * y.re.get(i, v) + x.re.get(u, j) * y.eps.get(i, v));
        }
        (re, eps)
    }

    /// `Σ k t'_{sj} t''_{iv} t'''_{ut}` for `{a_ij, b_uv, c_st}`.
    fn index3(&mut self, t: &Tensor, (i, j): (usize, usize), (u, v): (usize, usize), (s, w): (usize, usize)) -> Q {
        let mut out = Q::zero();
        for (legs, k) in t.terms() {
            let (x, y, z) = (self.get(&legs[0]), self.get(&legs[1]), self.get(&legs[2]));
            out += k * &(x.re.get(s, j) * y.re.get(i, v) * z.re.get(u, w));
        }
        out
    }
}

/// The matrix `{x_k, x_l}` of entry-function brackets, and its derivative along
/// the evaluator's direction.
pub fn bivector_dual(pb: &PBracket, ev: &Evaluator) -> (Matrix, Matrix) {
    let coords = coordinates(ev.dq, ev.pt.alpha());
    let n = coords.len();
    let (mut re, mut eps) = (Matrix::zeros(n, n), Matrix::zeros(n, n));
    let mut legs = LegCache::new(ev);
    for (r, &ka) in coords.iter().enumerate() {
        for (s, &kb) in coords.iter().enumerate() {
            let t = pb.on_arrows(ka.arrow, kb.arrow);
            let (x, y) = legs.index2(&t, global(ev, ka.arrow, ka), global(ev, kb.arrow, kb));
            re.set(r, s, x);
            eps.set(r, s, y);
        }
    }
    (re, eps)
}

pub fn bivector(pb: &PBracket, dq: &DoubleQuiver, pt: &MatrixPoint) -> Matrix {
    bivector_dual(pb, &Evaluator::new(dq, pt)).0
}

/// The tangent vector `δ_{ij}`: `x_{uv} ↦ δ(c)'_{uj} δ(c)''_{iv}` for `x = X(c)`.
pub fn derivation_field(delta: &DoubleDerivation, ev: &Evaluator, ij: (usize, usize)) -> Vec<Q> {
    let mut legs = LegCache::new(ev);
    coordinates(ev.dq, ev.pt.alpha())
        .into_iter()
        .map(|k| legs.index2(&delta.coord(k.arrow), ij, global(ev, k.arrow, k)).0)
        .collect()
}

/// `(E_p)_{ij}` for all vertices and `i, j < α(p)`, derived from the symbolic `E_p`.
pub fn gl_fields(ev: &Evaluator) -> Vec<((Vertex, usize, usize), Vec<Q>)> {
    let a = ev.pt.alpha();
    let mut out = Vec::new();
    for (p, n) in a.entries() {
        let e = DoubleDerivation::euler(p, ev.dq);
        for i in 0..n {
            for j in 0..n {
                let ij = (a.offset(p) + i, a.offset(p) + j);
                out.push(((p, i, j), derivation_field(&e, ev, ij)));
            }
        }
    }
    out
}

/// The fundamental vector field of the elementary matrix `E_{ji}` at `p`:
/// `X(c) ↦ X(c)E_{ji} - E_{ji}X(c)`, written out by hand.
pub fn elementary_action(ev: &Evaluator, p: Vertex, i: usize, j: usize) -> Vec<Q> {
    let a = ev.pt.alpha();
    let n = a.total();
    let mut eji = Matrix::zeros(n, n);
    eji.set(a.offset(p) + j, a.offset(p) + i, Q::from_integer(1.into()));
    coordinates(ev.dq, a)
        .into_iter()
        .map(|k| {
            let x = ev.embed(&ev.pt.x.x[k.arrow], ev.dq.tail(k.arrow), ev.dq.head(k.arrow));
            let f = &(&x * &eji) - &(&eji * &x);
            let (r, c) = global(ev, k.arrow, k);
            f.get(r, c).clone()
        })
        .collect()
}

/// `{a_ij, b_uv, c_st}` from a three-tensor valued function of arrows.
pub fn trivector<F: FnMut(usize, usize, usize) -> Tensor>(ev: &Evaluator, mut f: F) -> Vec<Vec<Vec<Q>>> {
    let coords = coordinates(ev.dq, ev.pt.alpha());
    let mut legs = LegCache::new(ev);
    coords
        .iter()
        .map(|&ka| {
            coords
                .iter()
                .map(|&kb| {
                    coords
                        .iter()
                        .map(|&kc| {
                            let t = f(ka.arrow, kb.arrow, kc.arrow);
                            legs.index3(
                                &t,
                                global(ev, ka.arrow, ka),
                                global(ev, kb.arrow, kb),
                                global(ev, kc.arrow, kc),
                            )
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests;
