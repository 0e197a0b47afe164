//! Numeric oracles at sampled points. Every comparison is exact.

use num::Zero;
use rand::Rng;
use serde::Serialize;

use crate::diffcalc::d;
use crate::ncalg::{Element, Q};
use crate::polyvec::PBracket;
use crate::quiver::DoubleQuiver;
use crate::sample::{self, Alphabet};
use crate::structures::moment::euler_triple;
use crate::structures::{QBStructure, QPStructure};

use super::eval::{evaluate, evaluate_raw_word, Evaluator};
use super::matrix::Matrix;
use super::point::{coordinates, ArrowMatrices, MatrixPoint, TangentAssignment};
use super::{bivector, bivector_dual, elementary_action, gl_fields, trivector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMode {
    /// Hamiltonian vector fields and `gl_α` generators span the tangent space.
    P3,
    /// `ı(ω)` of tangent vectors and the entries of `dΦ` span the cotangent space.
    B3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub mode: RankMode,
    pub rank: usize,
    pub dim: usize,
}

impl RankReport {
    pub fn full(&self) -> bool {
        self.rank == self.dim
    }
}

fn units(dq: &DoubleQuiver, pt: &MatrixPoint) -> Vec<TangentAssignment> {
    coordinates(dq, pt.alpha())
        .into_iter()
        .map(|k| ArrowMatrices::unit(dq, pt.alpha(), k))
        .collect()
}

/// `Ω_kl = tr ω(∂_k, ∂_l)` on coordinate tangent vectors.
pub fn omega_matrix(omega: &Element, dq: &DoubleQuiver, pt: &MatrixPoint) -> Matrix {
    let us = units(dq, pt);
    let ev = Evaluator::new(dq, pt);
    let mut m = Matrix::zeros(us.len(), us.len());
    for (k, tk) in us.iter().enumerate() {
        for (l, tl) in us.iter().enumerate() {
            m.set(k, l, ev.form(omega, &[tk, tl]).expect("ω has degree 2").0);
        }
    }
    m
}

/// The rank of `T*_x ⊕ gl_α → T_x` (P3) or `T_x ⊕ gl_α → T*_x` (B3).
/// `P` is given by its double bracket, `ω` by a representative.
pub fn rank_nondegeneracy(
    dq: &DoubleQuiver,
    pt: &MatrixPoint,
    mode: RankMode,
    pb: Option<&PBracket>,
    omega: Option<&Element>,
    phi: Option<&crate::structures::MomentMap>,
    with_gl: bool,
) -> RankReport {
    let ev = Evaluator::new(dq, pt);
    let dim = coordinates(dq, pt.alpha()).len();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    match mode {
        RankMode::P3 => {
            if let Some(pb) = pb {
                let m = bivector(pb, dq, pt);
                rows.extend((0..dim).map(|k| (0..dim).map(|l| m.get(k, l).clone()).collect()));
            }
            if with_gl {
                rows.extend(gl_fields(&ev).into_iter().map(|(_, v)| v));
            }
        }
        RankMode::B3 => {
            if let Some(w) = omega {
                let m = omega_matrix(w, dq, pt);
                rows.extend((0..dim).map(|k| (0..dim).map(|l| m.get(k, l).clone()).collect()));
            }
            if let (true, Some(phi)) = (with_gl, phi) {
                let us = units(dq, pt);
                let a = pt.alpha();
                for p in phi.vertices() {
                    let f = phi.phi(p, dq);
                    let derivs: Vec<Matrix> =
                        us.iter().map(|t| Evaluator::along(dq, pt, t).element(&f).eps).collect();
                    let o = a.offset(p);
                    for i in 0..a.dim(p) {
                        for j in 0..a.dim(p) {
                            rows.push(derivs.iter().map(|m| m.get(o + i, o + j).clone()).collect());
                        }
                    }
                }
            }
        }
    }
    let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(rows).rank() };
    RankReport { mode, rank, dim }
}

/// `X(xy) = X(x)X(y)` on random pairs of algebra elements.
pub fn homomorphism<R: Rng>(dq: &DoubleQuiver, pt: &MatrixPoint, pairs: usize, rng: &mut R) -> usize {
    let mut failures = 0;
    for _ in 0..pairs {
        let x = sample::element(dq, Alphabet::Algebra, 3, 4, 0, rng);
        let y = sample::element(dq, Alphabet::Algebra, 3, 4, 0, rng);
        if evaluate(&x.mul(&y), dq, pt) != &evaluate(&x, dq, pt) * &evaluate(&y, dq, pt) {
            failures += 1;
        }
    }
    failures
}

/// Normal forms evaluate like the raw words they came from.
pub fn rewriting_soundness<R: Rng>(dq: &DoubleQuiver, pt: &MatrixPoint, words: usize, rng: &mut R) -> usize {
    let mut failures = 0;
    for _ in 0..words {
        let w = sample::raw_word(dq, Alphabet::Algebra, 7, rng);
        if evaluate(&Element::normal_form(w.clone()), dq, pt) != evaluate_raw_word(&w, dq, pt) {
            failures += 1;
        }
    }
    failures
}

/// `tr dx(t_0..t_k) = Σ_i (-1)^i ∂_{t_i} tr x(t_0..t̂_i..t_k)` with the
/// derivatives from dual numbers. Returns whether it holds for `x` at `pt`.
pub fn d_matches_dual<R: Rng>(x: &Element, dq: &DoubleQuiver, pt: &MatrixPoint, rng: &mut R) -> bool {
    let k = x.degree().unwrap_or(0) as usize;
    let ts: Vec<TangentAssignment> = (0..=k).map(|_| ArrowMatrices::random(dq, pt.alpha(), rng)).collect();
    let all: Vec<&TangentAssignment> = ts.iter().collect();
    let lhs = Evaluator::new(dq, pt).form(&d(x, dq), &all).expect("degree").0;
    let mut rhs = Q::zero();
    for (i, t) in ts.iter().enumerate() {
        let rest: Vec<&TangentAssignment> = all.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, t)| *t).collect();
        let der = Evaluator::along(dq, pt, t).form(x, &rest).expect("degree").1;
        if i % 2 == 0 {
            rhs += der;
        } else {
            rhs -= der;
        }
    }
    lhs == rhs
}

/// `(E_p)_{ij}` derived from the symbolic `E_p` equals the elementary action
/// `f_{ji}` on every coordinate. Returns the number of mismatching generators.
pub fn gl_action(dq: &DoubleQuiver, pt: &MatrixPoint) -> usize {
    let ev = Evaluator::new(dq, pt);
    gl_fields(&ev)
        .into_iter()
        .filter(|((p, i, j), v)| *v != elementary_action(&ev, *p, *i, *j))
        .count()
}

/// `Σ_n {x_k, x_n} ∂_n {x_l, x_m} + cyclic` for all coordinate triples.
pub fn jacobiator(pb: &PBracket, dq: &DoubleQuiver, pt: &MatrixPoint) -> Vec<Vec<Vec<Q>>> {
    let us = units(dq, pt);
    let n = us.len();
    let pi = bivector(pb, dq, pt);
    let dpi: Vec<Matrix> = us.iter().map(|t| bivector_dual(pb, &Evaluator::along(dq, pt, t)).1).collect();
    let brk = |k: usize, l: usize, m: usize| -> Q { (0..n).map(|r| pi.get(k, r) * dpi[r].get(l, m)).sum() };
    (0..n)
        .map(|k| {
            (0..n)
                .map(|l| (0..n).map(|m| brk(k, l, m) + brk(l, m, k) + brk(m, k, l)).collect())
                .collect()
        })
        .collect()
}

/// Residual of `ω♭ ∘ P♯ = 1 - ¼ Σ f_{(p,i,j)} ⊗ (Φ_p^{-1}dΦ_p - dΦ_pΦ_p^{-1})_{ji}`
/// as matrices on coordinate tangent vectors.
pub fn compatibility_residual(s: &QPStructure, w: &QBStructure, pt: &MatrixPoint) -> Matrix {
    let dq = &s.dq;
    let pb = PBracket::from_bivector(&s.p, dq);
    let pi = bivector(&pb, dq, pt);
    let om = omega_matrix(&w.omega, dq, pt);
    let lhs = &om * &pi;
    let us = units(dq, pt);
    let n = us.len();
    let ev = Evaluator::new(dq, pt);
    let a = pt.alpha();
    let mut corr = Matrix::zeros(n, n);
    for ((p, i, j), field) in gl_fields(&ev) {
        let o = a.offset(p);
        let f = s.phi.phi(p, dq);
        let fi = evaluate(&s.phi.phi_inv(p, dq), dq, pt);
        for (k, t) in us.iter().enumerate() {
            let df = Evaluator::along(dq, pt, t).element(&f).eps;
            let theta = &(&fi * &df) - &(&df * &fi);
            let c = theta.get(o + j, o + i);
            if c.is_zero() {
                continue;
            }
            for (m, v) in field.iter().enumerate() {
                corr.add_at(k, m, &(c * v));
            }
        }
    }
    &(&lhs - &Matrix::identity(n)) + &corr.scale(&crate::ncalg::qf(1, 4))
}

/// The Jacobiator of entry-function brackets against the trivector of the
/// prescribed triple bracket `T = ¼°(E°E°E°)`:
/// `J(a_ij, b_uv, c_st) = T(a,b,c)'_sj T''_iv T'''_ut - T(a,c,b)'_uj T''_it T'''_sv`.
/// Returns the number of mismatching coordinate triples.
pub fn quasi_jacobi(pb: &PBracket, dq: &DoubleQuiver, pt: &MatrixPoint) -> usize {
    let j = jacobiator(pb, dq, pt);
    let ev = Evaluator::new(dq, pt);
    let arrow = |c| Element::arrow(c, dq);
    let t = trivector(&ev, |a, b, c| euler_triple(&arrow(a), &arrow(b), &arrow(c), dq));
    let n = j.len();
    let mut bad = 0;
    for k in 0..n {
        for l in 0..n {
            for m in 0..n {
                if j[k][l][m] != &t[k][l][m] - &t[k][m][l] {
                    bad += 1;
                }
            }
        }
    }
    bad
}
