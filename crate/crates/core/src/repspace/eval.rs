//! The representation functor: elements become `N × N` block matrices,
//! `N = Σ_p α(p)`, and forms become multilinear functions of tangent vectors
//! through the trace.

use itertools::Itertools;
use num::Zero;

use crate::ncalg::{Element, Symbol, Word, Q};
use crate::quiver::{DoubleQuiver, Vertex};

use super::matrix::{Dual, Matrix};
use super::point::{ArrowMatrices, MatrixPoint, RepError, TangentAssignment};

/// Evaluates at `pt`, optionally differentiating along `dir`.
pub struct Evaluator<'a> {
    pub dq: &'a DoubleQuiver,
    pub pt: &'a MatrixPoint,
    pub dir: Option<&'a ArrowMatrices>,
}

impl<'a> Evaluator<'a> {
    pub fn new(dq: &'a DoubleQuiver, pt: &'a MatrixPoint) -> Self {
        Evaluator { dq, pt, dir: None }
    }

    pub fn along(dq: &'a DoubleQuiver, pt: &'a MatrixPoint, dir: &'a ArrowMatrices) -> Self {
        Evaluator { dq, pt, dir: Some(dir) }
    }

    fn size(&self) -> usize {
        self.pt.alpha().total()
    }

    /// Places `m` in the `(p, q)` block of an `N × N` matrix.
    pub fn embed(&self, m: &Matrix, p: Vertex, q: Vertex) -> Matrix {
        let a = self.pt.alpha();
        let mut out = Matrix::zeros(self.size(), self.size());
        out.set_block(a.offset(p), a.offset(q), m);
        out
    }

    pub fn idempotent(&self, p: Vertex) -> Matrix {
        self.embed(&Matrix::identity(self.pt.alpha().dim(p)), p, p)
    }

    fn direction(&self, c: usize) -> Matrix {
        match self.dir {
            Some(t) => t.x[c].clone(),
            None => Matrix::zeros(self.pt.x.x[c].rows(), self.pt.x.x[c].cols()),
        }
    }

    fn arrow(&self, c: usize) -> Dual {
        let (t, h) = (self.dq.tail(c), self.dq.head(c));
        Dual {
            re: self.embed(&self.pt.x.x[c], t, h),
            eps: self.embed(&self.direction(c), t, h),
        }
    }

    /// `g_c = (I + X(c)X(c*))^{-1}`, with derivative `-g (X'X* + XX*') g`.
    fn inv(&self, c: usize) -> Dual {
        let t = self.dq.tail(c);
        let g = &self.pt.inv[c];
        let (x, y) = (&self.pt.x.x[c], &self.pt.x.x[c ^ 1]);
        let dm = &(&self.direction(c) * y) + &(x * &self.direction(c ^ 1));
        let eps = -&(&(g * &dm) * g);
        Dual { re: self.embed(g, t, t), eps: self.embed(&eps, t, t) }
    }

    /// A word whose `k`-th form letter `dc` is replaced by `tangents[k](c)`.
    pub fn word(&self, w: &Word, tangents: &[&TangentAssignment]) -> Dual {
        let mut out = Dual::constant(self.idempotent(w.start));
        let mut k = 0;
        for &s in &w.syms {
            let m = match s {
                Symbol::Arrow(c) => self.arrow(c),
                Symbol::Inv(c) => self.inv(c),
                Symbol::Diff(c) => {
                    let t = tangents[k];
                    k += 1;
                    Dual::constant(self.embed(&t.x[c], self.dq.tail(c), self.dq.head(c)))
                }
                _ => panic!("cannot evaluate {s:?} on a representation space"),
            };
            out = &out * &m;
        }
        out
    }

    /// `X(x)` for `x` of degree 0.
    pub fn element(&self, x: &Element) -> Dual {
        let n = self.size();
        let mut out = Dual::constant(Matrix::zeros(n, n));
        for (w, k) in x.terms() {
            let m = self.word(w, &[]);
            out = &out + &Dual { re: m.re.scale(k), eps: m.eps.scale(k) };
        }
        out
    }

    /// `tr X(x)(t_1, ..., t_k)`, antisymmetrized over the order of the tangents,
    /// with its derivative along `dir`.
    pub fn form(&self, x: &Element, tangents: &[&TangentAssignment]) -> Result<(Q, Q), RepError> {
        let mut re = Q::zero();
        let mut eps = Q::zero();
        for (w, k) in x.terms() {
            let deg = w.degree() as usize;
            if deg != tangents.len() {
                return Err(RepError::Arity { expected: deg, got: tangents.len() });
            }
            for perm in (0..deg).permutations(deg) {
                let ts: Vec<&TangentAssignment> = perm.iter().map(|&i| tangents[i]).collect();
                let (a, b) = self.word(w, &ts).trace();
                let sign = if inversions(&perm).is_multiple_of(2) { k.clone() } else { -k.clone() };
                re += &a * &sign;
                eps += &b * &sign;
            }
        }
        Ok((re, eps))
    }
}

fn inversions(p: &[usize]) -> usize {
    p.iter().tuple_combinations().filter(|(a, b)| a > b).count()
}

pub fn evaluate(x: &Element, dq: &DoubleQuiver, pt: &MatrixPoint) -> Matrix {
    Evaluator::new(dq, pt).element(x).re
}

pub fn evaluate_form(
    x: &Element,
    dq: &DoubleQuiver,
    pt: &MatrixPoint,
    tangents: &[&TangentAssignment],
) -> Result<Q, RepError> {
    Ok(Evaluator::new(dq, pt).form(x, tangents)?.0)
}

/// Raw product of letter matrices, without normal forms.
pub fn evaluate_raw_word(w: &Word, dq: &DoubleQuiver, pt: &MatrixPoint) -> Matrix {
    Evaluator::new(dq, pt).word(w, &[]).re
}
