//! Classes modulo graded commutators.
//!
//! Rotation does not commute with the R2/R4 system: `c* g_c c` reduces to
//! `e - g_{c*}` while its rotation `c c* g_c` reduces to `e - g_c`. Classes
//! are therefore computed in the presentation without `g_{c*}` (c original),
//! using `g_{c*} = e - c* g_c c` and the rules `c c* g_c -> e - g_c`,
//! `g_c c c* -> e - g_c`, which are also confluent up to rotation.
//!
//! A class is represented by a cyclic word of that presentation whose every
//! rotation is normal, rotated to the minimal position. Rotating a block `x`
//! past `y` costs `(-1)^{|x||y|}`. Non-loop words are commutators and vanish.

use num::One;

use super::element::Element;
use super::rewrite::{alt_is_normal, alt_normal_form};
use super::word::Word;
use super::Q;
use crate::quiver::DoubleQuiver;

/// A canonical representative of a class in `X / [X, X]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyclic(pub Element);

impl Cyclic {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn element(&self) -> &Element {
        &self.0
    }
}

const MAX_DEPTH: usize = 10_000;

/// Rotation moving the first `k` letters to the back, with its sign.
fn rotate(w: &Word, k: usize, dq: &DoubleQuiver) -> (Word, bool) {
    if k == 0 {
        return (w.clone(), false);
    }
    let mut syms = w.syms[k..].to_vec();
    syms.extend_from_slice(&w.syms[..k]);
    let front: u32 = w.syms[..k].iter().map(|s| s.degree()).sum();
    let back: u32 = w.syms[k..].iter().map(|s| s.degree()).sum();
    let start = w.syms[k - 1].endpoints(dq).1;
    (
        Word {
            start,
            end: start,
            syms,
        },
        (front * back) % 2 == 1,
    )
}

// `w` is a loop word in the inverse-free presentation.
fn reduce_into(w: &Word, c: &Q, out: &mut Element, dq: &DoubleQuiver, depth: usize) {
    assert!(depth < MAX_DEPTH, "cyclic reduction did not terminate");
    if w.is_empty() {
        out.add_term(w.clone(), c.clone());
        return;
    }
    let n = w.len();
    let mut rots = Vec::with_capacity(n);
    for k in 0..n {
        let (r, odd) = rotate(w, k, dq);
        if !alt_is_normal(&r.syms) {
            let c2 = if odd { -c.clone() } else { c.clone() };
            for (v, k2) in alt_normal_form(&r).terms() {
                reduce_into(v, &(k2 * &c2), out, dq, depth + 1);
            }
            return;
        }
        rots.push((r, odd));
    }
    let mut best: Option<(Word, bool)> = None;
    for (r, odd) in rots {
        best = match best {
            None => Some((r, odd)),
            Some((b, bo)) => {
                if r < b {
                    Some((r, odd))
                } else if r == b && odd != bo {
                    // The word equals minus itself.
                    return;
                } else {
                    Some((b, bo))
                }
            }
        };
    }
    let (b, odd) = best.expect("nonempty word");
    out.add_term(b, if odd { -c.clone() } else { c.clone() });
}

/// Canonical class of `x` modulo graded commutators.
pub fn cyclic_reduce(x: &Element, dq: &DoubleQuiver) -> Cyclic {
    let mut out = Element::zero();
    for (w, c) in x.terms() {
        if !w.is_loop() {
            continue;
        }
        for (v, k) in alt_normal_form(w).terms() {
            reduce_into(v, &(k * c), &mut out, dq, 0);
        }
    }
    Cyclic(out)
}

/// Whether `x` lies in the span of graded commutators.
pub fn is_commutator_sum(x: &Element, dq: &DoubleQuiver) -> bool {
    cyclic_reduce(x, dq).is_zero()
}

/// Graded commutator `xy - (-1)^{|x||y|} yx` on homogeneous elements.
pub fn graded_commutator(x: &Element, y: &Element) -> Element {
    let dx = x.degree().unwrap_or(0);
    let dy = y.degree().unwrap_or(0);
    let sign = if (dx * dy) % 2 == 1 { -Q::one() } else { Q::one() };
    let mut out = x.mul(y);
    out.add_scaled(&y.mul(x), &-sign);
    out
}
