//! Numeric rank checks used when no symbolic certificate is found: full rank
//! of the non-degeneracy map at seeded points of `Rep(A, α)` for `α = 1, 2`.
//! This is evidence, not a proof, and the report says so through its mode.

use crate::polyvec::PBracket;
use crate::repspace::checks::{rank_nondegeneracy, RankMode, RankReport};
use crate::repspace::{random_point, DimensionVector};

use super::qp::{QBStructure, QPStructure};
use super::report::{CheckReport, Mode};

const POINTS: u64 = 5;

fn run(r: &mut CheckReport, dq: &crate::quiver::DoubleQuiver, rank: impl Fn(&crate::repspace::MatrixPoint) -> RankReport) {
    if r.details.iter().any(|d| d.contains("does not reproduce")) {
        return;
    }
    r.mode = Mode::NumericFallback;
    r.residual = None;
    r.passed = true;
    for n in 1..=2 {
        let alpha = DimensionVector::uniform(dq, n).expect("uniform dimension vector");
        for seed in 0..POINTS {
            match random_point(dq, &alpha, seed) {
                Ok(pt) => {
                    let rep = rank(&pt);
                    if !rep.full() {
                        r.fail(format!("rank {} < {} at α = {n}, seed {seed}", rep.rank, rep.dim), None);
                    }
                }
                Err(e) => r.fail(format!("α = {n}, seed {seed}: {e}"), None),
            }
        }
    }
    if r.passed {
        r.note(format!("full rank at {} seeded points", 2 * POINTS));
    }
}

pub fn numeric_p3(s: &QPStructure, r: &mut CheckReport) {
    let pb = PBracket::from_bivector(&s.p, &s.dq);
    run(r, &s.dq, |pt| rank_nondegeneracy(&s.dq, pt, RankMode::P3, Some(&pb), None, None, true));
}

pub fn numeric_b3(s: &QBStructure, r: &mut CheckReport) {
    run(r, &s.dq, |pt| {
        rank_nondegeneracy(&s.dq, pt, RankMode::B3, None, Some(&s.omega), Some(&s.phi), true)
    });
}
