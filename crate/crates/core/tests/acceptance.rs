//! The ten acceptance criteria. Runs without the libtest harness so every
//! criterion prints exactly one PASS or FAIL line; exits nonzero on any FAIL.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ncqh::diffcalc::d;
use ncqh::ncalg::{element_string, parse_element, qf};
use ncqh::polyvec::pairing::cyclic_multiple;
use ncqh::repspace::checks::{self, RankMode};
use ncqh::repspace::{random_point, DimensionVector};
use ncqh::sample::{self, random_quiver, Alphabet};
use ncqh::structures::*;
use ncqh::{DoubleQuiver, Element, QuiverPresentation};

type Verdict = Result<String, String>;

fn basic() -> DoubleQuiver {
    QuiverPresentation::basic().double()
}

fn loop_quiver() -> DoubleQuiver {
    let q = ncqh::quiver::parse_quiver(include_str!("../data/loop.quiver")).expect("loop quiver");
    q.double()
}

fn el(s: &str, dq: &DoubleQuiver) -> Element {
    parse_element(s, dq).expect("fixed expression parses")
}

fn require(reports: &[CheckReport]) -> Result<(), String> {
    match reports.iter().find(|r| !r.passed) {
        None => Ok(()),
        Some(r) => Err(format!("{} failed: {:?} residual {:?}", r.name, r.details, r.residual)),
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!("{what} took {t:?}, limit {limit:?}"));
    }
    Ok(())
}

fn axioms(s: &QPStructure) -> Result<(), String> {
    for check in [check_p1, check_p2, check_p3] {
        let start = Instant::now();
        require(&[check(s)])?;
        within(start, Duration::from_secs(30), "axiom check")?;
    }
    Ok(())
}

fn criterion1() -> Verdict {
    let s = quiver_qp(&basic());
    axioms(&s)?;
    let f = fuse_structure(&s, 1, 2).map_err(|e| e.to_string())?;
    axioms(&f)?;
    Ok("P1, P2, P3 hold on the basic quiver and on its fusion".into())
}

fn criterion2() -> Verdict {
    let dq = basic();
    let s = quiver_qp(&dq);
    let got = s.iota_p().apply(&el("d(a)", &dq), &dq);
    let want = el("1/2 D(a*) (e_2 + a* a) + 1/2 (e_1 + a a*) D(a*)", &dq);
    if got != want {
        return Err(format!("ı(P)(da) = {}", element_string(&got, &dq)));
    }
    // got - (e_1 + aa*)∂/∂a* lies in the sub-bimodule generated by E_1, E_2.
    let reduced = el("(e_1 + a a*) D(a*)", &dq);
    let a = el("a", &dq);
    let witness = (&euler(1, &dq).mul(&a) + &a.mul(&euler(2, &dq))).scale(&qf(1, 2));
    if &got - &reduced != witness {
        return Err(format!("difference {} is not ½(E_1 a + a E_2)", element_string(&(&got - &reduced), &dq)));
    }
    Ok("ı(P)(da) matches and equals (e_1 + aa*)∂/∂a* + ½(E_1 a + a E_2)".into())
}

fn criterion3() -> Verdict {
    let start = Instant::now();
    let s = quiver_qp(&basic());
    let w = omega_from_p(&s).map_err(|e| e.to_string())?;
    require(&[check_b1(&w), check_b2(&w), check_b3(&w), check_c(&s, &w)])?;
    let back = p_from_omega(&w).map_err(|e| e.to_string())?;
    if !cyclic_multiple(&back.p, &s.p, 1, &s.dq) {
        return Err("P from ω differs from P mod commutators".into());
    }
    within(start, Duration::from_secs(120), "criterion 3")?;
    Ok("ω passes B1, B2, B3, C and gives back P".into())
}

fn criterion4() -> Verdict {
    let f = fuse_structure(&quiver_qp(&basic()), 1, 2).map_err(|e| e.to_string())?;
    let l = quiver_qp(&loop_quiver());
    if f.dq != l.dq {
        return Err("fused quiver is not the loop quiver".into());
    }
    if !cyclic_multiple(&f.p, &l.p, 1, &l.dq) {
        return Err("fused P differs from the loop quiver's P".into());
    }
    if f.phi != l.phi {
        return Err("fused Φ differs from the loop quiver's Φ".into());
    }
    axioms(&f)?;
    Ok("fused basic quiver equals the loop quiver structure and passes P1-P3".into())
}

fn criterion5() -> Verdict {
    let s = quiver_qp(&basic());
    let w = omega_from_p(&s).map_err(|e| e.to_string())?;
    let dm = build_diagram(&s, &w);
    require(&[check_lemma72(&dm), check_prop74(&dm)])?;
    Ok("diagram squares, ¼γβα + εδ = 1 and all seven identities hold".into())
}

fn criterion6() -> Verdict {
    let start = Instant::now();
    let r = check_theorem53(&quiver_qp(&basic()), false);
    let details = r.details.join("; ");
    require(&[r])?;
    within(start, Duration::from_secs(300), "criterion 6")?;
    Ok(format!("Jacobi and anchor on {{da, da*, E_1, E_2}} ({details})"))
}

fn criterion7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut quivers = vec![basic(), loop_quiver()];
    quivers.extend((0..3).map(|_| random_quiver(3, 2, &mut rng).double()));
    for dq in &quivers {
        let s = quiver_qp(dq);
        // 2P violates P1, so the comparison is also made on a failing case.
        let scaled = QPStructure { p: s.p.scale(&qf(2, 1)), ..s.clone() };
        for (t, expect) in [(&s, true), (&scaled, false)] {
            let (p1, p54) = (check_p1(t).passed, check_prop54(t).passed);
            if p1 != p54 || p1 != expect {
                return Err(format!("verdicts p1 {p1}, prop54 {p54}; expected {expect}"));
            }
        }
    }
    Ok(format!("prop54 agrees with p1 on {} quivers and their 2P controls", quivers.len()))
}

fn criterion8() -> Verdict {
    const SEED: u64 = 42;
    const POINTS: u64 = 20;
    const PRODUCTS: usize = 200;
    let start = Instant::now();
    let dq = basic();
    let s = quiver_qp(&dq);
    let w = omega_from_p(&s).map_err(|e| e.to_string())?;
    let pb = ncqh::polyvec::PBracket::from_bivector(&s.p, &dq);
    for (n, golden) in [(1, 2), (2, 8)] {
        let alpha = DimensionVector::uniform(&dq, n).map_err(|e| e.to_string())?;
        for i in 0..POINTS {
            let seed = SEED + i;
            let at = |what: &str| format!("{what} at α = ({n},{n}), seed {seed}");
            let pt = random_point(&dq, &alpha, seed).map_err(|e| e.to_string())?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if checks::homomorphism(&dq, &pt, PRODUCTS, &mut rng) != 0 {
                return Err(at("homomorphism fails"));
            }
            if checks::gl_action(&dq, &pt) != 0 {
                return Err(at("gl action differs"));
            }
            let p3 = checks::rank_nondegeneracy(&dq, &pt, RankMode::P3, Some(&pb), None, None, true);
            let b3 = checks::rank_nondegeneracy(&dq, &pt, RankMode::B3, None, Some(&w.omega), Some(&w.phi), true);
            if p3.rank != golden || b3.rank != golden || p3.dim != golden {
                return Err(at(&format!("ranks {} / {} of {golden}", p3.rank, b3.rank)));
            }
            if !checks::compatibility_residual(&s, &w, &pt).is_zero() {
                return Err(at("compatibility fails"));
            }
            if checks::quasi_jacobi(&pb, &dq, &pt) != 0 {
                return Err(at("quasi-Jacobi fails"));
            }
        }
    }
    within(start, Duration::from_secs(180), "criterion 8")?;
    Ok(format!("{} points, ranks 2 and 8, all oracles exact", 2 * POINTS))
}

fn criterion9() -> Verdict {
    let dq = basic();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for i in 0..100u32 {
        let x = sample::element(&dq, Alphabet::Forms, 3, 5, i % 3, &mut rng);
        if !d(&d(&x, &dq), &dq).is_zero() {
            return Err(format!("d² ≠ 0 on {}", element_string(&x, &dq)));
        }
    }
    let alpha = DimensionVector::uniform(&dq, 2).map_err(|e| e.to_string())?;
    let pt = random_point(&dq, &alpha, 42).map_err(|e| e.to_string())?;
    for i in 0..100u32 {
        let x = sample::element(&dq, Alphabet::Forms, 1, 5, i % 2, &mut rng);
        if !checks::d_matches_dual(&x, &dq, &pt, &mut rng) {
            return Err(format!("dual-number oracle fails on {}", element_string(&x, &dq)));
        }
    }
    if checks::rewriting_soundness(&dq, &pt, 200, &mut rng) != 0 {
        return Err("a normal form evaluates differently from its raw word".into());
    }
    Ok("d² = 0 on 100 forms, d matches 100 dual-number derivatives, 200 words rewrite soundly".into())
}

fn criterion10() -> Verdict {
    let s = quiver_qp(&basic());
    let w = omega_from_p(&s).map_err(|e| e.to_string())?;
    require(&[check_lemma77(&s, &w), check_lemma78(&s), check_lemma710(&s, &w)])?;
    Ok("Hamiltonian vector field identities hold on all generators".into())
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Verdict); 10] = [
        (1, criterion1),
        (2, criterion2),
        (3, criterion3),
        (4, criterion4),
        (5, criterion5),
        (6, criterion6),
        (7, criterion7),
        (8, criterion8),
        (9, criterion9),
        (10, criterion10),
    ];
    let mut failed = 0;
    for (n, f) in criteria {
        let start = Instant::now();
        match f() {
            Ok(msg) => println!("PASS criterion {n}: {msg} ({:.2?})", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n}: {msg}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
