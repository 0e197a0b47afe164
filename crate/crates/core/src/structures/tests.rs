use super::*;
use crate::ncalg::{element_string, parse_element, qf, Element};
use crate::polyvec::PBracket;
use crate::quiver::{Arrow, DoubleQuiver, QuiverPresentation};

fn basic() -> DoubleQuiver {
    QuiverPresentation::basic().double()
}

#[allow(dead_code)]
fn loop_quiver() -> DoubleQuiver {
    QuiverPresentation::new(vec![1], vec![Arrow { name: "a".into(), tail: 1, head: 1 }])
        .unwrap()
        .double()
}

fn p(s: &str, dq: &DoubleQuiver) -> Element {
    parse_element(s, dq).unwrap()
}

#[test]
fn basic_structure_formulas() {
    let dq = basic();
    let s = quiver_qp(&dq);
    assert_eq!(
        s.p,
        p("1/2 (e_2 + a* a) D(a) D(a*) - 1/2 (e_1 + a a*) D(a*) D(a) - 1/2 (D(a*) a* - a D(a)) (D(a) a - a* D(a*))", &dq)
    );
    assert_eq!(s.phi.phi(1, &dq), p("e_1 + a a*", &dq));
    assert_eq!(s.phi.phi(2, &dq), p("g_{a*}", &dq));
}

#[test]
fn basic_axioms() {
    let dq = basic();
    let s = quiver_qp(&dq);
    for r in [check_p1(&s), check_p2(&s), check_p3(&s)] {
        assert!(r.passed, "{r:?}");
    }
}

#[test]
fn iota_p_of_da() {
    let dq = basic();
    let s = quiver_qp(&dq);
    let ip = s.iota_p();
    let got = ip.apply(&p("d(a)", &dq), &dq);
    println!("{}", element_string(&got, &dq));
    assert_eq!(got, p("1/2 D(a*) (e_2 + a* a) + 1/2 (e_1 + a a*) D(a*)", &dq));
}

// Independent of the `{P,P}` normalization: the triple bracket itself.
#[test]
fn triple_bracket_is_quarter_euler_cube() {
    for dq in [basic(), loop_quiver()] {
        let s = quiver_qp(&dq);
        let pb = PBracket::from_bivector(&s.p, &dq);
        let br = pb.bracket(&dq);
        let gens: Vec<Element> = (0..dq.num_arrows()).map(|c| Element::arrow(c, &dq)).collect();
        for a in &gens {
            for b in &gens {
                for c in &gens {
                    let lhs = br.triple(a, b, c);
                    let rhs = moment::euler_triple(a, b, c, &dq);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn omega_from_p_basic() {
    for dq in [basic(), loop_quiver()] {
        let s = quiver_qp(&dq);
        let w = omega_from_p(&s).unwrap();
        for r in [check_b1(&w), check_b2(&w), check_b3(&w), check_c(&s, &w)] {
            assert!(r.passed, "{r:?}");
        }
        let back = p_from_omega(&w).unwrap();
        assert!(crate::polyvec::pairing::cyclic_multiple(&back.p, &s.p, 1, &dq));
    }
}

#[test]
fn diagram_identities() {
    for dq in [basic(), loop_quiver()] {
        let s = quiver_qp(&dq);
        let w = omega_from_p(&s).unwrap();
        let d = build_diagram(&s, &w);
        let r = check_lemma72(&d);
        assert!(r.passed, "{r:?}");
        let r = check_prop74(&d);
        assert!(r.passed, "{r:?}");
    }
}

#[test]
fn fusion_of_basic_is_loop() {
    let s = quiver_qp(&basic());
    let f = fuse_structure(&s, 1, 2).unwrap();
    let l = quiver_qp(&loop_quiver());
    assert_eq!(f.dq, l.dq);
    assert!(crate::polyvec::pairing::cyclic_multiple(&f.p, &l.p, 1, &l.dq));
    assert_eq!(f.phi, l.phi);
    assert_eq!(f.phi.phi(1, &l.dq), p("(e_1 + a a*) g_{a*}", &l.dq));
    for r in [check_p1(&f), check_p2(&f), check_p3(&f)] {
        assert!(r.passed, "{r:?}");
    }
}

#[test]
fn algebroid_jacobi_basic() {
    let s = quiver_qp(&basic());
    let r = check_theorem53(&s, true);
    assert!(r.passed, "{:?}", r.details.iter().filter(|d| d.contains("Jacobi") || d.contains("anchor")).collect::<Vec<_>>());
}

fn chain() -> DoubleQuiver {
    QuiverPresentation::new(
        vec![1, 2, 3],
        vec![
            Arrow { name: "a".into(), tail: 1, head: 2 },
            Arrow { name: "b".into(), tail: 2, head: 3 },
        ],
    )
    .unwrap()
    .double()
}

#[test]
fn algebroid_jacobi_loop_and_chain() {
    for dq in [loop_quiver(), chain()] {
        let r = check_theorem53(&quiver_qp(&dq), false);
        assert!(r.passed, "{:?}", r.details);
    }
}

#[test]
fn leg_split_matches_p1() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut quivers = vec![basic(), loop_quiver()];
    quivers.extend((0..3).map(|_| crate::sample::random_quiver(3, 2, &mut rng).double()));
    for dq in quivers {
        let s = quiver_qp(&dq);
        assert!(check_p1(&s).passed);
        let r = check_prop54(&s);
        assert!(r.passed, "{:?}", r.details);
        let scaled = QPStructure { p: s.p.scale(&qf(2, 1)), ..s.clone() };
        assert_eq!(check_p1(&scaled).passed, check_prop54(&scaled).passed);
        assert!(!check_prop54(&scaled).passed);
    }
}

#[test]
fn hamiltonian_lemmas() {
    for dq in [basic(), loop_quiver()] {
        let s = quiver_qp(&dq);
        let w = omega_from_p(&s).unwrap();
        for r in [check_lemma77(&s, &w), check_lemma78(&s), check_lemma710(&s, &w)] {
            assert!(r.passed, "{}: {:?}", r.name, r.details);
        }
    }
}

#[test]
fn hamiltonian_lemma_controls() {
    let dq = basic();
    let s = quiver_qp(&dq);
    let w = omega_from_p(&s).unwrap();
    let bent = QBStructure { omega: &w.omega + &p("a a* d(a) d(a*)", &dq), ..w.clone() };
    assert!(!check_lemma710(&s, &bent).passed);
    assert!(!check_lemma77(&s, &bent).passed);
    let r = check_lemma78(&s);
    assert!(r.details.iter().any(|d| d.contains("nonzero") && !d.starts_with('0')), "{:?}", r.details);
}

#[test]
fn numeric_fallback_reports_its_mode() {
    // With the zero bivector there is no certificate and the rank drops.
    let dq = basic();
    let s = QPStructure { p: Element::zero(), ..quiver_qp(&dq) };
    let r = check_p3(&s);
    assert!(!r.passed);
    assert_eq!(r.mode, Mode::NumericFallback);
}
