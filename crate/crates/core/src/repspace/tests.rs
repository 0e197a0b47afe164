use super::checks::*;
use super::*;
use crate::polyvec::PBracket;
use crate::quiver::QuiverPresentation;
use crate::structures::{omega_from_p, quiver_qp};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn basic() -> DoubleQuiver {
    QuiverPresentation::basic().double()
}


fn golden(n: usize, expected_rank: usize) {
    let dq = basic();
    let s = quiver_qp(&dq);
    let w = omega_from_p(&s).unwrap();
    let pb = PBracket::from_bivector(&s.p, &dq);
    let alpha = DimensionVector::uniform(&dq, n).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for seed in 0..3 {
        let pt = random_point(&dq, &alpha, seed).unwrap();
        assert_eq!(homomorphism(&dq, &pt, 20, &mut rng), 0);
        assert_eq!(rewriting_soundness(&dq, &pt, 20, &mut rng), 0);
        assert_eq!(gl_action(&dq, &pt), 0);
        let p3 = rank_nondegeneracy(&dq, &pt, RankMode::P3, Some(&pb), None, None, true);
        let b3 = rank_nondegeneracy(&dq, &pt, RankMode::B3, None, Some(&w.omega), Some(&s.phi), true);
        assert_eq!((p3.rank, b3.rank), (expected_rank, expected_rank));
        assert!(compatibility_residual(&s, &w, &pt).is_zero());
        assert_eq!(quasi_jacobi(&pb, &dq, &pt), 0);
    }
}

#[test]
fn basic_quiver_rank_one() {
    golden(1, 2);
}

#[test]
fn basic_quiver_rank_two() {
    golden(2, 8);
}

#[test]
fn zero_bivector_has_rank_zero() {
    let dq = basic();
    let pb = PBracket::from_bivector(&crate::ncalg::Element::zero(), &dq);
    let alpha = DimensionVector::uniform(&dq, 2).unwrap();
    let pt = random_point(&dq, &alpha, 42).unwrap();
    let r = rank_nondegeneracy(&dq, &pt, RankMode::P3, Some(&pb), None, None, false);
    assert_eq!(r.rank, 0);
    assert!(!r.full());
}

#[test]
fn random_point_is_deterministic() {
    let dq = basic();
    let alpha = DimensionVector::parse("1:2,2:2", &dq).unwrap();
    assert_eq!(random_point(&dq, &alpha, 42).unwrap(), random_point(&dq, &alpha, 42).unwrap());
    assert!(matches!(DimensionVector::parse("1:0,2:2", &dq), Err(RepError::ZeroDimension(1))));
    assert!(matches!(DimensionVector::parse("1:2", &dq), Err(RepError::MissingVertex(2))));
}

#[test]
fn d_commutes_with_evaluation() {
    let dq = basic();
    let alpha = DimensionVector::uniform(&dq, 2).unwrap();
    let pt = random_point(&dq, &alpha, 7).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for deg in 0..3 {
        for _ in 0..8 {
            let x = crate::sample::element(&dq, crate::sample::Alphabet::Forms, 2, 4, deg, &mut rng);
            assert!(d_matches_dual(&x, &dq, &pt, &mut rng));
        }
    }
}

#[test]
fn form_arity_is_checked() {
    let dq = basic();
    let alpha = DimensionVector::uniform(&dq, 1).unwrap();
    let pt = random_point(&dq, &alpha, 1).unwrap();
    let x = crate::ncalg::parse_element("d(a)", &dq).unwrap();
    assert!(matches!(evaluate_form(&x, &dq, &pt, &[]), Err(RepError::Arity { expected: 1, got: 0 })));
}
