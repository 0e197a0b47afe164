//! Solves for the quasi-bisymplectic ω compatible with the quiver's `(P, Φ)`
//! and converts it back.

use ncqh::ncalg::element_string;
use ncqh::polyvec::pairing::cyclic_multiple;
use ncqh::structures::{check_b1, check_b2, check_b3, check_c, omega_from_p, p_from_omega, quiver_qp};
use ncqh::QuiverPresentation;

fn main() -> anyhow::Result<()> {
    let dq = QuiverPresentation::basic().double();
    let s = quiver_qp(&dq);
    let w = omega_from_p(&s)?;
    println!("ω = {}", element_string(&w.omega, &dq));
    for r in [check_b1(&w), check_b2(&w), check_b3(&w), check_c(&s, &w)] {
        println!("{:<3} {}", r.name, if r.passed { "pass" } else { "FAIL" });
    }
    let back = p_from_omega(&w)?;
    println!("P recovered mod commutators: {}", cyclic_multiple(&back.p, &s.p, 1, &dq));
    Ok(())
}
