//! Hamiltonian vector fields `H_a` against ω, `dΦ` and the Cartan three-form.

use ncqh::ncalg::parse_element;
use ncqh::structures::{check_lemma710, check_lemma77, check_lemma78, omega_from_p, quiver_qp, QBStructure};
use ncqh::QuiverPresentation;

fn main() -> anyhow::Result<()> {
    let dq = QuiverPresentation::basic().double();
    let s = quiver_qp(&dq);
    let w = omega_from_p(&s)?;
    for r in [check_lemma77(&s, &w), check_lemma78(&s), check_lemma710(&s, &w)] {
        println!("{:<9} {:<5} {}", r.name, r.passed, r.details.join("; "));
    }

    // A perturbed ω breaks them.
    let bad = QBStructure { omega: &w.omega + &parse_element("a a* d(a) d(a*)", &dq)?, ..w };
    println!("perturbed: lemma77 {}, lemma710 {}", check_lemma77(&s, &bad).passed, check_lemma710(&s, &bad).passed);
    Ok(())
}
