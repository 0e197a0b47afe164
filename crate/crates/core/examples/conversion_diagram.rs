//! The maps between forms, vector fields and the formal `E` generators that
//! convert between `P` and `ω`, and the identities they satisfy.

use ncqh::structures::{build_diagram, check_lemma72, check_prop74, omega_from_p, quiver_qp};
use ncqh::QuiverPresentation;

fn main() -> anyhow::Result<()> {
    let s = quiver_qp(&QuiverPresentation::basic().double());
    let w = omega_from_p(&s)?;
    let d = build_diagram(&s, &w);
    for r in [check_lemma72(&d), check_prop74(&d)] {
        println!("{}: {}", r.name, if r.passed { "pass" } else { "FAIL" });
        for line in &r.details {
            println!("  {line}");
        }
    }
    Ok(())
}
