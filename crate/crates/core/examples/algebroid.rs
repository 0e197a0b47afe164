//! The Lie algebroid bracket on forms plus `E` generators: Jacobi, the
//! anchor, and the split of `{{H_a, H_b}}` that is equivalent to P1.

use ncqh::quiver::parse_quiver;
use ncqh::structures::{check_p1, check_prop54, check_theorem53, quiver_qp};

fn main() -> anyhow::Result<()> {
    let root = env!("CARGO_MANIFEST_DIR");
    for name in ["basic", "loop", "chain"] {
        let q = parse_quiver(&std::fs::read_to_string(format!("{root}/data/{name}.quiver"))?)?;
        let s = quiver_qp(&q.double());
        let jac = check_theorem53(&s, true);
        let p54 = check_prop54(&s);
        println!(
            "{name:<6} jacobi+anchor {}  prop54 {}  p1 {}  ({} ms)",
            jac.passed,
            p54.passed,
            check_p1(&s).passed,
            jac.millis + p54.millis
        );
    }
    Ok(())
}
