//! Builds `(P, Φ)` for a quiver file (default: every bundled quiver) and
//! checks P1, P2, P3.
//!
//!     cargo run --example quiver_axioms -- data/chain.quiver

use ncqh::quiver::parse_quiver;
use ncqh::structures::{check_p1, check_p2, check_p3, quiver_qp};

fn main() -> anyhow::Result<()> {
    let root = env!("CARGO_MANIFEST_DIR");
    let files: Vec<String> = match std::env::args().nth(1) {
        Some(f) => vec![f],
        None => ["basic", "loop", "chain", "point"].iter().map(|n| format!("{root}/data/{n}.quiver")).collect(),
    };
    for f in files {
        let q = parse_quiver(&std::fs::read_to_string(&f)?)?;
        let s = quiver_qp(&q.double());
        println!("{f}");
        for r in [check_p1(&s), check_p2(&s), check_p3(&s)] {
            println!("  {:<3} {:<5} {:?} {}", r.name, if r.passed { "pass" } else { "FAIL" }, r.mode, r.details.join("; "));
        }
    }
    Ok(())
}
