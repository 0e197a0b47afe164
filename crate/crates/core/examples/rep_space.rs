//! Exact evaluation on a representation space: ranks, the gl action,
//! compatibility and the quasi-Jacobi identity at seeded rational points.
//!
//!     cargo run --release --example rep_space -- 1:2,2:2 42

use ncqh::cli::numeric_campaign;
use ncqh::repspace::DimensionVector;
use ncqh::structures::{omega_from_p, quiver_qp};
use ncqh::QuiverPresentation;

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let alpha = args.next().unwrap_or_else(|| "1:2,2:2".into());
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(42);

    let s = quiver_qp(&QuiverPresentation::basic().double());
    let w = omega_from_p(&s)?;
    let alpha = DimensionVector::parse(&alpha, &s.dq)?;
    let report = numeric_campaign(&s, Some(&w), &alpha, seed, 3)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
