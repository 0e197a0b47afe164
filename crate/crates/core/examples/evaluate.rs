//! Evaluating an algebra element and a two-form at one point of `Rep(A, α)`.

use ncqh::ncalg::parse_element;
use ncqh::repspace::{evaluate, evaluate_form, random_point, ArrowMatrices, DimensionVector};
use ncqh::QuiverPresentation;
use rand::SeedableRng;

fn main() -> anyhow::Result<()> {
    let dq = QuiverPresentation::basic().double();
    let alpha = DimensionVector::parse("1:2,2:1", &dq)?;
    let pt = random_point(&dq, &alpha, 42)?;
    println!("X(a) = {}", pt.x.x[0]);
    println!("X(a*) = {}", pt.x.x[1]);

    let phi = parse_element("e_1 + a a*", &dq)?;
    let g = parse_element("g_a", &dq)?;
    println!("X(Φ_1) X(g_a) = {}", &evaluate(&phi, &dq, &pt) * &evaluate(&g, &dq, &pt));

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let (t, u) = (ArrowMatrices::random(&dq, &alpha, &mut rng), ArrowMatrices::random(&dq, &alpha, &mut rng));
    let w = parse_element("d(a) d(a*)", &dq)?;
    println!("tr(da da*)(t, u) = {}", evaluate_form(&w, &dq, &pt, &[&t, &u])?);
    Ok(())
}
