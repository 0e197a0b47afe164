//! Normal forms in the localized path algebra: the inverses `g_c` absorb
//! `c c*` and slide past arrows.

use ncqh::ncalg::{element_string, invert, parse_element};
use ncqh::QuiverPresentation;

fn main() -> anyhow::Result<()> {
    let dq = QuiverPresentation::basic().double();
    for expr in ["g_a * a", "g_a (e_1 + a a*)", "a* g_a", "(e_1 + a a*) g_a a a*", "1/2 (e_1 + a a*) - 1/2 a a*"] {
        let x = parse_element(expr, &dq)?;
        println!("{expr:>24}  =>  {}", element_string(&x, &dq));
    }

    let phi = parse_element("(e_1 + a a*)", &dq)?;
    let inv = invert(&phi, &dq)?;
    println!("inverse of e_1 + a a* is {}", element_string(&inv, &dq));
    println!("product: {}", element_string(&phi.mul(&inv), &dq));
    Ok(())
}
