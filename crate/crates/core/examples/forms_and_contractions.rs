//! Noncommutative differential forms: `d`, its square, the contractions
//! `i_δ` and `ı_δ`, and classes in the Karoubi–de Rham complex.

use ncqh::diffcalc::{contract_i, contract_iota, d, dr_class};
use ncqh::ncalg::{element_string, parse_element, tensor_string};
use ncqh::polyvec::DoubleDerivation;
use ncqh::QuiverPresentation;

fn main() {
    let dq = QuiverPresentation::basic().double();
    let p = |s: &str| parse_element(s, &dq).expect("valid expression");

    let phi = p("e_1 + a a*");
    let dphi = d(&phi, &dq);
    println!("d(e_1 + a a*) = {}", element_string(&dphi, &dq));
    println!("d² = {}", element_string(&d(&dphi, &dq), &dq));

    let g = p("g_a");
    println!("d(g_a) = {}", element_string(&d(&g, &dq), &dq));

    let da = DoubleDerivation::partial(dq.index_of("a").unwrap(), &dq);
    let w = p("d(a) d(a*)");
    println!("i_(∂/∂a)(da da*) = {}", tensor_string(&contract_i(&da, &w, &dq), &dq));
    println!("ı_(∂/∂a)(da da*) = {}", element_string(&contract_iota(&da, &w, &dq), &dq));

    // a da* - da* a is a commutator, so its class vanishes.
    let c = p("a d(a*) - d(a*) a");
    println!("class of a da* - da* a is zero: {}", dr_class(&c, &dq).is_zero());
}
