//! The double bracket of the quiver bivector on arrows, its triple bracket
//! against ¼ E(a)E(b)E(c), and the Schouten bracket `{P, P}`.

use ncqh::ncalg::{cyclic_reduce, element_string, qf, tensor_string};
use ncqh::polyvec::{schouten, PBracket};
use ncqh::structures::moment::{euler_total, euler_triple};
use ncqh::structures::quiver_qp;
use ncqh::{Element, QuiverPresentation};

fn main() {
    let dq = QuiverPresentation::basic().double();
    let s = quiver_qp(&dq);
    println!("P = {}", element_string(&s.p, &dq));

    let pb = PBracket::from_bivector(&s.p, &dq);
    for c in 0..dq.num_arrows() {
        for e in 0..dq.num_arrows() {
            println!("{{{{{}, {}}}}} = {}", dq.name(c), dq.name(e), tensor_string(&pb.on_arrows(c, e), &dq));
        }
    }

    let br = pb.bracket(&dq);
    let arrows: Vec<Element> = (0..dq.num_arrows()).map(|c| Element::arrow(c, &dq)).collect();
    let mut agree = 0;
    for a in &arrows {
        for b in &arrows {
            for c in &arrows {
                agree += usize::from(br.triple(a, b, c) == euler_triple(a, b, c, &dq));
            }
        }
    }
    println!("triple bracket = ¼°(E°E°E°) on {agree} of {} arrow triples", arrows.len().pow(3));

    let sn = schouten(&dq);
    let pp = sn.mod_bracket(&s.p, &s.p).scale(&qf(1, 2));
    let e = euler_total(&dq);
    let res = cyclic_reduce(&(&pp - &e.mul(&e).mul(&e).scale(&qf(1, 12))), &dq);
    println!("{{P, P}} - E³/12 vanishes mod commutators: {}", res.is_zero());
}
