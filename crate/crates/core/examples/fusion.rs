//! Gluing the two vertices of the basic quiver gives the one-loop quiver,
//! with `P^ff = P^f - ½ E_1 E_2` and `Φ = Φ_1 Φ_2`.

use ncqh::ncalg::element_string;
use ncqh::polyvec::pairing::cyclic_multiple;
use ncqh::quiver::{parse_quiver, serialize_quiver};
use ncqh::structures::{check_p1, check_p2, check_p3, fuse_structure, quiver_qp};
use ncqh::QuiverPresentation;

fn main() -> anyhow::Result<()> {
    let s = quiver_qp(&QuiverPresentation::basic().double());
    let f = fuse_structure(&s, 1, 2)?;
    print!("{}", serialize_quiver(f.dq.base()));
    println!("Φ_1 = {}", element_string(&f.phi.phi(1, &f.dq), &f.dq));

    let l = quiver_qp(&parse_quiver(include_str!("../data/loop.quiver"))?.double());
    println!("same as the loop quiver: P {}, Φ {}", cyclic_multiple(&f.p, &l.p, 1, &l.dq), f.phi == l.phi);
    for r in [check_p1(&f), check_p2(&f), check_p3(&f)] {
        println!("{} {}", r.name, r.passed);
    }
    Ok(())
}
