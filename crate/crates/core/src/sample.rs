//! Seeded random words and elements for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::ncalg::{rewrite, Element, Q, Symbol, Word};
use crate::quiver::{Arrow, DoubleQuiver, QuiverPresentation, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    /// Arrows and inverses.
    Algebra,
    /// Algebra letters plus `dc`.
    Forms,
    /// Algebra letters plus `∂/∂c`.
    Poly,
}

fn letters(dq: &DoubleQuiver, alphabet: Alphabet) -> Vec<Symbol> {
    let mut out = Vec::new();
    for c in 0..dq.num_arrows() {
        out.push(Symbol::Arrow(c));
        out.push(Symbol::Inv(c));
        match alphabet {
            Alphabet::Algebra => {}
            Alphabet::Forms => out.push(Symbol::Diff(c)),
            Alphabet::Poly => out.push(Symbol::Partial(c)),
        }
    }
    out
}

/// A random composable raw word of length at most `max_len` (possibly reducible).
pub fn raw_word<R: Rng>(dq: &DoubleQuiver, alphabet: Alphabet, max_len: usize, rng: &mut R) -> Word {
    let verts = dq.vertices();
    let start: Vertex = *verts.choose(rng).expect("quiver has vertices");
    let all = letters(dq, alphabet);
    let len = rng.gen_range(0..=max_len);
    let mut w = Word::idempotent(start);
    for _ in 0..len {
        let cands: Vec<Symbol> = all
            .iter()
            .copied()
            .filter(|s| s.endpoints(dq).0 == w.end)
            .collect();
        let Some(&s) = cands.choose(rng) else { break };
        w = w.concat(&Word::letter(s, dq)).expect("composable by construction");
    }
    w
}

/// A raw word with exactly `deg` letters of degree one, when the walk allows it.
pub fn raw_word_of_degree<R: Rng>(
    dq: &DoubleQuiver,
    alphabet: Alphabet,
    max_len: usize,
    deg: u32,
    rng: &mut R,
) -> Option<Word> {
    (0..200)
        .map(|_| raw_word(dq, alphabet, max_len, rng))
        .find(|w| w.degree() == deg)
}

/// A random raw word that contains at least one redex.
pub fn reducible_word<R: Rng>(dq: &DoubleQuiver, max_len: usize, rng: &mut R) -> Option<Word> {
    (0..500)
        .map(|_| raw_word(dq, Alphabet::Algebra, max_len, rng))
        .find(|w| !rewrite::is_normal(w))
}

fn small_rational<R: Rng>(rng: &mut R) -> Q {
    let n: i64 = rng.gen_range(-3..=3);
    let d: i64 = rng.gen_range(1..=2);
    Q::new(n.into(), d.into())
}

/// A random homogeneous combination of normalized words of the given degree.
pub fn element<R: Rng>(
    dq: &DoubleQuiver,
    alphabet: Alphabet,
    terms: usize,
    max_len: usize,
    deg: u32,
    rng: &mut R,
) -> Element {
    let mut out = Element::zero();
    for _ in 0..terms {
        if let Some(w) = raw_word_of_degree(dq, alphabet, max_len, deg, rng) {
            out.add_scaled(&Element::normal_form(w), &small_rational(rng));
        }
    }
    out
}

/// A quiver on up to `max_vertices` vertices with `num_arrows` arrows between
/// random vertices (loops allowed). Arrows are named `a`, `b`, ...
pub fn random_quiver<R: Rng>(max_vertices: u32, num_arrows: usize, rng: &mut R) -> QuiverPresentation {
    let n = rng.gen_range(1..=max_vertices);
    let arrows = (0..num_arrows)
        .map(|i| Arrow {
            name: ((b'a' + i as u8) as char).to_string(),
            tail: rng.gen_range(1..=n),
            head: rng.gen_range(1..=n),
        })
        .collect();
    QuiverPresentation::new((1..=n).collect(), arrows).expect("valid by construction")
}
