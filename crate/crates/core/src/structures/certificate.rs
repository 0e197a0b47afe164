//! Exact surjectivity certificates.
//!
//! A certificate writes a target (such as `∂/∂c`) as a finite combination
//! `Σ k u G v` of generators `G` with normal-word multipliers `u`, `v`. Finding
//! one is a sparse linear solve over `Q` in the basis of normal words.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::ncalg::{Element, Symbol, Word, Q};
use crate::quiver::DoubleQuiver;

/// Row echelon span of elements, tracking each row as a combination of the
/// inserted vectors.
#[derive(Debug, Default, Clone)]
pub struct Span {
    rows: Vec<(Element, BTreeMap<usize, Q>)>,
    pivots: BTreeMap<Word, usize>,
    inserted: usize,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn len(&self) -> usize {
        self.inserted
    }

    pub fn is_empty(&self) -> bool {
        self.inserted == 0
    }

    /// Reduces `x` against the rows; returns the residual and the combination
    /// `c` of inserted vectors with `x = residual + Σ c_i v_i`.
    pub fn reduce(&self, x: &Element) -> (Element, BTreeMap<usize, Q>) {
        let mut x = x.clone();
        let mut combo: BTreeMap<usize, Q> = BTreeMap::new();
        let mut cursor: Option<Word> = None;
        loop {
            let next = {
                let mut it: Box<dyn Iterator<Item = &Word>> = match &cursor {
                    Some(c) => Box::new(x.terms().range(..c.clone()).rev().map(|(w, _)| w)),
                    None => Box::new(x.terms().keys().rev()),
                };
                it.find(|w| self.pivots.contains_key(*w)).cloned()
            };
            let Some(w) = next else { break };
            let k = x.coeff(&w);
            let (row, rc) = &self.rows[self.pivots[&w]];
            x.add_scaled(row, &-k.clone());
            for (i, c) in rc {
                add_to(&mut combo, *i, &(c * &k));
            }
            cursor = Some(w);
        }
        (x, combo)
    }

    /// Inserts `x`; returns its index.
    pub fn insert(&mut self, x: &Element) -> usize {
        let idx = self.inserted;
        self.inserted += 1;
        let (res, combo) = self.reduce(x);
        if res.is_zero() {
            return idx;
        }
        let (lead, k) = res.terms().iter().next_back().map(|(w, k)| (w.clone(), k.clone())).unwrap();
        let inv = Q::one() / k;
        let mut rc: BTreeMap<usize, Q> = BTreeMap::new();
        rc.insert(idx, inv.clone());
        for (i, c) in combo {
            add_to(&mut rc, i, &(-c * &inv));
        }
        self.pivots.insert(lead, self.rows.len());
        self.rows.push((res.scale(&inv), rc));
        idx
    }

    /// Coefficients `c` with `target = Σ c_i v_i`, if the target is in the span.
    pub fn solve(&self, target: &Element) -> Option<BTreeMap<usize, Q>> {
        let (res, combo) = self.reduce(target);
        res.is_zero().then_some(combo)
    }
}

fn add_to(m: &mut BTreeMap<usize, Q>, i: usize, c: &Q) {
    let v = m.entry(i).or_insert_with(Q::zero);
    *v += c;
    if v.is_zero() {
        m.remove(&i);
    }
}

/// Normal words of degree 0 and length at most `max_len`, including idempotents.
pub fn normal_words(dq: &DoubleQuiver, max_len: usize) -> Vec<Word> {
    let letters: Vec<Symbol> = (0..dq.num_arrows())
        .flat_map(|c| [Symbol::Arrow(c), Symbol::Inv(c)])
        .collect();
    let mut out: Vec<Word> = dq.vertices().iter().map(|&p| Word::idempotent(p)).collect();
    let mut layer: Vec<Word> = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &s in &letters {
                let Some(x) = w.concat(&Word::letter(s, dq)) else { continue };
                if Element::normal_form(x.clone()) == Element::from_word(x.clone()) {
                    next.push(x);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `target = Σ k · u · G_g · v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub target: Element,
    pub terms: Vec<(Word, usize, Word, Q)>,
}

impl Certificate {
    /// `Σ k u images[g] v`: the same combination applied to other generators.
    pub fn apply(&self, images: &[Element]) -> Element {
        let mut out = Element::zero();
        for (u, g, v, k) in &self.terms {
            let x = Element::from_word(u.clone())
                .mul(&images[*g])
                .mul(&Element::from_word(v.clone()));
            out.add_scaled(&x, k);
        }
        out
    }
}

/// Searches certificates for every target, with multipliers of length up to
/// `max_len`, trying shorter multipliers first.
pub fn find_certificates(
    targets: &[Element],
    gens: &[Element],
    dq: &DoubleQuiver,
    max_len: usize,
) -> Vec<Option<Certificate>> {
    let mut found: Vec<Option<Certificate>> = vec![None; targets.len()];
    for len in 0..=max_len {
        let words = normal_words(dq, len);
        let mut span = Span::new();
        let mut labels: Vec<(Word, usize, Word)> = Vec::new();
        for (g, gen) in gens.iter().enumerate() {
            for u in &words {
                let ug = Element::from_word(u.clone()).mul(gen);
                if ug.is_zero() {
                    continue;
                }
                for v in &words {
                    let x = ug.mul(&Element::from_word(v.clone()));
                    if x.is_zero() {
                        continue;
                    }
                    span.insert(&x);
                    labels.push((u.clone(), g, v.clone()));
                }
            }
        }
        for (i, t) in targets.iter().enumerate() {
            if found[i].is_some() {
                continue;
            }
            if let Some(combo) = span.solve(t) {
                let terms = combo
                    .into_iter()
                    .map(|(j, k)| {
                        let (u, g, v) = labels[j].clone();
                        (u, g, v, k)
                    })
                    .collect();
                found[i] = Some(Certificate {
                    target: t.clone(),
                    terms,
                });
            }
        }
        if found.iter().all(Option::is_some) {
            break;
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::parse_element;
    use crate::quiver::QuiverPresentation;

    #[test]
    fn span_solves_and_rejects() {
        let dq = QuiverPresentation::basic().double();
        let p = |s: &str| parse_element(s, &dq).unwrap();
        let mut span = Span::new();
        span.insert(&p("a + a a* a"));
        span.insert(&p("a a* a"));
        span.insert(&p("2 a + a a* a"));
        assert_eq!(span.rank(), 2);
        let c = span.solve(&p("a")).unwrap();
        let mut back = Element::zero();
        let vs = [p("a + a a* a"), p("a a* a"), p("2 a + a a* a")];
        for (i, k) in c {
            back.add_scaled(&vs[i], &k);
        }
        assert_eq!(back, p("a"));
        assert!(span.solve(&p("a g_{a*}")).is_none());
    }

    #[test]
    fn normal_words_are_normal_and_distinct() {
        let dq = QuiverPresentation::basic().double();
        let ws = normal_words(&dq, 2);
        let set: std::collections::BTreeSet<_> = ws.iter().cloned().collect();
        assert_eq!(set.len(), ws.len());
        assert!(ws.iter().all(|w| w.len() <= 2));
    }
}
