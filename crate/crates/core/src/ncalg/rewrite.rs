//! Normal forms for the localized path algebra.
//!
//! Rules, for every arrow `c` of the double quiver:
//!
//! * R2: `c c* g_c -> e - g_c`
//! * R4: `g_c c -> c g_{c*}`
//!
//! Idempotents never appear inside words and non-composable products are
//! dropped before rewriting, so these two rules are the whole system.

use num::One;

use super::element::Element;
use super::symbol::Symbol;
use super::word::Word;
use super::Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    R2,
    R4,
}

/// Whether a rule applies at position `i`.
pub fn redex_at(syms: &[Symbol], i: usize) -> Option<Rule> {
    match (syms.get(i), syms.get(i + 1), syms.get(i + 2)) {
        (Some(Symbol::Inv(c)), Some(Symbol::Arrow(d)), _) if c == d => Some(Rule::R4),
        (Some(Symbol::Arrow(c)), Some(Symbol::Arrow(d)), Some(Symbol::Inv(g)))
            if *d == c ^ 1 && g == c =>
        {
            Some(Rule::R2)
        }
        _ => None,
    }
}

pub fn find_redex(syms: &[Symbol], from: usize) -> Option<(usize, Rule)> {
    (from..syms.len()).find_map(|i| redex_at(syms, i).map(|r| (i, r)))
}

pub fn is_normal(w: &Word) -> bool {
    find_redex(&w.syms, 0).is_none()
}

/// One rewrite step at `i`: the result as (word, sign) pairs.
pub fn apply_rule(w: &Word, i: usize, rule: Rule) -> Vec<(Word, i8)> {
    match rule {
        Rule::R4 => {
            let Symbol::Inv(c) = w.syms[i] else { unreachable!() };
            let mut syms = w.syms.clone();
            syms[i] = Symbol::Arrow(c);
            syms[i + 1] = Symbol::Inv(c ^ 1);
            vec![(Word { syms, ..w.clone() }, 1)]
        }
        Rule::R2 => {
            let Symbol::Arrow(c) = w.syms[i] else { unreachable!() };
            let mut kept = w.syms[..i].to_vec();
            kept.extend_from_slice(&w.syms[i + 3..]);
            let mut with_g = w.syms[..i].to_vec();
            with_g.push(Symbol::Inv(c));
            with_g.extend_from_slice(&w.syms[i + 3..]);
            vec![
                (Word { syms: kept, ..w.clone() }, 1),
                (Word { syms: with_g, ..w.clone() }, -1),
            ]
        }
    }
}

/// Normal form of a composable word, searching for redexes from `from` on.
///
/// The caller promises `syms[..from]` has no redex starting before `from`.
pub(crate) fn normal_form_from(w: Word, from: usize) -> Element {
    let mut out = Element::zero();
    let mut stack: Vec<(Word, Q, usize)> = vec![(w, Q::one(), from)];
    while let Some((w, c, from)) = stack.pop() {
        match find_redex(&w.syms, from) {
            None => out.add_term(w, c),
            Some((i, rule)) => {
                let back = i.saturating_sub(2);
                for (v, s) in apply_rule(&w, i, rule) {
                    let k = if s > 0 { c.clone() } else { -c.clone() };
                    stack.push((v, k, back));
                }
            }
        }
    }
    out
}

/// Normal form reached by always rewriting the redex picked by `choose`
/// among all current redexes. Used to test confluence empirically.
pub fn normal_form_with<F: FnMut(usize) -> usize>(w: Word, mut choose: F) -> Element {
    let mut out = Element::zero();
    let mut stack: Vec<(Word, Q)> = vec![(w, Q::one())];
    while let Some((w, c)) = stack.pop() {
        let redexes: Vec<(usize, Rule)> = (0..w.syms.len())
            .filter_map(|i| redex_at(&w.syms, i).map(|r| (i, r)))
            .collect();
        if redexes.is_empty() {
            out.add_term(w, c);
            continue;
        }
        let (i, rule) = redexes[choose(redexes.len()) % redexes.len()];
        for (v, s) in apply_rule(&w, i, rule) {
            let k = if s > 0 { c.clone() } else { -c.clone() };
            stack.push((v, k));
        }
    }
    out
}

/// Redexes of the inverse-free presentation used for cyclic classes:
/// only `g_c` with `c` original, and `c c* g_c -> e - g_c`, `g_c c c* -> e - g_c`.
fn alt_redex_at(syms: &[Symbol], i: usize) -> bool {
    match (syms.get(i), syms.get(i + 1), syms.get(i + 2)) {
        (Some(Symbol::Arrow(c)), Some(Symbol::Arrow(d)), Some(Symbol::Inv(g))) => {
            c & 1 == 0 && *d == c ^ 1 && g == c
        }
        (Some(Symbol::Inv(g)), Some(Symbol::Arrow(c)), Some(Symbol::Arrow(d))) => {
            g & 1 == 0 && c == g && *d == c ^ 1
        }
        _ => false,
    }
}

pub(crate) fn alt_is_normal(syms: &[Symbol]) -> bool {
    !(0..syms.len()).any(|i| alt_redex_at(syms, i))
}

/// Rewrites a word into the inverse-free presentation: every `g_{c*}`
/// (c original) becomes `e - c* g_c c`, then both rules are applied.
pub(crate) fn alt_normal_form(w: &Word) -> Element {
    let mut expanded: Vec<(Vec<Symbol>, Q)> = vec![(Vec::new(), Q::one())];
    for &s in &w.syms {
        match s {
            Symbol::Inv(c) if c & 1 == 1 => {
                let mut next = Vec::with_capacity(2 * expanded.len());
                for (v, k) in expanded {
                    let mut long = v.clone();
                    long.extend([Symbol::Arrow(c), Symbol::Inv(c ^ 1), Symbol::Arrow(c ^ 1)]);
                    next.push((v, k.clone()));
                    next.push((long, -k));
                }
                expanded = next;
            }
            _ => expanded.iter_mut().for_each(|(v, _)| v.push(s)),
        }
    }
    let mut out = Element::zero();
    let mut stack: Vec<(Vec<Symbol>, Q)> = expanded;
    while let Some((v, c)) = stack.pop() {
        match (0..v.len()).find(|&i| alt_redex_at(&v, i)) {
            None => out.add_term(
                Word {
                    start: w.start,
                    end: w.end,
                    syms: v,
                },
                c,
            ),
            Some(i) => {
                let g = match v[i] {
                    Symbol::Arrow(a) | Symbol::Inv(a) => a,
                    _ => unreachable!(),
                };
                let mut kept = v[..i].to_vec();
                kept.extend_from_slice(&v[i + 3..]);
                let mut with_g = v[..i].to_vec();
                with_g.push(Symbol::Inv(g));
                with_g.extend_from_slice(&v[i + 3..]);
                stack.push((kept, c.clone()));
                stack.push((with_g, -c));
            }
        }
    }
    out
}
