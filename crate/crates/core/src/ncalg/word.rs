use std::cmp::Ordering;

use super::symbol::Symbol;
use crate::quiver::{DoubleQuiver, Vertex};

/// A composable word. The empty word at `p` is the idempotent `e_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    pub start: Vertex,
    pub end: Vertex,
    pub syms: Vec<Symbol>,
}

impl Word {
    pub fn idempotent(p: Vertex) -> Self {
        Word {
            start: p,
            end: p,
            syms: Vec::new(),
        }
    }

    pub fn letter(s: Symbol, dq: &DoubleQuiver) -> Self {
        let (start, end) = s.endpoints(dq);
        Word {
            start,
            end,
            syms: vec![s],
        }
    }

    /// Builds a word from letters, or `None` if they do not compose.
    pub fn from_symbols(syms: &[Symbol], dq: &DoubleQuiver) -> Option<Self> {
        let (start, mut end) = syms.first()?.endpoints(dq);
        for s in &syms[1..] {
            let (t, h) = s.endpoints(dq);
            if t != end {
                return None;
            }
            end = h;
        }
        Some(Word {
            start,
            end,
            syms: syms.to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn is_loop(&self) -> bool {
        self.start == self.end
    }

    pub fn degree(&self) -> u32 {
        self.syms.iter().map(|s| s.degree()).sum()
    }

    /// Raw concatenation; `None` when `self.end != other.start`.
    pub fn concat(&self, other: &Word) -> Option<Word> {
        if self.end != other.start {
            return None;
        }
        let mut syms = Vec::with_capacity(self.len() + other.len());
        syms.extend_from_slice(&self.syms);
        syms.extend_from_slice(&other.syms);
        Some(Word {
            start: self.start,
            end: other.end,
            syms,
        })
    }

    /// Subword `syms[i..j]` with endpoints inherited from its neighbours.
    pub fn slice(&self, i: usize, j: usize, dq: &DoubleQuiver) -> Word {
        if i == j {
            let p = if i == 0 {
                self.start
            } else {
                self.syms[i - 1].endpoints(dq).1
            };
            return Word::idempotent(p);
        }
        Word::from_symbols(&self.syms[i..j], dq).expect("subword of a composable word")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.syms
            .len()
            .cmp(&other.syms.len())
            .then_with(|| self.syms.cmp(&other.syms))
            .then_with(|| self.start.cmp(&other.start))
            .then_with(|| self.end.cmp(&other.end))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
