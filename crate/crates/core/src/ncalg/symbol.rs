use std::cmp::Ordering;

use crate::quiver::{DoubleQuiver, Vertex};

/// A letter of the word calculus.
///
/// Arrow indices refer to [`DoubleQuiver`] positions (`2k` original, `2k+1` reversed).
/// `Arrow` and `Inv` have degree 0; every other symbol has degree 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Arrow(usize),
    /// `g_c = (e + c c*)^{-1}`.
    Inv(usize),
    /// The form `dc`.
    Diff(usize),
    /// The polyvector generator `∂/∂c`, which runs against `c`.
    Partial(usize),
    /// Formal rank-one generator `E_p`.
    Euler(Vertex),
    /// Formal dual generator `E*_p`.
    EStar(Vertex),
    /// Formal generator `dΦ_p`.
    DPhi(Vertex),
    /// Formal dual generator `(dΦ_p)*`.
    DPhiStar(Vertex),
}

impl Symbol {
    pub fn degree(self) -> u32 {
        match self {
            Symbol::Arrow(_) | Symbol::Inv(_) => 0,
            _ => 1,
        }
    }

    pub fn is_algebra(self) -> bool {
        self.degree() == 0
    }

    /// (tail, head) in the left-to-right composition convention.
    pub fn endpoints(self, dq: &DoubleQuiver) -> (Vertex, Vertex) {
        match self {
            Symbol::Arrow(c) | Symbol::Diff(c) => (dq.tail(c), dq.head(c)),
            Symbol::Inv(c) => (dq.tail(c), dq.tail(c)),
            Symbol::Partial(c) => (dq.head(c), dq.tail(c)),
            Symbol::Euler(p) | Symbol::EStar(p) | Symbol::DPhi(p) | Symbol::DPhiStar(p) => (p, p),
        }
    }

    fn key(self) -> (u8, u64, u64) {
        let arrow = |c: usize| ((c & 1) as u64, (c >> 1) as u64);
        match self {
            Symbol::Arrow(c) => (0, arrow(c).0, arrow(c).1),
            Symbol::Inv(c) => (1, arrow(c).0, arrow(c).1),
            Symbol::Diff(c) => (2, arrow(c).0, arrow(c).1),
            Symbol::Partial(c) => (3, arrow(c).0, arrow(c).1),
            Symbol::Euler(p) => (4, 0, p as u64),
            Symbol::EStar(p) => (5, 0, p as u64),
            Symbol::DPhi(p) => (6, 0, p as u64),
            Symbol::DPhiStar(p) => (7, 0, p as u64),
        }
    }
}

// Originals precede stars, then inverses, d-symbols, partials, formal symbols.
impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_order() {
        let mut v = vec![
            Symbol::Partial(0),
            Symbol::Diff(1),
            Symbol::Inv(0),
            Symbol::Arrow(1),
            Symbol::Arrow(2),
            Symbol::Arrow(0),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Symbol::Arrow(0),
                Symbol::Arrow(2),
                Symbol::Arrow(1),
                Symbol::Inv(0),
                Symbol::Diff(1),
                Symbol::Partial(0)
            ]
        );
    }
}
