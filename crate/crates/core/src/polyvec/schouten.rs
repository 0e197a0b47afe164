//! The double Schouten–Nijenhuys bracket on polyvector fields.

use crate::ncalg::{Element, Symbol, Tensor};
use crate::quiver::DoubleQuiver;

use super::bracket::{Bracket, BracketRules};

/// Generator rules: `{{a, b}} = 0`, `{{∂/∂c, b}} = ∂b/∂c`, `{{∂/∂c, ∂/∂d}} = 0`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Schouten;

impl BracketRules for Schouten {
    fn odd_shift(&self) -> bool {
        true
    }

    fn letters(&self, x: Symbol, y: Symbol, dq: &DoubleQuiver) -> Option<Tensor> {
        match (x, y) {
            (Symbol::Arrow(_), Symbol::Arrow(_)) | (Symbol::Partial(_), Symbol::Partial(_)) => {
                Some(Tensor::zero(2))
            }
            (Symbol::Partial(c), Symbol::Arrow(d)) => Some(if c == d {
                Tensor::pair(
                    &Element::idempotent(dq.tail(c)),
                    &Element::idempotent(dq.head(c)),
                )
            } else {
                Tensor::zero(2)
            }),
            (Symbol::Arrow(_), Symbol::Partial(_)) => None,
            _ => panic!("no Schouten rule for {x:?}, {y:?}"),
        }
    }
}

pub fn schouten(dq: &DoubleQuiver) -> Bracket<'_, Schouten> {
    Bracket::new(&Schouten, dq)
}
