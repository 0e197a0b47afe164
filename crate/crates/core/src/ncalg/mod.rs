//! The localized path algebra and its word calculus.

pub mod cyclic;
pub mod element;
pub mod print;
pub mod rewrite;
pub mod symbol;
pub mod tensor;
pub mod unit;
pub mod word;

pub use cyclic::{cyclic_reduce, Cyclic};
pub use element::Element;
pub use print::{element_string, parse_element, tensor_string, word_string};
pub use symbol::Symbol;
pub use tensor::Tensor;
pub use unit::{invert, UnitError, UnitFactor, UnitProduct};
pub use word::Word;

/// Exact rational coefficients.
pub type Q = num::BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

#[cfg(test)]
mod tests;
