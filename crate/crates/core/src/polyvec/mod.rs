//! Double derivations, polyvector fields and double brackets.

pub mod bimap;
pub mod bracket;
pub mod derivation;
pub mod pairing;
pub mod pbracket;
pub mod schouten;

pub use bracket::{Bracket, BracketRules};
pub use bimap::{iota_map, omega_from_map, BimoduleMap};
pub use derivation::DoubleDerivation;
pub use pairing::Generator;
pub use pbracket::{hamiltonian, PBracket};
pub use schouten::{schouten, Schouten};

#[cfg(test)]
mod tests;
