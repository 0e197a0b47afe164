//! Exact symbolic calculus for non-commutative quasi-Hamiltonian structures on
//! localized quiver path algebras.
//!
//! The algebra `A` is the path algebra of a double quiver with the elements
//! `e + c c*` inverted. Forms, polyvector fields and the formal generators used
//! by the conversion diagram all live in one word calculus (see [`ncalg`]).

pub mod quiver;
pub mod ncalg;
pub mod sample;
pub mod diffcalc;
pub mod polyvec;
pub mod structures;
pub mod repspace;
pub mod cli;

pub use ncalg::{Element, Q, Symbol, Tensor, Word};
pub use quiver::{DoubleQuiver, QuiverPresentation, Vertex};
