//! Quasi-Poisson and quasi-bisymplectic structures on quiver algebras, their
//! axioms, the conversion between them, and fusion.

pub mod axioms;
pub mod certificate;
pub mod diagram;
mod fallback;
pub mod fusion;
pub mod lemmas;
pub mod moment;
pub mod prop54;
pub mod qp;
pub mod report;
pub mod tilde;

pub use axioms::{check_b1, check_b2, check_b3, check_c, check_p1, check_p2, check_p3};
pub use certificate::{Certificate, Span};
pub use diagram::{build_diagram, check_lemma72, check_prop74, DiagramMaps};
pub use fusion::fuse_structure;
pub use lemmas::{check_lemma710, check_lemma77, check_lemma78};
pub use moment::{euler, MomentMap};
pub use prop54::check_prop54;
pub use qp::{omega_from_p, p_from_omega, quiver_qp, QBStructure, QPStructure, StructureError};
pub use report::{CheckReport, Mode};
pub use tilde::{check_theorem53, TildeAlgebroid};

#[cfg(test)]
mod tests;
