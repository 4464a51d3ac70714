//! The twisted double `D^ω(G)` on graded monomials.

pub mod axioms;
mod canonical;
mod context;
mod monomial;

pub use axioms::{axiom_suite, AxiomCheck, AxiomReport};
pub use canonical::{canonical_element, CanonicalKind};
pub use context::{gamma, theta, DoubleContext};
pub use monomial::{Monomial, MonomialRecord, Tuple, MAX_DEGREE};
