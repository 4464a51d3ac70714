//! Normalized bar cochains on finite groups with phase values.

mod cochain;
pub mod h3;
pub mod snf;
mod solve;

pub use cochain::{cyclic_standard_cocycle, Cochain, Cochain1, Cochain2, Cochain3};
pub use h3::{h3_order, DEFAULT_H3_CAP};
pub use solve::{
    class_order, cyclic_class_order, divisors, lcm_all, normalize_cocycle, solve_coboundary1, solve_coboundary2,
    CoboundaryCertificate, CoboundarySolver, Solver1, Solver2, DEFAULT_SOLVER_CAP,
};
