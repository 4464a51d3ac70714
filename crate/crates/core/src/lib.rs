pub mod cohomology;
pub mod error;
pub mod group;
pub mod phase;

pub use error::{Error, Result};
pub use phase::Phase;
pub mod double;
pub mod exponent;
pub mod bicrossed;
pub mod io;
pub mod corpus;
pub mod pipeline;
pub mod cli;
