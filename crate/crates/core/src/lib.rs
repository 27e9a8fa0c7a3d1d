//! Exact Griess algebras of sqrt(2)-scaled root lattice VOAs, Virasoro
//! minimal-model fusion, Miyamoto involutions, and the tetracode, Golay,
//! Niemeier A2^12 and Leech lattice chain.

pub mod algebra;
pub mod appendix;
pub mod error;
pub mod exact;
pub mod involutions;
pub mod lattice;
pub mod minimal_models;
pub mod report;
pub mod w2;

pub use error::{Error, Result};
