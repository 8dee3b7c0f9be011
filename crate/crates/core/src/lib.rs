//! Exact discriminants of terminal derivatives of monic polynomials in
//! centered power-sum coordinates, symmetrized square-graph expansions, and
//! square-graph cone certificates found by exact rational linear programming.

pub mod certify;
pub mod error;
pub mod exact;
pub mod graphs;
pub mod moments;
pub mod multipoly;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
