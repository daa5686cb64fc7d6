//! Combinatorics of Dorey's rule for quantum affine algebras of types
//! A and D: root systems, Dynkin quivers and their AR quivers, denominator
//! formulas, the quivers `Se(g)` and the Dorey conditions.

pub mod dorey;
pub mod error;
pub mod exec;
pub mod labeled;
pub mod quiver;
pub mod rootsys;
pub mod sequiver;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Exec;
