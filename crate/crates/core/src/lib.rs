//! Exact computations in the exceptional Lie algebra G2 over Q(√2, √3, √5),
//! together with a verifier for a catalog of its subalgebras.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod nilpotent;
pub mod parse;
pub mod regular;
pub mod reps;
pub mod roots;
pub mod scalar;
pub mod subspace;
pub mod witnesses;

pub use error::{G2Error, Result};
