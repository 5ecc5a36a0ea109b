//! Exact computation in the category of row-finite matrices over a strict
//! braided monoidal Ab-category, indexed by a countable set.

pub mod base;
pub mod bialgebra;
pub mod check;
pub mod coherence;
pub mod error;
pub mod harness;
pub mod index;
pub mod linalg;
pub mod matcat;
pub mod probe;

pub use error::{Error, Result};
