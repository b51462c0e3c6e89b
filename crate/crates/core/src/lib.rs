//! Finite-model and symbolic-witness verification of Stone, Tarski and
//! z-algebra dualities for zero-dimensional spaces.

pub mod boolean;
pub mod compactify;
pub mod dualities;
pub mod error;
pub mod finspace;
pub mod harness;
pub mod json;
pub mod par;
pub mod symbolic;
pub mod zalgebra;
pub mod zmaps;

pub use error::{Error, Result};
