//! Multi-logarithmic k-vector fields along equidimensional subspaces, with
//! exact Gröbner-basis machinery and freeness certificates.

pub mod error;
pub mod arrange;
pub mod cli;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod products;
pub mod logmod;
pub mod resolve;

pub use error::{Error, Result};
