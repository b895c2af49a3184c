//! Enriched, twisted and back-stable Schubert polynomials of types A and C.

pub mod cache;
pub mod checks;
pub mod cli;
pub mod emit;
pub mod error;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod ring;
pub mod schubert_a;
pub mod table;
pub mod type_c;

pub use error::{Error, Result};

/// Arbitrary-precision integer used for every coefficient.
pub type Int = ibig::IBig;
