//! The group `S_Z` of finitely supported permutations of the integers.

mod permutation;
mod triple;

pub use permutation::{BruhatCover, Permutation};
pub(crate) use triple::parse_triple_fields;
pub use triple::TripleA;
