//! Enriched and twisted Schubert polynomials of type A.

pub mod construct;
pub mod expand;
pub mod identities;
pub mod operators;

pub use construct::{
    classical_double, fgrs_coefficients, fgrs_sum, gamma_schur_tableaux, multivariate_schur, reduced_words, schubert,
    schubert_vexillary, schubert_vexillary_determinant, stanley, twisted,
};
pub use expand::{
    assemble, interpolate, monk, monk_linear, product_structure, transition, transition_tree, SchubertExpansion,
    TransitionStep, TransitionTree,
};
pub use operators::{del_x, del_x_twisted, del_y, DiffOp, Family};
