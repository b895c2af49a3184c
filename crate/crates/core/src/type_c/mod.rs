//! Type C: the ring `Γ`, pfaffian Schubert polynomials, and the map from type A.

mod gamma;
mod schubert;
mod triple;

pub use gamma::{
    basis_report, c_relation, normal_form, normal_form_bounded, parse_gamma, q_pfaffian,
    symmetric_locus_class,
    BasisReport, CMonomialPoly, GammaPoly,
};
pub use schubert::{
    descent_recursion_check, divided_difference, example_321, generic_series, inverse_symmetry_check,
    pf_lambda, project_a_to_c, projected_schubert, row_series, schubert_c_vexillary,
    tomega_collapse_check,
};
pub use triple::{SignedPermutation, TripleC};
