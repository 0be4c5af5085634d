//! Idempotents of the group algebra and of the small quantum group `u1`,
//! the quadratic system for idempotents `Σ a_p e_i E^p F^p`, primitivity via
//! the trace-form radical, and the congruence solver for highest weights.

mod congruence;
mod group;
mod commutation;
mod regular;
mod system;

pub use congruence::{congruence_solve, CongruenceSolution};
pub use group::{e_k1, e_k2, group_idempotents};
pub use commutation::{
    diagonal_element, k_inverse_bracket, fm_es_product, fm_es_expanded, product_identity_rhs, structure_constant,
};
pub use regular::{
    decompose_regular_u1, decompose_regular_u1_capped, is_primitive, radical_trace_form, regular_representation, regular_representation_capped,
    u1_simple, RegularRepresentation, Summand, U1Decomposition, DEFAULT_DECOMPOSE_MAX_L,
    DEFAULT_MAX_DIM,
};
pub use system::{
    build_system, field_sqrt, solution_element, solve_idempotents, solve_idempotents_capped, IdempotentSolution,
    QuadraticSystem, SolveOutcome, Triple, DEFAULT_MAX_L,
};

#[cfg(test)]
mod tests;
