//! Modules over the algebras: free vectors of Verma modules, exact matrix
//! modules, tensor products, highest weight vectors and pullbacks to the double.

mod builders;
mod character;
mod decompose;
mod matrix_module;
mod pullback;
mod verma;

pub use builders::{
    build_l, build_v_u, build_verma_u, example_module_literal, intertwiner_dimension,
    v_lambda_e1_coeff,
};
pub use character::{signed_q_power, weight_character, Character};
pub use decompose::{
    classify_highest_weight, clebsch_gordan, find_hw_vectors, generated_submodule, is_simple, tensor, weight_spaces,
    DecompositionReport, Factor, HwSpace, WeightSpace,
};
pub use matrix_module::{module_axiom_check, module_generators, MatrixModule};
pub use pullback::{eps_module, pullback_z, twist_check};
pub use verma::{
    check_filtration_component, check_highest_weight, hw_vector_vn, kernel_of_e1_in_verma, verma_act,
    verma_act_element, weight_space_rank, FiltrationReport, FreeVermaVector, KernelWeight,
};
