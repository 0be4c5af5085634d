//! Coproduct, counit, antipode, the skew pairing of the Borels, the double
//! crossproduct and the quotient maps of the double.

pub mod axioms;
mod central;
mod coalgebra;
mod double;
mod pairing;
mod tensor;

pub use central::{
    double_relations, eps_z, eps_z_relation_failures, pi_z, pi_z_relation_failures, project_pi,
    relation_holds_in_double, CentralParameter, EpsZ,
};
pub use coalgebra::{antipode, comultiply, comultiply_leg, comultiply_n, counit, counit_monomial};
pub use double::{double_multiply, double_multiply_with, to_double, to_double_with};
pub use pairing::{pairing, pairing_inverse, pairing_inverse_with, pairing_with, PairingNorm};
pub use tensor::TensorElement;

#[cfg(test)]
mod tests;
