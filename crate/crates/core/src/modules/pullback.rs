use std::collections::BTreeMap;

use super::decompose::tensor;
use super::matrix_module::{module_generators, MatrixModule};
use crate::error::{Error, Result};
use crate::hopf::{eps_z, pi_z, CentralParameter};
use crate::pbw::{Algebra, AlgebraKind, Element};
use crate::qfield::Matrix;

/// The module `M_z` over the double obtained from a module `M` of the small
/// quantum group through `π_z`.
pub fn pullback_z(m: &MatrixModule, z: &CentralParameter) -> Result<MatrixModule> {
    if m.kind() != AlgebraKind::Small {
        return Err(Error::AlgebraMismatch(AlgebraKind::Small.id().into(), m.kind().id().into()));
    }
    let f = m.field();
    f.require_odd()?;
    let d = Algebra::get(AlgebraKind::Double, f)?;
    let mut action = BTreeMap::new();
    for g in module_generators(AlgebraKind::Double) {
        let image = pi_z(&Element::letter(&d, g)?, z)?;
        action.insert(g, m.element_matrix(&image)?);
    }
    MatrixModule::new(AlgebraKind::Double, f, m.basis().to_vec(), action)
}

/// The one-dimensional module of the double given by `ε_z`.
pub fn eps_module(z: &CentralParameter) -> Result<MatrixModule> {
    let eps = eps_z(z)?;
    let f = crate::qfield::Field::of(z.z1());
    let mut action = BTreeMap::new();
    for g in module_generators(AlgebraKind::Double) {
        action.insert(g, Matrix::from_rows(&f, vec![vec![eps.letter(g)?]]));
    }
    MatrixModule::new(AlgebraKind::Double, &f, vec!["1".into()], action)
}

/// Whether `M_z` and `ε_z ⊗ M_1` have identical generator matrices.
pub fn twist_check(m: &MatrixModule, z: &CentralParameter) -> Result<bool> {
    let f = m.field();
    let one = CentralParameter::from_exponents(f, 0, 0)?;
    let twisted = tensor(&eps_module(z)?, &pullback_z(m, &one)?)?;
    let direct = pullback_z(m, z)?;
    Ok(twisted.action() == direct.action())
}
