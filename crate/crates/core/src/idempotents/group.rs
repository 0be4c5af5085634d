use std::sync::Arc;

use crate::error::{Error, Result};
use crate::pbw::{Algebra, AlgebraKind, Element, Monomial};
use crate::qfield::Field;

fn group_power(alg: &Arc<Algebra>, k: [i32; 2]) -> Element {
    Element::monomial(alg, Monomial::from_parts([0; 3], k, [0; 2], [0; 3]))
}

fn averaged(alg: &Arc<Algebra>, index: usize, i: i64) -> Result<Element> {
    let l = alg.field().require_root()? as i64;
    let f = alg.field();
    let mut out = Element::zero(alg);
    for s in 0..l {
        let mut k = [0; 2];
        k[index] = s as i32;
        out = out.add(&group_power(alg, k).scale(&f.q_pow(i * s)));
    }
    Ok(out.scale(&f.rational(1, l)))
}

/// `e_i(K1) = (1/l) Σ_s (q^i K1)^s`, in any root-mode algebra containing `K1`.
pub fn e_k1(alg: &Arc<Algebra>, i: i64) -> Result<Element> {
    averaged(alg, 0, i)
}

/// `e_j(K2) = (1/l) Σ_s (q^j K2)^s`.
pub fn e_k2(alg: &Arc<Algebra>, j: i64) -> Result<Element> {
    if alg.kind() == AlgebraKind::Small1 {
        return Err(Error::IllegalGenerator { generator: "K2".into(), algebra: alg.kind().id().into() });
    }
    averaged(alg, 1, j)
}

/// The `l²` idempotents `e_{i,j}` of the group algebra of `⟨K1, K2⟩` in `u`,
/// listed with their indices in row-major order.
pub fn group_idempotents(field: &Field) -> Result<Vec<((u32, u32), Element)>> {
    let l = field.require_root()?;
    let alg = Algebra::get(AlgebraKind::Small, field)?;
    let scale = field.rational(1, (l * l) as i64);
    let mut out = Vec::with_capacity((l * l) as usize);
    for i in 0..l as i64 {
        for j in 0..l as i64 {
            let mut e = Element::zero(&alg);
            for s in 0..l as i64 {
                for t in 0..l as i64 {
                    e = e.add(&group_power(&alg, [s as i32, t as i32]).scale(&field.q_pow(i * s + j * t)));
                }
            }
            out.push(((i as u32, j as u32), e.scale(&scale)));
        }
    }
    Ok(out)
}
