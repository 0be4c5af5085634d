use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::pbw::{defining_relations, Algebra, AlgebraKind, Element, FreeWord, Letter, Monomial};
use crate::qfield::{Field, FieldMode, Matrix, Scalar};

/// The generators that carry a matrix in a module over `kind`.
pub fn module_generators(kind: AlgebraKind) -> Vec<Letter> {
    use Letter::*;
    [E1, E2, F1, F2, K1, K2, Kt1, Kt2].into_iter().filter(|g| kind.allows(*g)).collect()
}

/// A finite-dimensional module given by exact matrices of the generators.
#[derive(Clone, Debug)]
pub struct MatrixModule {
    alg: Arc<Algebra>,
    basis: Vec<String>,
    action: BTreeMap<Letter, Matrix>,
}

impl PartialEq for MatrixModule {
    fn eq(&self, o: &Self) -> bool {
        self.kind() == o.kind() && self.basis == o.basis && self.action == o.action
    }
}

impl MatrixModule {
    pub fn new(kind: AlgebraKind, field: &Field, basis: Vec<String>, action: BTreeMap<Letter, Matrix>) -> Result<MatrixModule> {
        let alg = Algebra::get(kind, field)?;
        let n = basis.len();
        let gens = module_generators(kind);
        for (g, m) in &action {
            if !gens.contains(g) {
                return Err(Error::IllegalGenerator { generator: g.name().into(), algebra: kind.id().into() });
            }
            if m.rows() != n || m.cols() != n {
                return Err(Error::Invalid(format!("{g} matrix is {}x{}, expected {n}x{n}", m.rows(), m.cols())));
            }
            if m.field() != field {
                return Err(Error::ModeMismatch);
            }
        }
        for g in &gens {
            if !action.contains_key(g) {
                return Err(Error::Invalid(format!("missing matrix for {g}")));
            }
            if (g.is_k() || g.is_tilde())
                && action[g].inverse().is_none() {
                    return Err(Error::Invalid(format!("{g} must act invertibly")));
                }
        }
        Ok(MatrixModule { alg, basis, action })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn kind(&self) -> AlgebraKind {
        self.alg.kind()
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn action(&self) -> &BTreeMap<Letter, Matrix> {
        &self.action
    }

    pub fn matrix(&self, g: Letter) -> Result<&Matrix> {
        self.action
            .get(&g)
            .ok_or_else(|| Error::IllegalGenerator { generator: g.name().into(), algebra: self.kind().id().into() })
    }

    /// Replaces one generator matrix without re-checking the relations.
    pub fn with_matrix(mut self, g: Letter, m: Matrix) -> Result<MatrixModule> {
        self.matrix(g)?;
        if m.rows() != self.dim() || m.cols() != self.dim() {
            return Err(Error::Invalid("matrix shape".into()));
        }
        self.action.insert(g, m);
        Ok(self)
    }

    /// The matrix of any letter, including inverses and the root vectors
    /// `E12 = E1E2 - q^{-1}E2E1`, `F12 = F2F1 - qF1F2`.
    pub fn letter_matrix(&self, g: Letter) -> Result<Matrix> {
        use Letter::*;
        let f = self.field();
        let inv = |x: Letter| -> Result<Matrix> { Ok(self.matrix(x)?.inverse().expect("checked invertible")) };
        match g {
            K1Inv => inv(K1),
            K2Inv => inv(K2),
            Kt1Inv => inv(Kt1),
            Kt2Inv => inv(Kt2),
            E12 => {
                let (a, b) = (self.matrix(E1)?, self.matrix(E2)?);
                Ok(a.mul(b).sub(&b.mul(a).scale(&f.q_pow(-1))))
            }
            F12 => {
                let (a, b) = (self.matrix(F1)?, self.matrix(F2)?);
                Ok(b.mul(a).sub(&a.mul(b).scale(&f.q())))
            }
            _ => Ok(self.matrix(g)?.clone()),
        }
    }

    fn power(&self, g: Letter, ginv: Letter, n: i64) -> Result<Matrix> {
        let base = if n >= 0 { self.letter_matrix(g)? } else { self.letter_matrix(ginv)? };
        let mut out = Matrix::identity(self.field(), self.dim());
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    pub fn monomial_matrix(&self, m: &Monomial) -> Result<Matrix> {
        use Letter::*;
        let mut out = Matrix::identity(self.field(), self.dim());
        let parts = [
            (F1, F1, m.f[0] as i64),
            (F12, F12, m.f[1] as i64),
            (F2, F2, m.f[2] as i64),
            (K1, K1Inv, m.k[0] as i64),
            (K2, K2Inv, m.k[1] as i64),
            (Kt1, Kt1Inv, m.kt[0] as i64),
            (Kt2, Kt2Inv, m.kt[1] as i64),
            (E1, E1, m.e[0] as i64),
            (E12, E12, m.e[1] as i64),
            (E2, E2, m.e[2] as i64),
        ];
        for (g, ginv, n) in parts {
            if n != 0 {
                out = out.mul(&self.power(g, ginv, n)?);
            }
        }
        Ok(out)
    }

    pub fn element_matrix(&self, x: &Element) -> Result<Matrix> {
        if x.kind() != self.kind() || x.field() != self.field() {
            return Err(Error::AlgebraMismatch(self.kind().id().into(), x.kind().id().into()));
        }
        let mut out = Matrix::zeros(self.field(), self.dim(), self.dim());
        for (m, c) in x.terms() {
            out = out.add(&self.monomial_matrix(m)?.scale(c));
        }
        Ok(out)
    }

    pub fn word_matrix(&self, w: &FreeWord) -> Result<Matrix> {
        w.check(&self.alg)?;
        let mut out = Matrix::identity(self.field(), self.dim()).scale(&w.coeff);
        for g in &w.letters {
            out = out.mul(&self.letter_matrix(*g)?);
        }
        Ok(out)
    }

    pub fn act(&self, g: Letter, v: &[Scalar]) -> Result<Vec<Scalar>> {
        Ok(self.letter_matrix(g)?.apply(v))
    }

    pub fn to_json(&self) -> Value {
        let mut action = serde_json::Map::new();
        for (g, m) in &self.action {
            let mut entries = Vec::new();
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if !m.get(r, c).is_zero() {
                        entries.push(json!([r, c, m.get(r, c).to_json()]));
                    }
                }
            }
            action.insert(g.name().to_string(), Value::Array(entries));
        }
        json!({
            "algebra": self.kind().id(),
            "mode": self.field().mode().to_json(),
            "basis": self.basis,
            "action": action,
        })
    }

    pub fn from_json(v: &Value) -> Result<MatrixModule> {
        let bad = |m: &str| Error::Json(m.to_string());
        let kind = AlgebraKind::from_id(v.get("algebra").and_then(Value::as_str).ok_or_else(|| bad("missing algebra"))?)?;
        let field = Field::new(FieldMode::from_json(v.get("mode").ok_or_else(|| bad("missing mode"))?)?)?;
        let basis: Vec<String> = v
            .get("basis")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing basis"))?
            .iter()
            .map(|b| b.as_str().map(str::to_string).ok_or_else(|| bad("basis labels must be strings")))
            .collect::<Result<_>>()?;
        let n = basis.len();
        let obj = v.get("action").and_then(Value::as_object).ok_or_else(|| bad("missing action"))?;
        let mut action = BTreeMap::new();
        for (name, entries) in obj {
            let g = Letter::from_name(name).ok_or_else(|| bad(&format!("unknown generator {name:?}")))?;
            let mut m = Matrix::zeros(&field, n, n);
            for e in entries.as_array().ok_or_else(|| bad("action entries must be an array"))? {
                let t = e.as_array().filter(|t| t.len() == 3).ok_or_else(|| bad("entry must be [row, col, coeff]"))?;
                let r = t[0].as_u64().ok_or_else(|| bad("row must be an integer"))? as usize;
                let c = t[1].as_u64().ok_or_else(|| bad("col must be an integer"))? as usize;
                if r >= n || c >= n {
                    return Err(bad("entry index out of range"));
                }
                m.set(r, c, field.coerce(&Scalar::from_json(&t[2])?)?);
            }
            action.insert(g, m);
        }
        MatrixModule::new(kind, &field, basis, action)
    }
}

/// Names of the defining relations of the algebra that fail as matrix identities.
pub fn module_axiom_check(m: &MatrixModule) -> Result<Vec<String>> {
    let mut failed = Vec::new();
    for rel in defining_relations(m.kind(), m.field())? {
        let mut acc = Matrix::zeros(m.field(), m.dim(), m.dim());
        for w in &rel.words {
            acc = acc.add(&m.word_matrix(w)?);
        }
        if !acc.is_zero() {
            failed.push(rel.name);
        }
    }
    Ok(failed)
}
