use hopf_forge::hopf::TensorElement;
use hopf_forge::modules::MatrixModule;
use hopf_forge::pbw::Element;
use hopf_forge::qfield::{Matrix, Scalar};
use serde_json::{json, Value};

pub fn element_json(x: &Element) -> Value {
    json!({"text": x.to_string(), "element": x.to_json()})
}

pub fn tensor_json(t: &TensorElement) -> Value {
    json!({"text": t.to_string(), "tensor": t.to_json()})
}

pub fn scalar_json(s: &Scalar) -> Value {
    json!({"text": s.to_string(), "scalar": s.to_json()})
}

pub fn matrix_text(m: &Matrix, indent: &str) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let cells: Vec<String> = m.row(r).iter().map(|c| c.to_string()).collect();
            format!("{indent}[{}]", cells.join(", "))
        })
        .collect();
    rows.join("\n")
}

pub fn module_text(m: &MatrixModule) -> String {
    let mut out = format!("module over {} of dimension {}\nbasis: {}", m.kind(), m.dim(), m.basis().join(", "));
    for (g, mat) in m.action() {
        out.push_str(&format!("\n{g}:\n{}", matrix_text(mat, "  ")));
    }
    out
}

/// `c1*b1 + c2*b2 + ...` over the module basis labels.
pub fn vector_text(m: &MatrixModule, v: &[Scalar]) -> String {
    let parts: Vec<String> = m
        .basis()
        .iter()
        .zip(v)
        .filter(|(_, c)| !c.is_zero())
        .map(|(b, c)| {
            let s = c.to_string();
            if c.is_one() {
                b.clone()
            } else if s.contains(' ') || s.contains('/') {
                format!("({s})*{b}")
            } else {
                format!("{s}*{b}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(Scalar::to_json).collect())
}

pub fn bool_word(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
