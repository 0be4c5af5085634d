//! Textual descriptions of characters, central parameters, module sources and
//! tensors on the command line.

use std::sync::Arc;

use hopf_forge::hopf::{CentralParameter, TensorElement};
use hopf_forge::modules::{build_l, build_v_u, build_verma_u, Character, MatrixModule};
use hopf_forge::pbw::{Algebra, AlgebraKind};
use hopf_forge::qfield::Field;
use serde_json::Value;

use crate::error::CliError;
use crate::parse::{parse, parse_scalar};

/// An algebra whose field is `field`, for parsing scalars.
pub fn scalar_algebra(field: &Field) -> Result<Arc<Algebra>, CliError> {
    let kind = if field.is_root() { AlgebraKind::Small } else { AlgebraKind::U };
    Ok(Algebra::get(kind, field)?)
}

pub fn character(field: &Field, l1: &str, l2: &str) -> Result<Character, CliError> {
    let alg = scalar_algebra(field)?;
    Ok(Character::new(parse_scalar(l1, &alg)?, parse_scalar(l2, &alg)?)?)
}

/// Splits at commas outside parentheses.
pub fn split_top(s: &str) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    parts.push(cur.trim().to_string());
    parts
}

fn two_ints(s: &str, what: &str) -> Result<(i64, i64), CliError> {
    let parts = split_top(s);
    let bad = || CliError::usage(format!("{what} must be two integers 'a,b', got {s:?}"));
    if parts.len() != 2 {
        return Err(bad());
    }
    Ok((parts[0].parse().map_err(|_| bad())?, parts[1].parse().map_err(|_| bad())?))
}

/// `a,b` meaning `z = (ζ^a, ζ^b)`.
pub fn central(field: &Field, s: &str) -> Result<CentralParameter, CliError> {
    let (a, b) = two_ints(s, "--z")?;
    Ok(CentralParameter::from_exponents(field, a, b)?)
}

pub fn read_json(s: &str) -> Result<Value, CliError> {
    let text = match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)?,
        None => s.to_string(),
    };
    Ok(serde_json::from_str(&text)?)
}

/// A module source: `V(m1,m2)` or `M(m1,m2)` at a root of unity, `L(a,b)` in
/// generic mode, inline module JSON, or `@path` to a JSON file.
pub fn module(field: &Field, s: &str) -> Result<MatrixModule, CliError> {
    let s = s.trim();
    if s.starts_with('{') || s.starts_with('@') {
        let m = MatrixModule::from_json(&read_json(s)?)?;
        if m.field() != field {
            return Err(CliError::usage("module JSON mode differs from the selected mode"));
        }
        return Ok(m);
    }
    let bad = || CliError::usage(format!("unknown module {s:?}; expected V(m1,m2), M(m1,m2), L(a,b), JSON or @file"));
    let (head, rest) = s.split_once('(').ok_or_else(bad)?;
    let inner = rest.strip_suffix(')').ok_or_else(bad)?;
    match head.trim() {
        "V" => {
            let (a, b) = two_ints(inner, "V(m1,m2)")?;
            Ok(build_v_u(a, b, field)?)
        }
        "M" => {
            let (a, b) = two_ints(inner, "M(m1,m2)")?;
            Ok(build_verma_u(a, b, field)?)
        }
        "L" => {
            let parts = split_top(inner);
            if parts.len() != 2 {
                return Err(bad());
            }
            Ok(build_l(&character(field, &parts[0], &parts[1])?)?)
        }
        _ => Err(bad()),
    }
}

/// `X | Y` with `X` in the positive and `Y` in the negative Borel.
pub fn borel_tensor(field: &Field, s: &str) -> Result<TensorElement, CliError> {
    let (x, y) = s.split_once('|').ok_or_else(|| CliError::usage(format!("expected 'X | Y', got {s:?}")))?;
    let pos = Algebra::get(AlgebraKind::SmallGeq0, field)?;
    let neg = Algebra::get(AlgebraKind::SmallLeq0, field)?;
    Ok(TensorElement::pure(&[&parse(x, &pos)?, &parse(y, &neg)?]))
}
