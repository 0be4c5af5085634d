use hopf_forge::hopf::axioms::{
    antipode_antimultiplicative, antipode_law, coassociative, coproduct_multiplicative, counit_law,
};
use hopf_forge::idempotents::decompose_regular_u1;
use hopf_forge::modules::{clebsch_gordan, Character};
use hopf_forge::pbw::{normal_form, oracle_normal_form, random_element, relation_failures, Algebra, AlgebraKind, FreeWord, Letter};
use hopf_forge::qfield::Field;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{reparse, Report};
use crate::error::CliError;
use crate::render::bool_word;

type Check = (String, Result<bool, CliError>);

fn label(f: &Field) -> String {
    match f.require_root() {
        Ok(l) => format!("l = {l}"),
        Err(_) => "generic".into(),
    }
}

fn relations(fields: &[Field]) -> Vec<Check> {
    let mut out = Vec::new();
    for f in fields {
        let kinds: &[AlgebraKind] = if f.is_root() {
            &[AlgebraKind::Small, AlgebraKind::SmallGeq0, AlgebraKind::SmallLeq0, AlgebraKind::Small1, AlgebraKind::Double]
        } else {
            &[AlgebraKind::U]
        };
        for &k in kinds {
            let r = Algebra::get(k, f).and_then(|a| relation_failures(&a)).map(|v| v.is_empty());
            out.push((format!("relations of {} ({})", k.id(), label(f)), r.map_err(CliError::from)));
        }
    }
    out
}

fn oracle(f: &Field, kind: AlgebraKind, rng: &mut ChaCha8Rng) -> Check {
    let r = (|| {
        let alg = Algebra::get(kind, f)?;
        for _ in 0..60 {
            let len = rng.gen_range(0..=7);
            let letters: Vec<Letter> = (0..len).map(|_| Letter::BASIC[rng.gen_range(0..6)]).collect();
            let w = FreeWord::new(f.one(), letters);
            if normal_form(&w, &alg)? != oracle_normal_form(&w, &alg)? {
                return Ok(false);
            }
        }
        Ok(true)
    })();
    (format!("rewriting agrees with the oracle in {} ({})", kind.id(), label(f)), r)
}

fn hopf_axioms(f: &Field, kind: AlgebraKind, rng: &mut ChaCha8Rng) -> Check {
    let r = (|| {
        let alg = Algebra::get(kind, f)?;
        for _ in 0..6 {
            let a = random_element(&alg, rng, 2, 2);
            let b = random_element(&alg, rng, 2, 2);
            let ok = coassociative(&a)
                && counit_law(&a)
                && antipode_law(&a)
                && coproduct_multiplicative(&a, &b)
                && antipode_antimultiplicative(&a, &b);
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    })();
    (format!("Hopf axioms on random elements of {} ({})", kind.id(), label(f)), r)
}

fn round_trip(f: &Field, kind: AlgebraKind, rng: &mut ChaCha8Rng) -> Check {
    let r = (|| {
        let alg = Algebra::get(kind, f)?;
        for _ in 0..40 {
            let x = random_element(&alg, rng, 3, 4);
            if reparse(&x)? != x {
                return Ok(false);
            }
        }
        Ok(true)
    })();
    (format!("parse after render is the identity in {} ({})", kind.id(), label(f)), r)
}

fn small_cg() -> Check {
    let r = (|| {
        let g = Field::generic();
        let lam = Character::new(g.q(), g.int(2))?;
        let mu = Character::new(g.q(), g.int(3))?;
        Ok(clebsch_gordan(&lam, &mu)?.verified())
    })();
    ("Clebsch-Gordan for L(q,2) ⊗ L(q,3)".to_string(), r)
}

pub(super) fn run(seed: u64) -> Result<Report, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = Field::generic();
    let r3 = Field::root_of_unity(3)?;
    let mut checks = relations(&[g.clone(), r3.clone()]);
    checks.push(oracle(&g, AlgebraKind::U, &mut rng));
    checks.push(oracle(&r3, AlgebraKind::Small, &mut rng));
    checks.push(hopf_axioms(&g, AlgebraKind::U, &mut rng));
    checks.push(hopf_axioms(&r3, AlgebraKind::Small, &mut rng));
    checks.push(round_trip(&g, AlgebraKind::U, &mut rng));
    checks.push(round_trip(&r3, AlgebraKind::Double, &mut rng));
    checks.push(("decomposition of 1 in u1 at l = 3".into(), decompose_regular_u1(&r3).map(|d| d.verified()).map_err(CliError::from)));
    checks.push(small_cg());

    let mut lines = Vec::new();
    let mut js = Vec::new();
    let mut all = true;
    for (name, r) in checks {
        let (ok, detail) = match r {
            Ok(b) => (b, None),
            Err(e) => (false, Some(e.to_string())),
        };
        all &= ok;
        let mut line = format!("{} {name}", if ok { "ok  " } else { "FAIL" });
        if let Some(d) = &detail {
            line.push_str(&format!(" ({d})"));
        }
        lines.push(line);
        js.push(json!({"check": name, "ok": ok, "error": detail}));
    }
    lines.push(format!("all passed: {}", bool_word(all)));
    let mut rep = Report::new(lines.join("\n"), json!({"checks": js, "ok": all}));
    rep.ok = all;
    Ok(rep)
}
