use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use hopf_forge::hopf::axioms::{
    antipode_antimultiplicative, antipode_law, coassociative, coproduct_multiplicative, counit_law, double_bridge,
    skew_pairing_axioms,
};
use hopf_forge::hopf::{pi_z_relation_failures, CentralParameter, PairingNorm};
use hopf_forge::idempotents::{
    congruence_solve, diagonal_element, fm_es_product, fm_es_expanded, product_identity_rhs, solution_element,
};
use hopf_forge::modules::{
    build_v_u, build_verma_u, check_filtration_component, clebsch_gordan, find_hw_vectors, hw_vector_vn,
    module_axiom_check, pullback_z, twist_check, verma_act, weight_character, weight_space_rank, Character,
};
use hopf_forge::pbw::{
    central_check, normal_form, oracle_normal_form, qcommutator_check, random_element, Algebra, AlgebraKind, Element,
    FreeWord, Letter, RootVector,
};
use hopf_forge::qfield::{Field, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;

/// Criteria that are implemented as stated but do not hold.
const KNOWN_RED: &[u32] = &[10];

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn generic() -> Field {
    Field::generic()
}

fn root(l: u32) -> Field {
    Field::root_of_unity(l).expect("valid order")
}

fn gold_decomposition() -> Outcome {
    let out = hopf_forge_cli::run(["hopf-forge", "--l", "3", "--format", "json", "idem", "decompose-u1"]);
    ensure(out.code == 0, || format!("exit {}: {}", out.code, out.stderr))?;
    let v: Value = serde_json::from_str(&out.stdout).map_err(err)?;
    let r = root(3);
    let mut got: Vec<(i64, Vec<i64>)> = Vec::new();
    let mut elements = Vec::new();
    for s in v["summands"].as_array().ok_or("no summands")? {
        ensure(s["primitive"] == Value::Bool(true), || format!("not primitive: {s}"))?;
        let sol = &s["solution"];
        let i = sol["i"].as_i64().ok_or("missing i")?;
        let coeffs = sol["coeffs"]
            .as_array()
            .ok_or("missing coeffs")?
            .iter()
            .map(|c| r.coerce(&Scalar::from_json(c).map_err(err)?).map_err(err))
            .collect::<Result<Vec<_>, String>>()?;
        let ints = coeffs
            .iter()
            .map(|c| (-2..=2).find(|&n| *c == r.int(n)).ok_or_else(|| format!("non-integral coefficient {c}")))
            .collect::<Result<Vec<_>, String>>()?;
        got.push((i, ints));
        elements.push(solution_element(i, &coeffs, &r).map_err(err)?);
    }
    got.sort();
    let mut gold = vec![
        (0, vec![0, -1, 1]),
        (0, vec![1, 1, -1]),
        (1, vec![0, 0, 1]),
        (1, vec![1, 0, -1]),
        (2, vec![0, 1, -1]),
        (2, vec![1, -1, 1]),
    ];
    gold.sort();
    ensure(got == gold, || format!("summands {got:?}"))?;
    let alg = elements[0].algebra().clone();
    let mut sum = Element::zero(&alg);
    for (a, x) in elements.iter().enumerate() {
        sum = sum.add(x);
        for (b, y) in elements.iter().enumerate() {
            let p = x.mul(y);
            let want = if a == b { x.clone() } else { Element::zero(&alg) };
            ensure(p == want, || format!("f{a} f{b} = {p}"))?;
        }
    }
    ensure(sum == Element::one(&alg), || format!("sum = {sum}"))?;
    ensure(v["verified"] == Value::Bool(true), || "report not verified".into())?;
    Ok("six summands equal the gold vectors; idempotent, orthogonal, sum 1, primitive".into())
}

fn words(len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                Letter::BASIC.into_iter().map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    for (kind, f) in [(AlgebraKind::U, generic()), (AlgebraKind::Small, root(3))] {
        let alg = Algebra::get(kind, &f).map_err(err)?;
        let mut all: Vec<Vec<Letter>> = (0..=5).flat_map(words).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        all.extend((0..200).map(|_| (0..8).map(|_| Letter::BASIC[rng.gen_range(0..6)]).collect()));
        for w in all {
            let w = FreeWord::new(f.one(), w);
            let a = normal_form(&w, &alg).map_err(err)?;
            let b = oracle_normal_form(&w, &alg).map_err(err)?;
            ensure(a == b, || format!("{w} in {kind}: {a} vs {b}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} words agree"))
}

fn commutation_identities() -> Outcome {
    let g = Algebra::get(AlgebraKind::U, &generic()).map_err(err)?;
    let r = root(3);
    let roots = [Algebra::get(AlgebraKind::Small, &r).map_err(err)?, Algebra::get(AlgebraKind::Small1, &r).map_err(err)?];
    let mut count = 0;
    let cases = (0..=4).flat_map(|m| (0..=4).map(move |s| (m, s)));
    for (m, s) in cases {
        ensure(fm_es_product(&g, m, s).map_err(err)? == fm_es_expanded(&g, m, s).map_err(err)?, || format!("U: m={m} s={s}"))?;
        count += 1;
    }
    for a in &roots {
        for m in 0..=2 {
            for s in 0..=2 {
                ensure(fm_es_product(a, m, s).map_err(err)? == fm_es_expanded(a, m, s).map_err(err)?, || {
                    format!("{}: m={m} s={s}", a.kind())
                })?;
                count += 1;
            }
        }
        for i in 0..3 {
            for m in 0..=2 {
                for s in 0..=2 {
                    let lhs = diagonal_element(a, i, m).map_err(err)?.mul(&diagonal_element(a, i, s).map_err(err)?);
                    ensure(lhs == product_identity_rhs(a, i, m, s).map_err(err)?, || {
                        format!("product rule in {}: i={i} m={m} s={s}", a.kind())
                    })?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} identities"))
}

fn characters(g: &Field) -> Vec<Character> {
    let mut out = Vec::new();
    for a in 0..=3 {
        for b in 0..=3 {
            out.push(weight_character(g, a, b));
        }
    }
    out.push(Character::new(g.int(2), g.int(3)).unwrap());
    out.push(Character::new(g.int(3).mul(&g.q()), g.int(2)).unwrap());
    out.push(Character::new(g.int(-5).mul(&g.q_pow(2)), g.int(7)).unwrap());
    out
}

fn highest_weight_vectors() -> Outcome {
    let g = generic();
    let chars = characters(&g);
    for lam in &chars {
        for n in 0..=6 {
            let v = hw_vector_vn(lam, n).map_err(err)?;
            ensure(!v.is_zero(), || format!("v_{n} = 0 for {lam}"))?;
            for e in [Letter::E1, Letter::E2] {
                ensure(verma_act(e, &v).map_err(err)?.is_zero(), || format!("{e} v_{n} ≠ 0 for {lam}"))?;
            }
        }
    }
    Ok(format!("{} characters, n ≤ 6", chars.len()))
}

fn clebsch_gordan_grid() -> Outcome {
    let g = generic();
    let (l2, m2) = (g.int(2), g.int(5).mul(&g.q_pow(-1)));
    let mut count = 0;
    for m in 0..=3i64 {
        for n in 0..=3i64 {
            for e1 in [1, -1] {
                for e2 in [1, -1] {
                    let lam = Character::new(g.int(e1).mul(&g.q_pow(m)), l2.clone()).map_err(err)?;
                    let mu = Character::new(g.int(e2).mul(&g.q_pow(n)), m2.clone()).map_err(err)?;
                    let rep = clebsch_gordan(&lam, &mu).map_err(err)?;
                    ensure(rep.verified(), || format!("m={m} n={n} ε=({e1},{e2})"))?;
                    ensure(rep.factors.iter().all(|f| f.multiplicity == 1), || format!("multiplicity m={m} n={n}"))?;
                    ensure(rep.module_dim as i64 == (m + 1) * (n + 1), || format!("dimension m={m} n={n}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} tensor products"))
}

fn algebra_for(kind: AlgebraKind) -> Result<Arc<Algebra>, String> {
    let f = if kind == AlgebraKind::U { generic() } else { root(3) };
    Algebra::get(kind, &f).map_err(err)
}

fn hopf_suite() -> Outcome {
    let mut count = 0;
    for kind in AlgebraKind::ALL {
        let a = algebra_for(kind)?;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut xs: Vec<Element> = kind.generators().into_iter().map(|g| Element::letter(&a, g).unwrap()).collect();
        xs.extend((0..100).map(|_| random_element(&a, &mut rng, 3, 3)));
        for x in &xs {
            ensure(coassociative(x) && counit_law(x) && antipode_law(x), || format!("{kind}: {x}"))?;
        }
        for w in xs.windows(2) {
            ensure(coproduct_multiplicative(&w[0], &w[1]) && antipode_antimultiplicative(&w[0], &w[1]), || {
                format!("{kind}: {} · {}", w[0], w[1])
            })?;
        }
        count += xs.len();
    }
    Ok(format!("{count} elements over {} algebras", AlgebraKind::ALL.len()))
}

fn pairing_and_double() -> Outcome {
    let r = root(3);
    let mut checked = 0;
    for norm in [PairingNorm::Printed, PairingNorm::Balanced] {
        let rep = skew_pairing_axioms(norm, &r, 2).map_err(err)?;
        ensure(rep.failures.is_empty(), || format!("{norm:?}: {:?}", rep.failures))?;
        let bridge = double_bridge(norm, &r).map_err(err)?;
        ensure(bridge.failures.is_empty(), || format!("bridge {norm:?}: {:?}", bridge.failures))?;
        checked += rep.checked + bridge.checked;
    }
    Ok(format!("{checked} checks"))
}

fn pullbacks() -> Outcome {
    let r = root(3);
    let zs = CentralParameter::all(&r).map_err(err)?;
    for z in &zs {
        let bad = pi_z_relation_failures(z).map_err(err)?;
        ensure(bad.is_empty(), || format!("π_z for {z:?}: {bad:?}"))?;
        for m1 in 0..3 {
            for m2 in 0..3 {
                let v = build_v_u(m1, m2, &r).map_err(err)?;
                let p = pullback_z(&v, z).map_err(err)?;
                let fails = module_axiom_check(&p).map_err(err)?;
                ensure(fails.is_empty(), || format!("pullback of V({m1},{m2}): {fails:?}"))?;
                ensure(twist_check(&v, z).map_err(err)?, || format!("twist V({m1},{m2}) {z:?}"))?;
            }
        }
    }
    Ok(format!("{} parameters × 9 simples", zs.len()))
}

fn centrality_and_commutation() -> Outcome {
    let mut count = 0;
    for l in [3u32, 5] {
        let u = Algebra::get(AlgebraKind::U, &root(l)).map_err(err)?;
        for a in RootVector::ALL {
            let x = Element::monomial(&u, a.letter().monomial()).pow(l);
            ensure(central_check(&x), || format!("{a:?}^{l} not central"))?;
            count += 1;
            for b in RootVector::ALL {
                ensure(qcommutator_check(a, b, &u, l).map_err(err)?, || format!("{a:?}, {b:?}^{l} at l={l}"))?;
                count += 1;
            }
        }
        for k in [Letter::K1, Letter::K2] {
            ensure(central_check(&Element::monomial(&u, k.monomial()).pow(l)), || format!("{k}^{l}"))?;
        }
    }
    Ok(format!("{count} checks at l = 3, 5"))
}

fn congruences() -> Result<String, String> {
    for l in [5u32, 7] {
        for m1 in 0..l as i64 {
            for m2 in 0..l as i64 {
                let s = congruence_solve(m1, m2, l).map_err(err)?;
                ensure(s.verify(), || format!("l={l} ({m1},{m2})"))?;
            }
        }
    }
    Ok("74 targets solved at l = 5, 7".into())
}

fn verma_strata_l3() -> Result<String, String> {
    let r = root(3);
    let m = build_verma_u(0, 0, &r).map_err(err)?;
    let found: Vec<Character> = find_hw_vectors(&m).map_err(err)?.into_iter().map(|h| h.weight).collect();
    let mut missing = Vec::new();
    for m1 in 0..3 {
        for m2 in 0..3 {
            let v = build_v_u(m1, m2, &r).map_err(err)?;
            for h in find_hw_vectors(&v).map_err(err)? {
                if !found.contains(&h.weight) {
                    missing.push(format!("V({m1},{m2})"));
                }
            }
        }
    }
    let shown: Vec<String> = found.iter().map(|c| c.to_string()).collect();
    if missing.is_empty() {
        Ok(format!("all nine simple weights among {}", shown.join(" ")))
    } else {
        Err(format!("M(0,0) highest weights {}; missing {}", shown.join(" "), missing.join(" ")))
    }
}

fn congruence_criterion() -> Outcome {
    let a = congruences();
    let b = verma_strata_l3();
    match (a, b) {
        (Ok(x), Ok(y)) => Ok(format!("{x}; {y}")),
        (x, y) => Err(format!(
            "congruences: {}; l = 3 strata: {}",
            x.unwrap_or_else(|e| format!("FAIL {e}")),
            y.unwrap_or_else(|e| format!("FAIL {e}"))
        )),
    }
}

fn weight_spaces_and_strata() -> Outcome {
    let g = generic();
    let lam = Character::new(g.int(2), g.int(3).mul(&g.q())).map_err(err)?;
    for i in 0..=4 {
        for j in 0..=4 {
            let want = (i.min(j) + 1) as usize;
            let got = weight_space_rank(&lam, i, j).map_err(err)?;
            ensure(got == (want, want), || format!("({i},{j}): {got:?}"))?;
        }
    }
    let mut count = 0;
    for t2 in 0..=3u32 {
        for t3 in 0..=3 - t2 {
            let rep = check_filtration_component(&lam, t2, t3, 3).map_err(err)?;
            ensure(rep.passed(), || format!("({t2},{t3}): {:?}", rep.failures))?;
            count += 1;
        }
    }
    Ok(format!("25 weight spaces, {count} strata"))
}

fn main() -> ExitCode {
    let criteria: Vec<(u32, &str, u64, fn() -> Outcome)> = vec![
        (1, "gold decomposition of 1 in u1 at l = 3", 30, gold_decomposition),
        (2, "rewriting engine equals the oracle", 120, oracle_equivalence),
        (3, "commutation formula and product rule", 60, commutation_identities),
        (4, "highest weight vectors v_n", 60, highest_weight_vectors),
        (5, "Clebsch-Gordan decompositions", 60, clebsch_gordan_grid),
        (6, "Hopf axioms", 120, hopf_suite),
        (7, "skew pairing and the double", 120, pairing_and_double),
        (8, "pullbacks along π_z", 120, pullbacks),
        (9, "centrality and q-commutation", 60, centrality_and_commutation),
        (10, "weight congruences and M(0,0) strata", 120, congruence_criterion),
        (11, "weight spaces and filtration strata", 60, weight_spaces_and_strata),
    ];
    let mut unexpected = Vec::new();
    for (n, name, limit, f) in criteria {
        let t = Instant::now();
        let outcome = f();
        let dt = t.elapsed();
        let in_time = dt <= Duration::from_secs(limit);
        let pass = outcome.is_ok() && in_time;
        let detail = match &outcome {
            Ok(s) => s.clone(),
            Err(e) => e.clone(),
        };
        let timing = if in_time { format!("{:.1}s", dt.as_secs_f64()) } else { format!("{:.1}s over {limit}s", dt.as_secs_f64()) };
        println!("{} [{n:>2}] {name} ({timing}): {detail}", if pass { "PASS" } else { "FAIL" });
        if !pass && !KNOWN_RED.contains(&n) {
            unexpected.push(n);
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
