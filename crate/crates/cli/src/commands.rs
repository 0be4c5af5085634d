use clap::{Args, Parser, Subcommand, ValueEnum};
use hopf_forge::hopf::{
    antipode, comultiply, counit, double_multiply_with, pairing_inverse_with, pairing_with, pi_z, to_double_with,
    PairingNorm,
};
use hopf_forge::idempotents::{
    build_system, congruence_solve, decompose_regular_u1_capped, solution_element, solve_idempotents_capped,
    DEFAULT_DECOMPOSE_MAX_L, DEFAULT_MAX_L,
};
use hopf_forge::modules::{
    clebsch_gordan, find_hw_vectors, hw_vector_vn, module_axiom_check, pullback_z, tensor, twist_check,
    verma_act_element, FreeVermaVector,
};
use hopf_forge::pbw::{Algebra, AlgebraKind, Element};
use hopf_forge::qfield::{Field, Scalar};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::parse::parse;
use crate::render::{bool_word, element_json, module_text, scalar_json, tensor_json, vector_json, vector_text};
use crate::specs;

mod selftest;

#[derive(Parser, Debug)]
#[command(name = "hopf-forge", version, about = "Exact computations in a pointed Hopf algebra of type A2xA2")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Coefficient field: rational functions in q, or a root of unity (needs --l).
    #[arg(long, global = true, value_enum)]
    mode: Option<Mode>,
    /// Order of the root of unity q.
    #[arg(long, global = true)]
    l: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for commands that sample random elements.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Generic,
    Root,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Norm {
    Printed,
    Balanced,
}

impl From<Norm> for PairingNorm {
    fn from(n: Norm) -> PairingNorm {
        match n {
            Norm::Printed => PairingNorm::Printed,
            Norm::Balanced => PairingNorm::Balanced,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Normal form of an expression.
    Nf {
        #[arg(long, default_value = "U")]
        algebra: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Product of two expressions.
    Mul {
        #[arg(long, default_value = "U")]
        algebra: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Coproduct.
    Delta {
        #[arg(long, default_value = "U")]
        algebra: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Antipode.
    Antipode {
        #[arg(long, default_value = "U")]
        algebra: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Counit.
    Counit {
        #[arg(long, default_value = "U")]
        algebra: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Skew pairing of a positive and a negative Borel element.
    Pair {
        #[arg(long, value_enum, default_value_t = Norm::Printed)]
        norm: Norm,
        /// Evaluate the convolution inverse instead.
        #[arg(long)]
        inverse: bool,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Product in the double crossproduct of 'X | Y' tensors.
    DoubleMul {
        #[arg(long, value_enum, default_value_t = Norm::Printed)]
        norm: Norm,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Image of a double element under the quotient map for z = (q^a, q^b).
    PiZ {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Act on the highest weight vector (or on v_n) of a Verma module.
    Verma {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda1: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda2: String,
        /// Start from the highest weight vector v_n instead of v.
        #[arg(long)]
        vn: Option<u32>,
        #[arg(default_value = "1")]
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// A finite-dimensional module: V(m1,m2), M(m1,m2), L(a,b) or JSON.
    Simple { module: String },
    /// Highest weight vectors of a module.
    Hwv { module: String },
    /// Tensor product of two modules.
    Tensor { a: String, b: String },
    /// Clebsch-Gordan decomposition of L(lambda) ⊗ L(mu).
    Cg {
        #[arg(long, allow_hyphen_values = true)]
        lambda1: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda2: String,
        #[arg(long, allow_hyphen_values = true)]
        mu1: String,
        #[arg(long, allow_hyphen_values = true)]
        mu2: String,
    },
    /// Pull a module of u back to the double along the quotient map for z.
    Pullback {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(allow_hyphen_values = true)]
        module: String,
    },
    /// Idempotents of the small quantum group u1.
    Idem {
        #[command(subcommand)]
        cmd: IdemCmd,
    },
    /// Solve the weight congruence for (m1, m2).
    Congruence {
        #[arg(long, allow_hyphen_values = true)]
        m1: i64,
        #[arg(long, allow_hyphen_values = true)]
        m2: i64,
    },
    /// Run a fixed battery of consistency checks.
    Selftest,
}

#[derive(Subcommand, Debug)]
enum IdemCmd {
    /// All idempotents Σ a_p e_i E^p F^p for a residue i.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
    },
    /// Check solution JSON (an object, an array of objects, or @file).
    Verify { json: String },
    /// Decompose 1 in u1 into orthogonal primitive idempotents.
    DecomposeU1,
}

/// Exit status and the text written to each stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Report {
        Report { text: text.into(), json, ok: true }
    }
}

struct Ctx {
    field: Field,
    seed: u64,
}

fn cap_from_env(default: u32) -> Result<u32, CliError> {
    match std::env::var("HOPF_FORGE_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::usage(format!("HOPF_FORGE_CAP must be an integer, got {v:?}"))),
        Err(_) => Ok(default),
    }
}

fn field_of(g: &Global) -> Result<Field, CliError> {
    match (g.mode, g.l) {
        (Some(Mode::Generic), Some(_)) => Err(CliError::usage("--l cannot be combined with --mode generic")),
        (Some(Mode::Root), None) => Err(CliError::usage("--mode root needs --l")),
        (_, Some(l)) => Ok(Field::root_of_unity(l)?),
        (_, None) => Ok(Field::generic()),
    }
}

fn algebra(ctx: &Ctx, id: &str) -> Result<std::sync::Arc<Algebra>, CliError> {
    let kind = AlgebraKind::from_id(id).map_err(|e| CliError::usage(e.to_string()))?;
    Ok(Algebra::get(kind, &ctx.field)?)
}

/// Runs one command line (including the program name) and captures its output.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Output { code: 0, stdout: e.to_string(), stderr: String::new() };
            }
            let msg = e.to_string().lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            return fail(CliError::usage(msg));
        }
    };
    let format = cli.global.format;
    let result = field_of(&cli.global).and_then(|field| {
        let ctx = Ctx { field, seed: cli.global.seed };
        dispatch(&ctx, &cli.cmd)
    });
    match result {
        Ok(r) => {
            let body = match format {
                Format::Text => r.text,
                Format::Json => serde_json::to_string_pretty(&r.json).expect("serializable"),
            };
            Output { code: if r.ok { 0 } else { 1 }, stdout: format!("{body}\n"), stderr: String::new() }
        }
        Err(e) => fail(e),
    }
}

fn fail(e: CliError) -> Output {
    Output { code: e.exit_code(), stdout: String::new(), stderr: format!("{}\n", e.to_json()) }
}

fn dispatch(ctx: &Ctx, cmd: &Cmd) -> Result<Report, CliError> {
    let f = &ctx.field;
    match cmd {
        Cmd::Nf { algebra: a, expr } => {
            let x = parse(expr, &algebra(ctx, a)?)?;
            Ok(Report::new(x.to_string(), element_json(&x)))
        }
        Cmd::Mul { algebra: a, a: x, b: y } => {
            let alg = algebra(ctx, a)?;
            let p = parse(x, &alg)?.mul(&parse(y, &alg)?);
            Ok(Report::new(p.to_string(), element_json(&p)))
        }
        Cmd::Delta { algebra: a, expr } => {
            let t = comultiply(&parse(expr, &algebra(ctx, a)?)?);
            Ok(Report::new(t.to_string(), tensor_json(&t)))
        }
        Cmd::Antipode { algebra: a, expr } => {
            let s = antipode(&parse(expr, &algebra(ctx, a)?)?);
            Ok(Report::new(s.to_string(), element_json(&s)))
        }
        Cmd::Counit { algebra: a, expr } => {
            let c = counit(&parse(expr, &algebra(ctx, a)?)?);
            Ok(Report::new(c.to_string(), scalar_json(&c)))
        }
        Cmd::Pair { norm, inverse, x, y } => {
            let pos = Algebra::get(AlgebraKind::SmallGeq0, f)?;
            let neg = Algebra::get(AlgebraKind::SmallLeq0, f)?;
            let (a, b) = (parse(x, &pos)?, parse(y, &neg)?);
            let v = if *inverse { pairing_inverse_with((*norm).into(), &a, &b)? } else { pairing_with((*norm).into(), &a, &b)? };
            Ok(Report::new(v.to_string(), scalar_json(&v)))
        }
        Cmd::DoubleMul { norm, a, b } => {
            let (p, r) = (specs::borel_tensor(f, a)?, specs::borel_tensor(f, b)?);
            let t = double_multiply_with((*norm).into(), &p, &r)?;
            let d = to_double_with((*norm).into(), &t)?;
            Ok(Report::new(
                format!("{t}\nin Dphi: {d}"),
                json!({"product": tensor_json(&t), "double": element_json(&d)}),
            ))
        }
        Cmd::PiZ { z, expr } => {
            let z = specs::central(f, z)?;
            let x = pi_z(&parse(expr, &Algebra::get(AlgebraKind::Double, f)?)?, &z)?;
            Ok(Report::new(x.to_string(), element_json(&x)))
        }
        Cmd::Verma { lambda1, lambda2, vn, expr } => verma(ctx, lambda1, lambda2, *vn, expr),
        Cmd::Simple { module } => {
            let m = specs::module(f, module)?;
            Ok(Report::new(module_text(&m), m.to_json()))
        }
        Cmd::Hwv { module } => hwv(&specs::module(f, module)?),
        Cmd::Tensor { a, b } => {
            let t = tensor(&specs::module(f, a)?, &specs::module(f, b)?)?;
            let failures = module_axiom_check(&t)?;
            let mut rep = hwv(&t)?;
            rep.text = format!("dimension {}\nrelations hold: {}\n{}", t.dim(), bool_word(failures.is_empty()), rep.text);
            rep.json = json!({"dimension": t.dim(), "relation_failures": failures, "highest_weights": rep.json, "module": t.to_json()});
            Ok(rep)
        }
        Cmd::Cg { lambda1, lambda2, mu1, mu2 } => {
            let rep = clebsch_gordan(&specs::character(f, lambda1, lambda2)?, &specs::character(f, mu1, mu2)?)?;
            let mut lines = vec![format!("dim {} = Σ factor dims: {}", rep.module_dim, bool_word(rep.complete()))];
            let mut factors = Vec::new();
            for fa in &rep.factors {
                lines.push(format!(
                    "  L{} dimension {} multiplicity {} simple {}",
                    fa.highest_weight,
                    fa.dimension,
                    fa.multiplicity,
                    bool_word(fa.simple)
                ));
                factors.push(json!({
                    "weight": fa.highest_weight.to_string(),
                    "dimension": fa.dimension,
                    "multiplicity": fa.multiplicity,
                    "simple": fa.simple,
                }));
            }
            let expected: Vec<String> = rep.expected.iter().map(|c| c.to_string()).collect();
            lines.push(format!("expected weights: {}", expected.join(", ")));
            lines.push(format!("direct sum: {}  matches expected: {}", bool_word(rep.direct), bool_word(rep.matches_expected())));
            let mut r = Report::new(
                lines.join("\n"),
                json!({"factors": factors, "expected": expected, "dimension": rep.module_dim, "direct": rep.direct, "verified": rep.verified()}),
            );
            r.ok = rep.verified();
            Ok(r)
        }
        Cmd::Pullback { z, module } => {
            let z = specs::central(f, z)?;
            let m = specs::module(f, module)?;
            let p = pullback_z(&m, &z)?;
            let failures = module_axiom_check(&p)?;
            let twist = twist_check(&m, &z)?;
            let mut r = Report::new(
                format!("{}\nrelations hold: {}\ntwist check: {}", module_text(&p), bool_word(failures.is_empty()), bool_word(twist)),
                json!({"module": p.to_json(), "relation_failures": failures, "twist_check": twist}),
            );
            r.ok = failures.is_empty() && twist;
            Ok(r)
        }
        Cmd::Idem { cmd } => idem(ctx, cmd),
        Cmd::Congruence { m1, m2 } => {
            let l = f.require_root()?;
            let s = congruence_solve(*m1, *m2, l)?;
            let mut r = Report::new(
                format!("(t2, t3) = ({}, {}) mod {l}; p l + 3 q = 1 with (p, q) = ({}, {}); verified: {}", s.t2, s.t3, s.p, s.q, bool_word(s.verify())),
                s.to_json(),
            );
            r.ok = s.verify();
            Ok(r)
        }
        Cmd::Selftest => selftest::run(ctx.seed),
    }
}

fn verma(ctx: &Ctx, l1: &str, l2: &str, vn: Option<u32>, expr: &str) -> Result<Report, CliError> {
    let f = &ctx.field;
    let lambda = specs::character(f, l1, l2)?;
    let kind = if f.is_root() { AlgebraKind::Small } else { AlgebraKind::U };
    let alg = Algebra::get(kind, f)?;
    let start = match vn {
        Some(n) => hw_vector_vn(&lambda, n)?,
        None => FreeVermaVector::highest(&alg, &lambda),
    };
    let w = verma_act_element(&parse(expr, &alg)?, &start)?;
    let terms: Vec<Value> = w
        .terms()
        .iter()
        .map(|(t, c)| json!({"F1": t[0], "F12": t[1], "F2": t[2], "coeff": c.to_json()}))
        .collect();
    Ok(Report::new(w.to_string(), json!({"lambda": lambda.to_string(), "text": w.to_string(), "terms": terms})))
}

fn hwv(m: &hopf_forge::modules::MatrixModule) -> Result<Report, CliError> {
    let spaces = find_hw_vectors(m)?;
    let mut lines = Vec::new();
    let mut js = Vec::new();
    for s in &spaces {
        lines.push(format!("weight {}: {} vector(s)", s.weight, s.vectors.len()));
        for v in &s.vectors {
            lines.push(format!("  {}", vector_text(m, v)));
        }
        js.push(json!({"weight": s.weight.to_string(), "vectors": s.vectors.iter().map(|v| vector_json(v)).collect::<Vec<_>>()}));
    }
    if lines.is_empty() {
        lines.push("no highest weight vectors".into());
    }
    Ok(Report::new(lines.join("\n"), Value::Array(js)))
}

fn coeff_text(c: &[Scalar]) -> String {
    format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn idem(ctx: &Ctx, cmd: &IdemCmd) -> Result<Report, CliError> {
    let f = &ctx.field;
    match cmd {
        IdemCmd::Solve { i } => {
            let out = solve_idempotents_capped(*i, f, cap_from_env(DEFAULT_MAX_L)?)?;
            let mut lines = vec![format!("{} solution(s) for i = {}", out.solutions.len(), i.rem_euclid(f.require_root()? as i64))];
            for s in &out.solutions {
                lines.push(format!("  {}  {}", coeff_text(&s.coeffs), s.element));
            }
            if out.discarded > 0 {
                lines.push(format!("{} branch(es) dropped: no square root found", out.discarded));
            }
            Ok(Report::new(
                lines.join("\n"),
                json!({"solutions": out.solutions.iter().map(|s| s.to_json()).collect::<Vec<_>>(), "discarded": out.discarded}),
            ))
        }
        IdemCmd::Verify { json: src } => {
            let v = specs::read_json(src)?;
            let items = match v {
                Value::Array(a) => a,
                other => vec![other],
            };
            let mut lines = Vec::new();
            let mut js = Vec::new();
            let mut all = true;
            for item in &items {
                let bad = |m: &str| CliError::new("json", m.to_string());
                let i = item.get("i").and_then(Value::as_i64).ok_or_else(|| bad("missing integer i"))?;
                let coeffs = item
                    .get("coeffs")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("missing coeffs"))?
                    .iter()
                    .map(|c| Ok(f.coerce(&Scalar::from_json(c)?)?))
                    .collect::<Result<Vec<_>, CliError>>()?;
                let x = solution_element(i, &coeffs, f)?;
                let idempotent = x.mul(&x) == x;
                let in_system = build_system(i, f)?.is_solution(&coeffs)?;
                all &= idempotent && in_system;
                lines.push(format!(
                    "i = {} {}: idempotent {}, solves system {}",
                    i,
                    coeff_text(&coeffs),
                    bool_word(idempotent),
                    bool_word(in_system)
                ));
                js.push(json!({"i": i, "idempotent": idempotent, "solves_system": in_system, "element": element_json(&x)}));
            }
            let mut r = Report::new(lines.join("\n"), Value::Array(js));
            r.ok = all;
            Ok(r)
        }
        IdemCmd::DecomposeU1 => {
            let d = decompose_regular_u1_capped(f, cap_from_env(DEFAULT_DECOMPOSE_MAX_L)?)?;
            let mut lines = vec![format!("1 = sum of {} orthogonal idempotents in u1 (l = {})", d.summands.len(), d.l)];
            let mut js = Vec::new();
            for s in &d.summands {
                let head = s.head.map_or("?".to_string(), |k| k.to_string());
                lines.push(format!(
                    "  i = {}  {}  {}  left ideal dim {}  primitive {}  head V({head})",
                    s.solution.i,
                    coeff_text(&s.solution.coeffs),
                    s.solution.element,
                    s.left_ideal_dim,
                    bool_word(s.primitive)
                ));
                js.push(json!({
                    "solution": s.solution.to_json(),
                    "left_ideal_dim": s.left_ideal_dim,
                    "primitive": s.primitive,
                    "head": s.head,
                }));
            }
            lines.push(format!(
                "orthogonal {}  sum is 1 {}  total dimension {}  heads {:?}  verified {}",
                bool_word(d.orthogonal),
                bool_word(d.sums_to_one),
                d.total_dim(),
                d.head_counts(),
                bool_word(d.verified())
            ));
            if !d.unsplit.is_empty() {
                lines.push(format!("no decomposition found for i in {:?}", d.unsplit));
            }
            let mut r = Report::new(
                lines.join("\n"),
                json!({
                    "l": d.l,
                    "summands": js,
                    "orthogonal": d.orthogonal,
                    "sums_to_one": d.sums_to_one,
                    "total_dim": d.total_dim(),
                    "head_counts": d.head_counts(),
                    "unsplit": d.unsplit,
                    "verified": d.verified(),
                }),
            );
            r.ok = d.verified();
            Ok(r)
        }
    }
}

/// Round trip of an element through its rendering.
pub(crate) fn reparse(x: &Element) -> Result<Element, CliError> {
    parse(&x.to_string(), x.algebra())
}
