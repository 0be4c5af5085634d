use super::*;
use crate::pbw::{Algebra, AlgebraKind, Element, Letter, Monomial};
use crate::qfield::{q_int, Field, Scalar};

fn r3() -> Field {
    Field::root_of_unity(3).unwrap()
}

fn ints(f: &Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| f.int(x)).collect()
}

fn example_summands(f: &Field) -> Vec<(i64, Vec<Scalar>)> {
    [(0, [0, -1, 1]), (0, [1, 1, -1]), (1, [1, 0, -1]), (1, [0, 0, 1]), (2, [0, 1, -1]), (2, [1, -1, 1])]
        .into_iter()
        .map(|(i, c)| (i, ints(f, &c)))
        .collect()
}

fn k_mono(a: i32, b: i32) -> Monomial {
    Monomial::from_parts([0; 3], [a, b], [0; 2], [0; 3])
}

#[test]
fn group_idempotents_l3() {
    let f = r3();
    let u = Algebra::get(AlgebraKind::Small, &f).unwrap();
    let es = group_idempotents(&f).unwrap();
    assert_eq!(es.len(), 9);
    let mut e00 = Element::zero(&u);
    for s in 0..3 {
        for t in 0..3 {
            e00 = e00.add(&Element::monomial(&u, k_mono(s, t)));
        }
    }
    assert_eq!(es[0].1, e00.scale(&f.rational(1, 9)));
    assert!(es[0].1.mul(&es[3].1).is_zero());
    let total = es.iter().fold(Element::zero(&u), |acc, (_, e)| acc.add(e));
    assert_eq!(total, Element::one(&u));
    let k1 = Element::letter(&u, Letter::K1).unwrap();
    let k2 = Element::letter(&u, Letter::K2).unwrap();
    for ((i, j), e) in &es {
        assert_eq!(k1.mul(e), e.scale(&f.q_pow(-(*i as i64))));
        assert_eq!(k2.mul(e), e.scale(&f.q_pow(-(*j as i64))));
    }
}

#[test]
fn one_variable_idempotents() {
    let f = r3();
    let u = Algebra::get(AlgebraKind::Small, &f).unwrap();
    let total = (0..3).fold(Element::zero(&u), |acc, j| acc.add(&e_k2(&u, j).unwrap()));
    assert_eq!(total, Element::one(&u));
    for i in 0..3 {
        let e = e_k1(&u, i).unwrap();
        assert_eq!(e.mul(&e), e);
        assert!(e.mul(&e_k1(&u, i + 1).unwrap()).is_zero());
    }
    let u1 = Algebra::get(AlgebraKind::Small1, &f).unwrap();
    assert!(e_k2(&u1, 0).is_err());
    for (i, c) in example_summands(&f) {
        let x = solution_element(i, &c, &f).unwrap().transport(&u).unwrap();
        for j in 0..3 {
            let y = x.mul(&e_k2(&u, j).unwrap());
            assert_eq!(y.mul(&y), y);
        }
    }
}

#[test]
fn commutation_formula_examples() {
    let g = Field::generic();
    let u = Algebra::get(AlgebraKind::U, &g).unwrap();
    assert_eq!(fm_es_expanded(&u, 0, 0).unwrap(), Element::one(&u));
    let e = Element::letter(&u, Letter::E1).unwrap();
    let fl = Element::letter(&u, Letter::F1).unwrap();
    let k = Element::letter(&u, Letter::K1).unwrap();
    let kinv = Element::letter(&u, Letter::K1Inv).unwrap();
    let bracket = kinv.sub(&k).scale(&g.q_minus_q_inv().inv().unwrap());
    assert_eq!(k_inverse_bracket(&u, 0), bracket);
    assert_eq!(fm_es_expanded(&u, 1, 1).unwrap(), e.mul(&fl).add(&bracket));
    assert_eq!(fm_es_expanded(&u, 1, 1).unwrap(), fl.mul(&e));
    assert_eq!(fm_es_expanded(&u, 2, 1).unwrap(), fl.mul(&fl).mul(&e));
    assert!(fm_es_expanded(&Algebra::get(AlgebraKind::SmallGeq0, &r3()).unwrap(), 1, 1).is_err());
}

#[test]
fn product_rule_l3() {
    let f = r3();
    let u1 = Algebra::get(AlgebraKind::Small1, &f).unwrap();
    for i in 0..3 {
        for m in 0..3 {
            for s in 0..3 {
                let lhs = diagonal_element(&u1, i, m).unwrap().mul(&diagonal_element(&u1, i, s).unwrap());
                assert_eq!(lhs, product_identity_rhs(&u1, i, m, s).unwrap(), "i={i} m={m} s={s}");
            }
        }
    }
}

#[test]
fn structure_constants() {
    let f = r3();
    assert!(structure_constant(&f, 2, 1, 0, 1).unwrap().is_one());
    assert_eq!(structure_constant(&f, 1, 1, 1, 0).unwrap(), q_int(&f, 2));
    assert!(structure_constant(&f, 1, 1, 2, 0).is_err());
    assert!(structure_constant(&f, 3, 1, 0, 0).is_err());
    assert!(structure_constant(&Field::generic(), 1, 1, 1, 0).is_err());
    for l in [3u32, 5] {
        let f = Field::root_of_unity(l).unwrap();
        for i in 0..l as i64 {
            for m in 0..l {
                for s in 0..l {
                    for j in 0..=m.min(s) {
                        let c = structure_constant(&f, m, s, j, i).unwrap();
                        assert_eq!(c, structure_constant(&f, s, m, j, i).unwrap());
                        let res = (m as i64 + s as i64 + i).rem_euclid(l as i64);
                        assert_eq!(c.is_zero(), res < j as i64, "l={l} (m,s,j,i)=({m},{s},{j},{i})");
                    }
                }
            }
        }
    }
}

#[test]
fn system_shape() {
    let f = r3();
    let sys = build_system(1, &f).unwrap();
    assert_eq!(sys.l(), 3);
    assert_eq!(sys.equations[0].len(), 1);
    let t = &sys.equations[0][0];
    assert_eq!((t.m, t.s, t.j), (0, 0, 0));
    assert!(t.coeff.is_one());
    for (p, eq) in sys.equations.iter().enumerate() {
        for t in eq {
            assert_eq!((t.m + t.s - t.j) as usize, p);
            assert!(t.m as usize <= p && t.s as usize <= p);
            assert_eq!(sys.coefficient(t.s, t.m, t.j), Some(&t.coeff));
        }
    }
    assert!(build_system(0, &Field::root_of_unity(4).unwrap()).is_err());
    assert!(sys.is_solution(&ints(&f, &[1, 0, -1])).unwrap());
    assert!(!sys.is_solution(&ints(&f, &[1, 1, 0])).unwrap());
}

#[test]
fn square_roots() {
    let f = Field::root_of_unity(5).unwrap();
    for d in [f.int(4), f.q_pow(3).mul(&f.rational(9, 25)), f.zero()] {
        let r = field_sqrt(&f, &d).unwrap().unwrap();
        assert_eq!(r.mul(&r), d);
    }
    assert!(field_sqrt(&f, &f.int(2)).unwrap().is_none());
    assert!(field_sqrt(&f, &f.int(-1)).unwrap().is_none());
}

#[test]
fn solutions_l3() {
    let f = r3();
    for i in 0..3 {
        let out = solve_idempotents_capped(i, &f, DEFAULT_MAX_L).unwrap();
        assert_eq!(out.discarded, 0);
        let coeffs: Vec<Vec<Scalar>> = out.solutions.iter().map(|s| s.coeffs.clone()).collect();
        assert!(coeffs.contains(&ints(&f, &[0, 0, 0])));
        assert!(coeffs.contains(&ints(&f, &[1, 0, 0])));
        for (j, c) in example_summands(&f) {
            if j == i {
                assert!(coeffs.contains(&c), "i={i} missing {c:?}");
            }
        }
        for s in &out.solutions {
            assert!(coeffs.contains(&s.flip().unwrap().coeffs));
            assert_eq!(s.element.mul(&s.element), s.element);
        }
    }
    assert!(solve_idempotents(0, &Field::root_of_unity(4).unwrap()).is_err());
    assert!(solve_idempotents_capped(0, &Field::root_of_unity(5).unwrap(), 3).is_err());
    assert!(IdempotentSolution::new(0, ints(&f, &[1, 1, 0]), &f).is_err());
}

#[test]
fn solution_json_round_trip() {
    let f = r3();
    let s = IdempotentSolution::new(2, ints(&f, &[1, -1, 1]), &f).unwrap();
    assert_eq!(IdempotentSolution::from_json(&s.to_json()).unwrap(), s);
    let mut bad = s.to_json();
    bad["coeffs"][1] = serde_json::json!("0");
    assert!(IdempotentSolution::from_json(&bad).is_err());
}

#[test]
fn regular_representation_l3() {
    let f = r3();
    let reg = regular_representation(&f).unwrap();
    assert_eq!(reg.dim(), 27);
    let u1 = reg.algebra().clone();
    assert_eq!(reg.left_matrix(&Element::one(&u1)).unwrap(), crate::qfield::Matrix::identity(&f, 27));
    let le = reg.left_matrix(&Element::letter(&u1, Letter::E1).unwrap()).unwrap();
    assert!(!le.mul(&le).is_zero());
    assert!(le.mul(&le).mul(&le).is_zero());
    assert!(regular_representation_capped(&f, 20).is_err());
}

#[test]
fn radical_l3() {
    let f = r3();
    let reg = regular_representation(&f).unwrap();
    let rad = radical_trace_form(&reg).unwrap();
    assert_eq!(reg.dim() - rad.len(), 1 + 4 + 9);
    let span = |xs: &[Element]| {
        let cols: Vec<_> = xs.iter().map(|x| reg.coords(x).unwrap()).collect();
        crate::qfield::Matrix::from_columns(&f, reg.dim(), &cols).rank()
    };
    let base = span(&rad);
    for a in &rad {
        for b in &rad {
            let mut with = rad.clone();
            with.push(a.mul(b));
            assert_eq!(span(&with), base);
        }
    }
    let mut power = rad.clone();
    for _ in 0..reg.dim() {
        power = power.iter().flat_map(|x| rad.iter().map(move |y| x.mul(y))).filter(|x| !x.is_zero()).collect();
        if power.is_empty() {
            break;
        }
        power.truncate(64);
    }
    assert!(power.is_empty());
    for k in 0..3 {
        let v = u1_simple(k, &f).unwrap();
        for r in &rad {
            assert!(v.element_matrix(r).unwrap().is_zero());
        }
    }
}

#[test]
fn primitivity_l3() {
    let f = r3();
    let reg = regular_representation(&f).unwrap();
    let rad = radical_trace_form(&reg).unwrap();
    for (i, c) in example_summands(&f) {
        assert!(is_primitive(&reg, &rad, &solution_element(i, &c, &f).unwrap()).unwrap());
    }
    let u1 = reg.algebra().clone();
    assert!(!is_primitive(&reg, &rad, &e_k1(&u1, 0).unwrap()).unwrap());
    assert!(!is_primitive(&reg, &rad, &Element::one(&u1)).unwrap());
    assert!(is_primitive(&reg, &rad, &Element::letter(&u1, Letter::E1).unwrap()).is_err());
}

#[test]
fn decomposition_l3() {
    let f = r3();
    let d = decompose_regular_u1(&f).unwrap();
    assert!(d.verified(), "{d:?}");
    assert_eq!(d.summands.len(), 6);
    assert_eq!(d.total_dim(), 27);
    assert_eq!(d.head_counts(), vec![1, 2, 3]);
    let mut got: Vec<(i64, Vec<String>)> =
        d.summands.iter().map(|s| (s.solution.i, s.solution.coeffs.iter().map(|c| c.to_string()).collect())).collect();
    let mut want: Vec<(i64, Vec<String>)> =
        example_summands(&f).into_iter().map(|(i, c)| (i, c.iter().map(|x| x.to_string()).collect())).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn congruences() {
    let s = congruence_solve(1, 0, 5).unwrap();
    assert_eq!((s.t2, s.t3), (1, 2));
    assert!(s.verify());
    let z = congruence_solve(0, 0, 5).unwrap();
    assert_eq!((z.t2, z.t3), (0, 0));
    for m1 in 0..7 {
        for m2 in 0..7 {
            assert!(congruence_solve(m1, m2, 7).unwrap().verify());
        }
    }
    assert!(congruence_solve(1, 1, 3).is_err());
    assert!(congruence_solve(1, 1, 9).is_err());
}
