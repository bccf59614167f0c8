use super::*;
use crate::field::{Elem, Field};
use crate::poly::delta;
use crate::table::{self, GapCase};

fn q() -> Field {
    Field::rational()
}

fn gf(order: u64) -> Field {
    Field::gf(order).unwrap()
}

fn poly(field: &Field, n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
    Polynomial::from_terms(
        field,
        n,
        terms.iter().map(|(c, e)| (e.to_vec(), field.from_int(*c))),
    )
    .unwrap()
}

fn var(field: &Field, n: usize, i: usize) -> Polynomial {
    Polynomial::var(field, n, i).unwrap()
}

fn constant(field: &Field, n: usize, c: i64) -> Polynomial {
    Polynomial::constant(field, n, field.from_int(c))
}

fn sum_of_vars(field: &Field, n: usize) -> Polynomial {
    (0..n).fold(Polynomial::zero(field, n), |acc, i| {
        &acc + &var(field, n, i)
    })
}

#[test]
fn vanishing_examples() {
    let f = &q();
    assert!(vanishes_on_repeats(&delta(f, 3).unwrap()).unwrap());
    let g = poly(f, 3, &[(1, &[1, 0, 0]), (-1, &[0, 1, 0]), (1, &[0, 0, 1])]);
    assert!(!vanishes_on_repeats(&g).unwrap());
    let g = poly(f, 3, &[(1, &[1, 0, 1]), (-1, &[0, 1, 1])]);
    assert!(g.identification_minor(0, 1).unwrap().is_zero());
    assert!(!vanishes_on_repeats(&g).unwrap());
    assert!(vanishes_on_repeats(&delta(&gf(5), 4).unwrap()).unwrap());
    assert!(!vanishes_on_repeats(&var(&gf(5), 2, 0)).unwrap());
}

#[test]
fn delta_multiple_examples() {
    let f = &q();
    let d4 = delta(f, 4).unwrap();
    let r = is_delta_multiple(&d4.scalar_mul(&f.from_int(7))).unwrap();
    assert!(r.is_multiple);
    assert_eq!(r.quotient, Some(constant(f, 4, 7)));
    // (x1 + x2) * Δ3, multiplied out then divided back
    let w = poly(f, 3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0])]);
    let r = is_delta_multiple(&(&w * &delta(f, 3).unwrap())).unwrap();
    assert_eq!(r.quotient, Some(w));
    let sq = poly(f, 2, &[(1, &[2, 0]), (-1, &[0, 2])]);
    assert_eq!(
        is_delta_multiple(&sq).unwrap().quotient,
        Some(poly(f, 2, &[(1, &[1, 0]), (1, &[0, 1])]))
    );
    let r = is_delta_multiple(&poly(f, 3, &[(1, &[1, 0, 1]), (-1, &[0, 1, 1])])).unwrap();
    assert!(!r.is_multiple && r.quotient.is_none());
    // finite fields: functional test, no quotient
    let r = is_delta_multiple(&delta(&gf(5), 3).unwrap()).unwrap();
    assert!(r.is_multiple && r.quotient.is_none());
}

#[test]
fn example_gap_one_over_q_and_gf3() {
    for field in [q(), gf(3)] {
        let f = poly(&field, 3, &[(1, &[1, 0, 1]), (-1, &[0, 1, 1])]);
        let r = poly_gap(&f).unwrap();
        assert_eq!((r.essential_arity(), r.gap), (3, 1));
        let arities: Vec<usize> = r.minor_arities.iter().map(|m| m.essential_arity).collect();
        assert_eq!(arities, vec![0, 0, 2, 2, 2, 2]);
        assert_eq!(r.case, GapCase::One);
    }
}

#[test]
fn poly_gap_examples() {
    let f = odd_char_counterexample(3, 3).unwrap();
    assert_eq!(poly_gap(&f).unwrap().gap, 2);
    let r = poly_gap(&delta(&q(), 3).unwrap()).unwrap();
    assert_eq!((r.gap, r.quasi_arity, r.case), (3, 0, GapCase::HighGap));
    assert!(r.minor_arities.iter().all(|m| m.essential_arity == 0));
    assert_eq!(poly_gap(&var(&q(), 3, 1)), Err(Error::GapUndefined(1)));
}

#[test]
fn symbolic_and_table_paths_agree_on_small_fields() {
    // Low-degree polynomials with small integer coefficients behave the same
    // over Q and over GF(7), so the symbolic results must match the table ones.
    let f = &q();
    let samples = [
        poly(f, 3, &[(1, &[1, 0, 1]), (-1, &[0, 1, 1])]),
        &var(f, 3, 0) + &delta(f, 3).unwrap(),
        sum_of_vars(f, 3),
        poly(f, 3, &[(1, &[1, 1, 1])]),
        &constant(f, 4, 2) + &delta(f, 4).unwrap(),
    ];
    for s in samples {
        let sym = poly_gap(&s).unwrap();
        let g7 = gf(7);
        let lifted = Polynomial::from_terms(
            &g7,
            s.arity(),
            s.terms().map(|(m, c)| {
                let c = c.as_rational().unwrap().to_integer();
                (m.exponents().to_vec(), g7.from_big(&c))
            }),
        )
        .unwrap();
        let tab = poly_gap(&lifted).unwrap();
        assert_eq!(
            (sym.gap, sym.quasi_arity),
            (tab.gap, tab.quasi_arity),
            "{s}"
        );
        assert_eq!(
            sym.repeats_oddsupp_determined, tab.repeats_oddsupp_determined,
            "{s}"
        );
    }
}

#[test]
fn decompose_gap_ge3_examples() {
    let g5 = gf(5);
    let f = &var(&g5, 4, 3) + &delta(&g5, 4).unwrap();
    let d = decompose_gap_ge3(&f).unwrap();
    assert_eq!((d.p, d.kind), (3, DecompositionKind::LowArity));
    assert_eq!(d.g, var(&g5, 4, 3));
    assert_eq!(d.h, delta(&g5, 4).unwrap());
    assert_eq!(table::arity_gap(&f.to_table().unwrap()).unwrap().gap, 3);

    let f = &q();
    let w = sum_of_vars(f, 4);
    let h = &w * &delta(f, 4).unwrap();
    let d = decompose_gap_ge3(&(&constant(f, 4, 2) + &h)).unwrap();
    assert_eq!((d.p, &d.g, &d.h), (4, &constant(f, 4, 2), &h));
    assert_eq!(d.quotient, Some(w));
    assert_eq!(d.pairs.len(), 12);

    let g7 = gf(7);
    let d = decompose_gap_ge3(&delta(&g7, 4).unwrap()).unwrap();
    assert!(d.g.is_zero());
    assert_eq!(d.p, 4);

    let low = poly(&g5, 4, &[(1, &[1, 1, 1, 1])]);
    assert!(matches!(
        decompose_gap_ge3(&low),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        decompose_gap_ge3(&delta(&g5, 3).unwrap()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn record_has_fixed_key_order() {
    let g5 = gf(5);
    let f = &var(&g5, 4, 3) + &delta(&g5, 4).unwrap();
    let keys: Vec<&str> = decompose_gap_ge3(&f)
        .unwrap()
        .record()
        .iter()
        .map(|(k, _)| *k)
        .collect();
    assert_eq!(
        keys,
        [
            "field",
            "arity",
            "gap",
            "kind",
            "g",
            "h",
            "g_variables",
            "pairs"
        ]
    );
}

#[test]
fn condition_examples() {
    let g4 = gf(4);
    let r = check_conditions_ab(&poly(&g4, 2, &[(1, &[1, 0]), (1, &[0, 1])])).unwrap();
    assert!(r.satisfies_a && r.satisfies_b);
    let xy = poly(&g4, 2, &[(1, &[1, 1])]);
    let r = check_conditions_ab(&xy).unwrap();
    assert!(r.satisfies_a && !r.satisfies_b);
    assert_eq!(r.b_witness, Some((vec![1, 1], 0, 1)));
    let r = check_conditions_ab(&poly(&g4, 2, &[(1, &[2, 1]), (1, &[1, 2])])).unwrap();
    assert!(r.satisfied());
    let skew = poly(&g4, 3, &[(1, &[2, 1, 0]), (1, &[0, 2, 1])]);
    let r = check_conditions_ab(&skew).unwrap();
    assert!(!r.satisfies_a);
    assert!(r.a_witness.unwrap().replays(&skew));
    assert!(matches!(
        check_conditions_ab(&var(&gf(3), 2, 0)),
        Err(Error::WrongCharacteristic {
            expected: 2,
            found: 3
        })
    ));
}

#[test]
fn oddsupp_poly_examples() {
    let g2 = gf(2);
    assert!(is_determined_by_oddsupp_poly(&sum_of_vars(&g2, 3)).unwrap());
    let maj = poly(&g2, 3, &[(1, &[1, 1, 0]), (1, &[1, 0, 1]), (1, &[0, 1, 1])]);
    assert!(!is_determined_by_oddsupp_poly(&maj).unwrap());
    let skew = poly(&gf(4), 3, &[(1, &[2, 1, 0]), (1, &[0, 2, 1])]);
    assert!(!is_determined_by_oddsupp_poly(&skew).unwrap());
    for f in [sum_of_vars(&g2, 3), maj, skew] {
        let t = f.to_table().unwrap();
        assert_eq!(
            is_determined_by_oddsupp_poly(&f).unwrap(),
            table::is_determined_by_oddsupp(&t).is_some()
        );
    }
}

#[test]
fn decompose_char2_examples() {
    let g2 = gf(2);
    let lin = sum_of_vars(&g2, 4);
    match decompose_char2(&lin).unwrap() {
        Outcome::Decomposed(d) => {
            assert_eq!((d.kind, d.p), (DecompositionKind::OddSuppChar2, 2));
            assert_eq!(d.g, lin);
            assert!(d.h.is_zero());
        }
        other => panic!("{other:?}"),
    }
    let and = poly(&g2, 4, &[(1, &[1, 1, 1, 1])]);
    assert!(matches!(decompose_char2(&and).unwrap(), Outcome::GapOne(r) if r.gap == 1));

    // x5 + Δ5 over GF(8): g = x5 on one variable, gap 4
    let g8 = gf(8);
    let f = &var(&g8, 5, 4) + &delta(&g8, 5).unwrap();
    match decompose_char2(&f).unwrap() {
        Outcome::Decomposed(d) => {
            assert_eq!((d.kind, d.p), (DecompositionKind::LowArity, 4));
            assert_eq!(d.g, var(&g8, 5, 4));
            assert_eq!(table::arity_gap(&f.to_table().unwrap()).unwrap().gap, 4);
        }
        other => panic!("{other:?}"),
    }
    // x4 + x1*x2*x3*Δ4 over GF(4)
    let g4 = gf(4);
    let w = poly(&g4, 4, &[(1, &[1, 1, 1, 0])]);
    let f = &var(&g4, 4, 3) + &(&w * &delta(&g4, 4).unwrap());
    match decompose_char2(&f).unwrap() {
        Outcome::Decomposed(d) => assert_eq!((d.p, d.g), (3, var(&g4, 4, 3))),
        other => panic!("{other:?}"),
    }
    assert!(decompose_char2(&var(&gf(5), 4, 0)).is_err());
}

#[test]
fn split_examples() {
    let g2 = gf(2);
    let parts = split_low_arity_summands(&sum_of_vars(&g2, 4)).unwrap();
    assert_eq!(parts, (0..4).map(|i| var(&g2, 4, i)).collect::<Vec<_>>());
    // GF(4), n = 5: the symmetric sums of x_i, x_i x_j^2 and x_i x_j^2 x_k^3 over
    // distinct indices; every monomial has distinct nonzero exponents
    let g4 = gf(4);
    let n = 5;
    let mut terms = Vec::new();
    for i in 0..n {
        let mut e = vec![0u32; n];
        e[i] = 1;
        terms.push((e, g4.one()));
        for j in (0..n).filter(|&j| j != i) {
            let mut e = vec![0u32; n];
            e[i] = 1;
            e[j] = 2;
            terms.push((e, Elem::Finite(2)));
            for k in (0..n).filter(|&k| k != i && k != j) {
                let mut e = vec![0u32; n];
                e[i] = 1;
                e[j] = 2;
                e[k] = 3;
                terms.push((e, Elem::Finite(3)));
            }
        }
    }
    let f = Polynomial::from_terms(&g4, n, terms).unwrap();
    assert!(check_conditions_ab(&f).unwrap().satisfied());
    assert_eq!(poly_gap(&f).unwrap().gap, 2);
    let parts = split_low_arity_summands(&f).unwrap();
    assert_eq!(parts.len(), 5 + 20 + 60);
    assert!(parts.iter().all(|s| s.occurring_variables().len() <= 3));
    assert!(matches!(
        split_low_arity_summands(&sum_of_vars(&g4, 4)),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn odd_counterexample_examples() {
    let g3 = gf(3);
    let f = odd_char_counterexample(3, 3).unwrap();
    assert_eq!(
        f.identification_minor(1, 0).unwrap(),
        poly(&g3, 3, &[(1, &[0, 0, 2]), (-2, &[0, 0, 0])])
    );
    for (q, n) in [(3, 2), (3, 3), (5, 2), (5, 3)] {
        let r = check_odd_counterexample(q, n).unwrap();
        assert!(r.holds(), "q = {q}, n = {n}");
    }
    let r = check_odd_counterexample(5, 3).unwrap();
    assert_eq!(r.full_coefficient, "1");
    assert!(odd_char_counterexample(4, 3).is_err());
}

#[test]
fn oddsupp_constant_examples() {
    let f = &q();
    assert!(oddsupp_constant_char0(&delta(f, 3).unwrap()).unwrap());
    assert!(!oddsupp_constant_char0(&sum_of_vars(f, 3)).unwrap());
    let g = &constant(f, 4, 5) + &delta(f, 4).unwrap().scalar_mul(&f.from_int(9));
    assert!(oddsupp_constant_char0(&g).unwrap());
    assert!(oddsupp_constant_char0(&var(f, 1, 0)).is_err());
}

#[test]
fn ternary_examples() {
    let f = &q();
    let g = &var(f, 3, 0) + &delta(f, 3).unwrap().scalar_mul(&f.from_int(3));
    let t = ternary_gap_char0(&g).unwrap();
    assert_eq!((t.report.gap, t.report.quasi_arity), (2, 1));
    assert_eq!(t.pattern, Some([1, 0, 0]));
    assert_eq!(t.h, Some(var(f, 1, 0)));
    assert_eq!(t.report.case, GapCase::TernaryTwo);
    for g in [poly(f, 3, &[(1, &[1, 1, 1])]), sum_of_vars(f, 3)] {
        let t = ternary_gap_char0(&g).unwrap();
        assert_eq!((t.report.gap, t.pattern), (1, None));
    }
    assert!(ternary_gap_char0(&sum_of_vars(f, 4)).is_err());
}

#[test]
fn decompose_char0_examples() {
    let f = &q();
    let xy = poly(f, 3, &[(1, &[1, 1, 0])]);
    let w = poly(f, 3, &[(1, &[1, 0, 0]), (1, &[0, 2, 0])]);
    let h = &w * &delta(f, 3).unwrap();
    let g = &xy + &h;
    let gap = poly_gap(&g).unwrap().gap;
    match decompose_char0(&g).unwrap() {
        Outcome::Decomposed(d) => {
            assert_eq!(d.p, gap);
            assert_eq!(&(&d.g + &d.h), &g);
            assert_eq!(d.g.occurring_variables().len(), 3 - gap);
        }
        Outcome::GapOne(r) => assert_eq!(r.gap, 1),
    }
    for n in 2..=4 {
        let c = &constant(f, n, -3) + &delta(f, n).unwrap();
        match decompose_char0(&c).unwrap() {
            Outcome::Decomposed(d) => {
                assert_eq!(d.p, n);
                assert_eq!(d.g, constant(f, n, -3));
                assert_eq!(d.quotient, Some(Polynomial::one(f, n)));
            }
            other => panic!("{other:?}"),
        }
    }
    assert!(matches!(
        decompose_char0(&sum_of_vars(f, 2)).unwrap(),
        Outcome::GapOne(_)
    ));
    let u = &var(f, 3, 0) + &delta(f, 3).unwrap();
    match decompose_char0(&u).unwrap() {
        Outcome::Decomposed(d) => assert_eq!((d.p, d.g), (2, var(f, 3, 0))),
        other => panic!("{other:?}"),
    }
}

#[test]
fn dimension_count_examples() {
    assert_eq!(oddsupp_dimension_counts(4, 3).unwrap(), (8, 8));
    assert_eq!(oddsupp_dimension_counts(2, 5).unwrap(), (2, 2));
    let (u, v) = oddsupp_dimension_counts(8, 3).unwrap();
    assert_eq!(u, v);
    // C(8,3) + C(8,1) by hand
    assert_eq!(u, 56 + 8);
    assert!(oddsupp_dimension_counts(6, 3).is_err());
}
