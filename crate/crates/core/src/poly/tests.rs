use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;

fn q() -> Field {
    Field::rational()
}

fn gf(order: u64) -> Field {
    Field::gf(order).unwrap()
}

fn rat(n: i64, d: i64) -> Elem {
    Elem::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// Builds a polynomial from `(coefficient, exponents)` with integer coefficients.
fn poly(field: &Field, n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
    Polynomial::from_terms(
        field,
        n,
        terms.iter().map(|(c, e)| (e.to_vec(), field.from_int(*c))),
    )
    .unwrap()
}

fn raw(field: &Field, n: usize, terms: &[(i64, &[u32])]) -> Polynomial {
    Polynomial::from_terms_raw(
        field,
        n,
        terms.iter().map(|(c, e)| (e.to_vec(), field.from_int(*c))),
    )
    .unwrap()
}

/// x1*x3 - x2*x3
fn example(field: &Field) -> Polynomial {
    poly(field, 3, &[(1, &[1, 0, 1]), (-1, &[0, 1, 1])])
}

fn points(field: &Field, n: usize) -> Vec<Vec<Elem>> {
    let els = field.elements();
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                els.iter().map(move |a| {
                    let mut p = p.clone();
                    p.push(a.clone());
                    p
                })
            })
            .collect();
    }
    out
}

#[test]
fn canonicalize_examples() {
    assert_eq!(
        raw(&gf(2), 1, &[(1, &[3])]).canonicalize(),
        poly(&gf(2), 1, &[(1, &[1])])
    );
    assert_eq!(
        raw(&gf(4), 1, &[(1, &[5])]).canonicalize(),
        poly(&gf(4), 1, &[(1, &[2])])
    );
    let c = raw(&gf(3), 1, &[(1, &[2]), (2, &[4])]).canonicalize();
    assert!(c.is_zero());
    assert!(!raw(&gf(2), 1, &[(1, &[3])]).is_canonical());
}

#[test]
fn ring_examples() {
    let f = &q();
    let a = poly(f, 2, &[(1, &[1, 0]), (-1, &[0, 1])]);
    let b = poly(f, 2, &[(1, &[1, 0]), (1, &[0, 1])]);
    assert_eq!(&a * &b, poly(f, 2, &[(1, &[2, 0]), (-1, &[0, 2])]));
    let g2 = gf(2);
    let s = poly(&g2, 2, &[(1, &[1, 0]), (1, &[0, 1])]);
    assert_eq!(&s * &s, s);
    assert!((&a + &a.scalar_mul(&f.from_int(-1))).is_zero());
    assert_eq!(a.checked_add(&s), Err(Error::FieldMismatch));
    assert!(matches!(
        a.checked_mul(&poly(f, 3, &[])),
        Err(Error::ArityMismatch { .. })
    ));
}

#[test]
fn partial_derivative_examples() {
    let f = &q();
    assert_eq!(
        example(f).partial_derivative(0).unwrap(),
        poly(f, 3, &[(1, &[0, 0, 1])])
    );
    let g2 = gf(2);
    let sq = raw(&g2, 2, &[(1, &[2, 1])]);
    assert!(sq.partial_derivative(0).unwrap().is_zero());
    let cube = poly(f, 1, &[(1, &[3])]);
    assert_eq!(
        cube.partial_derivative(0).unwrap(),
        poly(f, 1, &[(3, &[2])])
    );
    assert!(cube.partial_derivative(1).is_err());
}

#[test]
fn simple_minor_examples() {
    let f = &q();
    // sigma = (1->1, 2->1, 3->2): f(x1, x1, x2) = 0
    assert!(example(f).simple_minor(&[0, 0, 1], 2).unwrap().is_zero());
    assert_eq!(example(f).simple_minor(&[0, 1, 2], 3).unwrap(), example(f));
    let xy = poly(f, 2, &[(1, &[1, 1])]);
    assert_eq!(
        xy.simple_minor(&[0, 0], 1).unwrap(),
        poly(f, 1, &[(1, &[2])])
    );
}

#[test]
fn identification_minors_of_the_example() {
    let f = &q();
    let e = example(f);
    let m = |i, j| e.identification_minor(i, j).unwrap();
    assert!(m(0, 1).is_zero());
    assert!(m(1, 0).is_zero());
    assert_eq!(m(0, 2), poly(f, 3, &[(1, &[0, 0, 2]), (-1, &[0, 1, 1])]));
    assert_eq!(m(2, 0), poly(f, 3, &[(1, &[2, 0, 0]), (-1, &[1, 1, 0])]));
    assert_eq!(m(1, 2), poly(f, 3, &[(1, &[1, 0, 1]), (-1, &[0, 0, 2])]));
    assert_eq!(m(2, 1), poly(f, 3, &[(1, &[1, 1, 0]), (-1, &[0, 2, 0])]));
    assert_eq!(e.identification_minor(1, 1), Err(Error::SameVariable(1)));
}

#[test]
fn identification_minor_of_odd_counterexample_gf3() {
    // (x1^2 - 2)^2 = x1^4 - 4 x1^2 + 4 -> x1^2 + 2 x1^2 + 1 = 1 over GF(3),
    // so f(x1, x1, x3) = x3^2 - 2 = x3^2 + 1.
    let g3 = gf(3);
    let factor = |i: usize| {
        let mut e = [0u32; 3];
        e[i] = 2;
        poly(&g3, 3, &[(1, &e), (-2, &[0, 0, 0])])
    };
    let f = &(&factor(0) * &factor(1)) * &factor(2);
    let m = f.identification_minor(1, 0).unwrap();
    assert_eq!(m, poly(&g3, 3, &[(1, &[0, 0, 2]), (1, &[0, 0, 0])]));
    assert_eq!(
        m.to_table().unwrap(),
        f.to_table().unwrap().identification_minor(1, 0).unwrap()
    );
}

#[test]
fn minor_derivative_expansion_examples() {
    let f = &q();
    let xy = poly(f, 2, &[(1, &[1, 1])]);
    assert_eq!(
        xy.minor_derivative_expansion(&[0, 0], 1, 0).unwrap(),
        poly(f, 1, &[(2, &[1])])
    );
    // f_{1<-3} = x3^2 - x2 x3, whose x3-derivative is 2 x3 - x2
    let e = example(f);
    let sigma = [2, 1, 2];
    let expected = poly(f, 3, &[(2, &[0, 0, 1]), (-1, &[0, 1, 0])]);
    assert_eq!(
        e.minor_derivative_expansion(&sigma, 3, 2).unwrap(),
        expected
    );
    let minor = e.simple_minor(&sigma, 3).unwrap();
    assert_eq!(minor.partial_derivative(2).unwrap(), expected);
    // injective sigma: a single summand
    let perm = [2, 0, 1];
    assert_eq!(
        e.minor_derivative_expansion(&perm, 3, 0).unwrap(),
        e.partial_derivative(1)
            .unwrap()
            .simple_minor(&perm, 3)
            .unwrap()
    );
}

#[test]
fn evaluate_examples() {
    let f = &q();
    let pt = [f.from_int(1), f.from_int(1), f.from_int(5)];
    assert_eq!(example(f).evaluate(&pt).unwrap(), f.zero());
    // Delta_3(0, 1, 2) over GF(3) = (0-1)(0-2)(1-2) = (-1)(-2)(-1) = -2 = 1
    let g3 = gf(3);
    let d3 = delta(&g3, 3).unwrap();
    let direct = [(0i64, 1i64), (0, 2), (1, 2)]
        .iter()
        .fold(1i64, |acc, (a, b)| acc * (a - b))
        .rem_euclid(3);
    assert_eq!(direct, 1);
    let pt: Vec<Elem> = (0..3).map(Elem::Finite).collect();
    assert_eq!(d3.evaluate(&pt).unwrap(), Elem::Finite(1));
    let c = Polynomial::constant(f, 2, rat(7, 3));
    assert_eq!(
        c.evaluate(&[f.from_int(9), f.from_int(-4)]).unwrap(),
        rat(7, 3)
    );
    assert!(example(f).evaluate(&[f.one()]).is_err());
    assert!(example(f)
        .evaluate(&[Elem::Finite(1), f.one(), f.one()])
        .is_err());
}

#[test]
fn interpolate_examples() {
    let g2 = gf(2);
    let and = FunctionTable::from_fn(2, 2, 2, |a| a[0] & a[1]);
    assert_eq!(
        Polynomial::interpolate(&g2, &and).unwrap(),
        poly(&g2, 2, &[(1, &[1, 1])])
    );
    let one = FunctionTable::constant(3, 3, 2, 1);
    assert_eq!(
        Polynomial::interpolate(&gf(3), &one).unwrap(),
        Polynomial::one(&gf(3), 2)
    );
    let id = FunctionTable::from_fn(3, 3, 1, |a| a[0]);
    assert_eq!(
        Polynomial::interpolate(&gf(3), &id).unwrap(),
        poly(&gf(3), 1, &[(1, &[1])])
    );
    assert_eq!(
        Polynomial::interpolate(&gf(3), &and),
        Err(Error::FieldMismatch)
    );
}

#[test]
fn interpolate_round_trips_every_boolean_table_up_to_four_variables() {
    let g2 = gf(2);
    for n in 0..=4 {
        for code in 0..FunctionTable::count(2, 2, n).unwrap() {
            let t = FunctionTable::from_code(2, 2, n, code);
            let f = Polynomial::interpolate(&g2, &t).unwrap();
            assert!(f.is_canonical());
            assert_eq!(f.to_table().unwrap(), t);
        }
    }
}

#[test]
fn delta_examples() {
    let f = &q();
    assert_eq!(
        delta(f, 2).unwrap(),
        poly(f, 2, &[(1, &[1, 0]), (-1, &[0, 1])])
    );
    let expected = poly(
        f,
        3,
        &[
            (1, &[2, 1, 0]),
            (-1, &[2, 0, 1]),
            (-1, &[1, 2, 0]),
            (1, &[1, 0, 2]),
            (1, &[0, 2, 1]),
            (-1, &[0, 1, 2]),
        ],
    );
    assert_eq!(delta(f, 3).unwrap(), expected);
    assert_eq!(
        delta(f, 3).unwrap().to_string(),
        "x1^2*x2 - x1^2*x3 - x1*x2^2 + x1*x3^2 + x2^2*x3 - x2*x3^2"
    );
    // n > q: Delta_3 is the zero function on GF(2)^3, so its canonical form is 0
    let d = delta(&gf(2), 3).unwrap();
    assert!(d.is_zero());
    assert!(delta(f, 1).is_err());
    // n(n-1)/2 linear factors: total degree of Delta_n
    for n in 2..=5 {
        let d = delta(f, n).unwrap();
        assert!(d
            .terms()
            .all(|(m, _)| m.degree() == (n * (n - 1) / 2) as u64));
    }
}

#[test]
fn delta_against_direct_product_at_integer_points() {
    let f = &q();
    let d = delta(f, 4).unwrap();
    for pt in [[3i64, -1, 7, 2], [0, 5, -5, 11], [2, 2, 9, 1]] {
        let direct = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .fold(1i64, |acc, (i, j)| acc * (pt[i] - pt[j]));
        let v: Vec<Elem> = pt.iter().map(|&a| f.from_int(a)).collect();
        assert_eq!(d.evaluate(&v).unwrap(), f.from_int(direct));
    }
}

#[test]
fn exact_divide_examples() {
    let f = &q();
    let diff_sq = poly(f, 2, &[(1, &[2, 0]), (-1, &[0, 2])]);
    let x1_minus_x2 = poly(f, 2, &[(1, &[1, 0]), (-1, &[0, 1])]);
    assert_eq!(
        diff_sq.exact_divide(&x1_minus_x2).unwrap(),
        Some(poly(f, 2, &[(1, &[1, 0]), (1, &[0, 1])]))
    );
    // (x1 - x2)(x2 - x3) = x1 x2 - x1 x3 - x2^2 + x2 x3
    let d3 = delta(f, 3).unwrap();
    let x1_minus_x3 = poly(f, 3, &[(1, &[1, 0, 0]), (-1, &[0, 0, 1])]);
    let expected = poly(
        f,
        3,
        &[
            (1, &[1, 1, 0]),
            (-1, &[1, 0, 1]),
            (-1, &[0, 2, 0]),
            (1, &[0, 1, 1]),
        ],
    );
    assert_eq!(
        d3.exact_divide(&x1_minus_x3).unwrap(),
        Some(expected.clone())
    );
    assert_eq!(d3.divide_by_difference(0, 2).unwrap(), Some(expected));
    let xy = poly(f, 2, &[(1, &[1, 1])]);
    assert_eq!(xy.exact_divide(&x1_minus_x2).unwrap(), None);
    assert_eq!(xy.divide_by_difference(0, 1).unwrap(), None);
    assert_eq!(
        xy.exact_divide(&Polynomial::zero(f, 2)),
        Err(Error::DivisionByZero)
    );
    assert!(delta(&gf(5), 3)
        .unwrap()
        .exact_divide(&delta(&gf(5), 3).unwrap())
        .is_err());
}

#[test]
fn occurring_variables_examples() {
    assert_eq!(example(&q()).occurring_variables(), vec![0, 1, 2]);
    assert!(Polynomial::constant(&q(), 2, q().from_int(5))
        .occurring_variables()
        .is_empty());
    let r = raw(&gf(2), 1, &[(1, &[2]), (1, &[1])]);
    assert_eq!(r.occurring_variables(), vec![0]);
    assert!(r.canonicalize().occurring_variables().is_empty());
}

#[test]
fn display_forms() {
    let f = &q();
    let p = Polynomial::from_terms(
        f,
        3,
        [
            (vec![0, 0, 0], rat(-3, 4)),
            (vec![1, 0, 2], rat(-1, 1)),
            (vec![0, 1, 0], rat(2, 1)),
        ],
    )
    .unwrap();
    assert_eq!(p.to_string(), "-x1*x3^2 + 2*x2 - 3/4");
    assert_eq!(Polynomial::zero(f, 2).to_string(), "0");
    let g4 = gf(4);
    let p = Polynomial::from_terms(
        &g4,
        2,
        [(vec![1, 1], Elem::Finite(2)), (vec![0, 0], Elem::Finite(1))],
    )
    .unwrap();
    assert_eq!(p.to_string(), "2*x1*x2 + 1");
}

#[test]
fn exchange_round_trip() {
    for f in [q(), gf(4), gf(5)] {
        let d = &delta(&f, 3).unwrap() + &Polynomial::constant(&f, 3, f.from_int(2));
        assert_eq!(Polynomial::from_exchange(&d.to_exchange()).unwrap(), d);
    }
    let text = "polygap-poly 1\nfield Q 2\n3/4 1 0\n-1 0 2\n";
    let p = Polynomial::from_exchange(text).unwrap();
    assert_eq!(p.to_string(), "-x2^2 + 3/4*x1");
    assert!(Polynomial::from_exchange("field Q 2\n").is_err());
    assert!(Polynomial::from_exchange("polygap-poly 1\nfield 3 1 2\n5 1 0\n").is_err());
}

// ---------------------------------------------------------------------------
// properties

fn field_by_index(i: usize) -> Field {
    match i {
        0 => q(),
        1 => gf(2),
        2 => gf(3),
        3 => gf(4),
        _ => gf(5),
    }
}

type RawTerms = Vec<(Vec<u32>, i64, i64)>;

fn raw_terms(max_exp: u32) -> impl Strategy<Value = RawTerms> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, 4), -6i64..=6, 1i64..=3),
        0..6,
    )
}

fn build(field: &Field, n: usize, terms: &RawTerms, canonical: bool) -> Polynomial {
    let ts = terms.iter().map(|(e, c, d)| {
        let c = match field.order() {
            Some(q) => Elem::Finite(c.rem_euclid(q as i64) as u32),
            None => rat(*c, *d),
        };
        (e[..n].to_vec(), c)
    });
    if canonical {
        Polynomial::from_terms(field, n, ts).unwrap()
    } else {
        Polynomial::from_terms_raw(field, n, ts).unwrap()
    }
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent_and_preserves_the_function(
        fi in 1usize..5, n in 1usize..=4, terms in raw_terms(9)
    ) {
        let field = field_by_index(fi);
        let f = build(&field, n, &terms, false);
        let c = f.canonicalize();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonicalize(), c.clone());
        for pt in points(&field, n) {
            prop_assert_eq!(f.evaluate(&pt).unwrap(), c.evaluate(&pt).unwrap());
        }
    }

    #[test]
    fn horner_matches_termwise(fi in 0usize..5, n in 1usize..=4, terms in raw_terms(6),
                               pt in prop::collection::vec(-4i64..=4, 4)) {
        let field = field_by_index(fi);
        let f = build(&field, n, &terms, false);
        let pt: Vec<Elem> = pt[..n].iter().map(|&a| match field.order() {
            Some(q) => Elem::Finite(a.rem_euclid(q as i64) as u32),
            None => field.from_int(a),
        }).collect();
        prop_assert_eq!(f.evaluate(&pt).unwrap(), f.evaluate_termwise(&pt).unwrap());
    }

    #[test]
    fn interpolation_inverts_tabulation(fi in 1usize..5, n in 0usize..=3, terms in raw_terms(7)) {
        let field = field_by_index(fi);
        let f = build(&field, n, &terms, true);
        let t = f.to_table().unwrap();
        prop_assert_eq!(Polynomial::interpolate(&field, &t).unwrap(), f.clone());
        for (idx, pt) in points(&field, n).iter().enumerate() {
            prop_assert_eq!(Elem::Finite(t.values()[idx]), f.evaluate(pt).unwrap());
        }
    }

    #[test]
    fn table_to_polynomial_to_table(fi in 1usize..5, n in 0usize..=3, seed in any::<u64>()) {
        let field = field_by_index(fi);
        let q = field.order().unwrap() as usize;
        let mut s = seed;
        let t = FunctionTable::from_fn(q, q, n, |_| {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 33) % q as u64) as u32
        });
        prop_assert_eq!(Polynomial::interpolate(&field, &t).unwrap().to_table().unwrap(), t);
    }

    #[test]
    fn chain_rule_for_minors(fi in 0usize..5, n in 1usize..=4, m in 1usize..=3,
                             terms in raw_terms(5), sigma in prop::collection::vec(0usize..3, 4)) {
        let field = field_by_index(fi);
        let f = build(&field, n, &terms, true);
        let sigma: Vec<usize> = sigma[..n].iter().map(|s| s % m).collect();
        for j in 0..m {
            let lhs = f.simple_minor_raw(&sigma, m).unwrap().partial_derivative(j).unwrap();
            let rhs = f.minor_derivative_expansion(&sigma, m, j).unwrap();
            prop_assert_eq!(lhs.canonicalize(), rhs.clone());
            if !field.is_finite() {
                let direct = f.simple_minor(&sigma, m).unwrap().partial_derivative(j).unwrap();
                prop_assert_eq!(direct, rhs);
            }
        }
    }

    #[test]
    fn division_undoes_multiplication(n in 1usize..=4, a in raw_terms(3), b in raw_terms(3)) {
        let field = q();
        let f = build(&field, n, &a, true);
        let d = build(&field, n, &b, true);
        prop_assume!(!d.is_zero());
        prop_assert_eq!((&f * &d).exact_divide(&d).unwrap(), Some(f));
    }

    #[test]
    fn ring_laws(fi in 0usize..5, n in 1usize..=3, a in raw_terms(4), b in raw_terms(4), c in raw_terms(4)) {
        let field = field_by_index(fi);
        let (a, b, c) = (build(&field, n, &a, true), build(&field, n, &b, true), build(&field, n, &c, true));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }
}

#[test]
fn delta_vanishes_exactly_on_repeats() {
    for order in [2, 3, 4, 5] {
        let field = gf(order);
        for n in 2..=4 {
            let d = delta(&field, n).unwrap();
            for pt in points(&field, n) {
                let repeat = (0..n).any(|i| (i + 1..n).any(|j| pt[i] == pt[j]));
                assert_eq!(
                    field.is_zero(&d.evaluate(&pt).unwrap()),
                    repeat,
                    "GF({order}) {pt:?}"
                );
            }
        }
    }
}
