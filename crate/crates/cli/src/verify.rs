//! Verification batteries: each checks one family of results against an
//! independent oracle and counts mismatches.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use polygap::analyzer::{
    self, check_conditions_ab, check_odd_counterexample, decompose_char0, decompose_char2,
    decompose_gap_ge3, is_delta_multiple, oddsupp_constant_char0, oddsupp_dimension_counts,
    split_low_arity_summands, ternary_gap_char0, vanishes_on_repeats, Outcome,
};
use polygap::table::{self, admissible_oddsupp_sets, FunctionTable};
use polygap::{delta, Error, Field, Polynomial};
use rand::Rng;
use rayon::prelude::*;

use crate::gen;

/// What one instance of a battery found.
pub enum Check {
    Pass,
    /// Passed, and counted under a tally label.
    Tally(String),
    Fail(String),
}

#[derive(Clone, Debug, Default)]
pub struct Summary {
    pub name: String,
    pub checked: u64,
    pub mismatches: u64,
    pub tallies: BTreeMap<String, u64>,
    /// The failing instance with the smallest index.
    pub failure: Option<(u64, String)>,
    pub elapsed: Duration,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }

    pub fn tally(&self, label: &str) -> u64 {
        self.tallies.get(label).copied().unwrap_or(0)
    }

    fn merge(mut self, other: Summary) -> Summary {
        self.checked += other.checked;
        self.mismatches += other.mismatches;
        for (k, v) in other.tallies {
            *self.tallies.entry(k).or_default() += v;
        }
        self.failure = match (self.failure, other.failure) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }

    fn record(mut self, index: u64, check: Check) -> Summary {
        match check {
            Check::Pass => self.checked += 1,
            Check::Tally(label) => {
                self.checked += 1;
                *self.tallies.entry(label).or_default() += 1;
            }
            Check::Fail(msg) => {
                self.checked += 1;
                self.mismatches += 1;
                if self.failure.as_ref().is_none_or(|(i, _)| index < *i) {
                    self.failure = Some((index, msg));
                }
            }
        }
        self
    }
}

/// Runs `check` on instances `0..count` in parallel.
pub fn battery<F>(name: &str, count: u64, check: F) -> Summary
where
    F: Fn(u64) -> Check + Sync,
{
    let start = Instant::now();
    let mut summary = (0..count)
        .into_par_iter()
        .fold(Summary::default, |acc, i| acc.record(i, check(i)))
        .reduce(Summary::default, Summary::merge);
    summary.name = name.to_string();
    summary.elapsed = start.elapsed();
    summary
}

fn fail_on<T>(r: polygap::Result<T>, input: impl FnOnce() -> String) -> Result<T, Check> {
    r.map_err(|e| Check::Fail(format!("{e} on {}", input())))
}

macro_rules! attempt {
    ($e:expr, $input:expr) => {
        match fail_on($e, || $input) {
            Ok(v) => v,
            Err(c) => return c,
        }
    };
}

fn gap_or_none(t: &FunctionTable) -> polygap::Result<Option<usize>> {
    match table::arity_gap(t) {
        Ok(r) => Ok(Some(r.gap)),
        Err(Error::GapUndefined(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Every table `k^n -> m`: the classification theorem against the direct gap.
/// Tallies `ess=n gap=p` for functions depending on all variables.
pub fn classification(k: usize, m: usize, n: usize) -> Summary {
    let count = FunctionTable::count(k, m, n).expect("table count fits in u64");
    battery(
        &format!("classification k={k} m={m} n={n}"),
        count,
        |code| {
            let t = FunctionTable::from_code(k, m, n, code);
            let direct = attempt!(gap_or_none(&t), t.to_exchange());
            let reduced = t.drop_inessential();
            let classified = match table::classify_gap(&reduced) {
                Ok(r) => Some(r.gap),
                Err(Error::GapUndefined(_)) => None,
                Err(e) => return Check::Fail(format!("{e} on table {code}")),
            };
            if direct != classified {
                return Check::Fail(format!(
                    "table {code} ({k} {m} {n}): gap {direct:?}, classified {classified:?}\n{}",
                    t.to_exchange()
                ));
            }
            match direct {
                Some(p) if reduced.n() == n => Check::Tally(format!("ess={n} gap={p}")),
                _ => Check::Pass,
            }
        },
    )
}

/// Every function `GF(q)^n -> GF(q)` through its canonical polynomial:
/// (A)/(B) against the oddsupp oracle, minor-based gap against the table gap,
/// and for `n >= 4` the characteristic-2 decomposition against the
/// classification theorem.
pub fn char2_exhaustive(q: u32, n: usize) -> Summary {
    let field = Field::gf(q as u64).expect("supported field");
    let count = FunctionTable::count(q as usize, q as usize, n)
        .filter(|&c| c <= 1 << 20)
        .expect("exhaustive run limited to 2^20 functions");
    battery(&format!("char2 exhaustive q={q} n={n}"), count, |code| {
        let t = FunctionTable::from_code(q as usize, q as usize, n, code);
        let f = attempt!(Polynomial::interpolate(&field, &t), t.to_exchange());
        let ab = attempt!(check_conditions_ab(&f), f.to_string()).satisfied();
        let oracle = table::is_determined_by_oddsupp(&t).is_some();
        if ab != oracle {
            return Check::Fail(format!("{f}: (A)/(B) {ab}, oddsupp oracle {oracle}"));
        }
        let gap = attempt!(gap_or_none(&t), f.to_string());
        let symbolic = minor_gap(&f);
        if symbolic != gap {
            return Check::Fail(format!("{f}: minor gap {symbolic:?}, table gap {gap:?}"));
        }
        if n >= 4 && t.essential_arity() == n {
            let p = match attempt!(decompose_char2(&f), f.to_string()) {
                Outcome::Decomposed(d) => d.p,
                Outcome::GapOne(_) => 1,
            };
            let classified = attempt!(table::classify_gap(&t), f.to_string()).gap;
            if (p, classified) != (gap.unwrap_or(0), p) {
                return Check::Fail(format!(
                    "{f}: decomposition gap {p}, classified {classified}, table {gap:?}"
                ));
            }
            if p == 2 {
                return Check::Tally("gap-2".into());
            }
        }
        if ab {
            Check::Tally("oddsupp-determined".into())
        } else {
            Check::Pass
        }
    })
}

/// Gap from the occurring variables of canonical identification minors.
fn minor_gap(f: &Polynomial) -> Option<usize> {
    let ess = f.occurring_variables();
    let best = ess
        .iter()
        .flat_map(|&i| ess.iter().filter(move |&&j| j != i).map(move |&j| (i, j)))
        .map(|(i, j)| {
            f.identification_minor(i, j)
                .map_or(0, |m| m.occurring_variables().len())
        })
        .max()?;
    Some(ess.len() - best)
}

/// Every polynomial satisfying (A)/(B) over GF(q) in `n` variables must be
/// determined by oddsupp on its table.
pub fn char2_ab_space(q: u32, n: usize) -> Summary {
    let field = Field::gf(q as u64).expect("supported field");
    let orbits = gen::ab_orbits(q, n);
    let count = (q as u64)
        .checked_pow(orbits.len() as u32)
        .filter(|&c| c <= 1 << 20)
        .expect("(A)/(B) space limited to 2^20 polynomials");
    battery(&format!("(A)/(B) space q={q} n={n}"), count, |code| {
        let mut rest = code;
        let coeffs: Vec<_> = orbits
            .iter()
            .map(|_| {
                let c = polygap::Elem::Finite((rest % q as u64) as u32);
                rest /= q as u64;
                c
            })
            .collect();
        let f = gen::ab_polynomial(&field, n, &orbits, &coeffs);
        let ab = attempt!(check_conditions_ab(&f), f.to_string()).satisfied();
        let t = attempt!(f.to_table(), f.to_string());
        if !ab || table::is_determined_by_oddsupp(&t).is_none() {
            return Check::Fail(format!("{f}: (A)/(B) {ab} but not determined by oddsupp"));
        }
        Check::Pass
    })
}

/// Random polynomials violating (A) or (B) must not be determined by
/// oddsupp. Half are unstructured, half are (A)/(B) polynomials with one
/// extra term.
pub fn char2_violators(q: u32, n: usize, count: u64, seed: u64) -> Summary {
    let field = Field::gf(q as u64).expect("supported field");
    let vars: Vec<usize> = (0..n).collect();
    battery(&format!("(A)/(B) violators q={q} n={n}"), count, |i| {
        let mut rng = gen::instance_rng(seed, i);
        let f = loop {
            let f = if i % 2 == 0 {
                gen::polynomial(&mut rng, &field, n, &vars, 6, q - 1)
            } else {
                let base = gen::random_ab_polynomial(&mut rng, &field, n);
                &base + &gen::polynomial(&mut rng, &field, n, &vars, 1, q - 1)
            };
            if !check_conditions_ab(&f)
                .expect("characteristic 2")
                .satisfied()
            {
                break f;
            }
        };
        let t = attempt!(f.to_table(), f.to_string());
        if table::is_determined_by_oddsupp(&t).is_some() {
            return Check::Fail(format!(
                "{f}: violates (A)/(B) but is determined by oddsupp"
            ));
        }
        Check::Pass
    })
}

/// (A)/(B) polynomials over GF(q) in `n > max(q, 3)` variables that depend on
/// all variables have gap 2 and split into monomials on at most `q - 1`
/// variables.
pub fn corollary(q: u32, n: usize, count: u64, seed: u64) -> Summary {
    let field = Field::gf(q as u64).expect("supported field");
    battery(&format!("monomial split q={q} n={n}"), count, |i| {
        let mut rng = gen::instance_rng(seed, i);
        let f = loop {
            let f = gen::random_ab_polynomial(&mut rng, &field, n);
            if f.occurring_variables().len() == n {
                break f;
            }
        };
        let gap = attempt!(analyzer::poly_gap(&f), f.to_string()).gap;
        if gap != 2 {
            return Check::Fail(format!("{f}: gap {gap}, expected 2"));
        }
        let parts = attempt!(split_low_arity_summands(&f), f.to_string());
        let total = parts
            .iter()
            .fold(Polynomial::zero(&field, n), |acc, s| &acc + s);
        if total != f
            || parts
                .iter()
                .any(|s| s.occurring_variables().len() > q as usize - 1)
        {
            return Check::Fail(format!("{f}: bad split"));
        }
        Check::Pass
    })
}

/// `u(x1) + w * Δ3` over Q with `u` nonconstant: gap 2, quasi-arity 1 and
/// unary witness pattern `(1, 0, 0)` with `h = u`.
pub fn ternary_char0(count: u64, seed: u64) -> Summary {
    let q = Field::rational();
    let d3 = delta(&q, 3).expect("n = 3");
    battery("ternary char 0", count, |i| {
        let mut rng = gen::instance_rng(seed, i);
        let (u, f) = loop {
            let u = gen::polynomial_on(&mut rng, &q, 1, &[0], 3);
            let w = gen::polynomial(&mut rng, &q, 3, &[0, 1, 2], 3, 2);
            let f = &u.extend_arity(3).expect("1 <= 3") + &(&w * &d3);
            if f.occurring_variables().len() == 3 {
                break (u, f);
            }
        };
        let t = attempt!(ternary_gap_char0(&f), f.to_string());
        let ok = t.report.gap == 2
            && t.report.quasi_arity == 1
            && t.pattern == Some([1, 0, 0])
            && t.h.as_ref() == Some(&u);
        if ok {
            Check::Pass
        } else {
            Check::Fail(format!(
                "{f}: gap {}, qa {}, pattern {:?}",
                t.report.gap, t.report.quasi_arity, t.pattern
            ))
        }
    })
}

/// `c + w * Δn` over Q (`2 <= n <= max_n`): the restriction to repeated
/// tuples is determined by oddsupp and constant.
pub fn constant_restriction_char0(count: u64, max_n: usize, seed: u64) -> Summary {
    let q = Field::rational();
    battery("oddsupp-determined restriction, char 0", count, |i| {
        let mut rng = gen::instance_rng(seed, i);
        let n = rng.gen_range(2..=max_n);
        let vars: Vec<usize> = (0..n).collect();
        let c = Polynomial::constant(&q, n, gen::element(&mut rng, &q));
        let w = gen::polynomial(&mut rng, &q, n, &vars, 2, 1);
        let f = &c + &(&w * &delta(&q, n).expect("n >= 2"));
        match attempt!(oddsupp_constant_char0(&f), f.to_string()) {
            true => Check::Pass,
            false => Check::Fail(format!(
                "{f}: restriction not recognized as oddsupp-determined"
            )),
        }
    })
}

/// Multiples `w * Δn` and random polynomials over Q (`2 <= n <= max_n`):
/// divisibility agrees with vanishing on repeated tuples, and the quotient
/// multiplies back to `h`.
pub fn delta_lemma(count: u64, max_n: usize, seed: u64) -> Summary {
    let q = Field::rational();
    battery("delta lemma, char 0", count, |i| {
        let mut rng = gen::instance_rng(seed, i);
        let n = rng.gen_range(2..=max_n);
        let vars: Vec<usize> = (0..n).collect();
        let d = delta(&q, n).expect("n >= 2");
        let w = gen::polynomial(&mut rng, &q, n, &vars, 3, 2);
        let h = match i % 3 {
            0 => &w * &d,
            1 => w,
            _ => &(&w * &d) + &gen::polynomial(&mut rng, &q, n, &vars, 1, 2),
        };
        let dm = attempt!(is_delta_multiple(&h), h.to_string());
        let vanishes = attempt!(vanishes_on_repeats(&h), h.to_string());
        if dm.is_multiple != vanishes || (i % 3 == 0 && !dm.is_multiple) {
            return Check::Fail(format!(
                "{h}: divisible {}, vanishes {vanishes}",
                dm.is_multiple
            ));
        }
        match dm.quotient {
            Some(w) if &w * &d != h => {
                Check::Fail(format!("{h}: quotient {w} does not multiply back"))
            }
            Some(_) => Check::Tally("multiple".into()),
            None => Check::Tally("non-multiple".into()),
        }
    })
}

/// The two dimension counts agree, reach `2^{q-1}` for `n >= q`, and match
/// independent enumerations of admissible oddsupp sets and (A)/(B) orbits.
pub fn dimension_counts(qs: &[u32], max_n: usize) -> Summary {
    let cases: Vec<(u32, usize)> = qs
        .iter()
        .flat_map(|&q| (1..=max_n).map(move |n| (q, n)))
        .collect();
    battery("oddsupp dimension identity", cases.len() as u64, |i| {
        let (q, n) = cases[i as usize];
        let (u, v) = attempt!(
            oddsupp_dimension_counts(q as u64, n as u64),
            format!("q={q} n={n}")
        );
        let sets = admissible_oddsupp_sets(q as usize, n).len() as u128;
        let orbits = gen::ab_orbits(q, n).len() as u128;
        let plateau = n < q as usize || u == 1u128 << (q - 1);
        if u != v || u != sets || v != orbits || !plateau {
            return Check::Fail(format!(
                "q={q} n={n}: counts ({u}, {v}), enumerated ({sets}, {orbits})"
            ));
        }
        Check::Pass
    })
}

/// The odd-characteristic product polynomial for each `(q, n)`.
pub fn counterexamples(cases: &[(u64, usize)]) -> Summary {
    battery(
        "odd characteristic counterexample",
        cases.len() as u64,
        |i| {
            let (q, n) = cases[i as usize];
            let r = attempt!(check_odd_counterexample(q, n), format!("q={q} n={n}"));
            if r.holds() {
                Check::Pass
            } else {
                Check::Fail(format!(
                    "q={q} n={n}: gap {}, minor {} vs {}, full coefficient {}",
                    r.gap, r.minor, r.expected_minor, r.full_coefficient
                ))
            }
        },
    )
}

/// `f = g + w * Δn` with `g` on exactly `n - p` variables, alternating over
/// GF(5) and Q, `n` in {4, 5} and `p` in `3..=n`: the decomposition returns
/// `g` and `h` exactly and the gap is `p`.
pub fn decomposition_round_trip(count: u64, seed: u64) -> Summary {
    let fields = [Field::gf(5).expect("GF(5)"), Field::rational()];
    battery("gap >= 3 decomposition round trip", count, |i| {
        let field = &fields[(i % 2) as usize];
        let mut rng = gen::instance_rng(seed, i);
        let n = rng.gen_range(4..=5);
        let p = rng.gen_range(3..=n);
        let vars: Vec<usize> = (0..n).collect();
        let g_vars = gen::subset(&mut rng, n, n - p);
        let d = delta(field, n).expect("n >= 2");
        let (g, w, h) = loop {
            let g = gen::polynomial_on(&mut rng, field, n, &g_vars, 2);
            let w = gen::polynomial(&mut rng, field, n, &vars, 2, 1);
            let h = &w * &d;
            if !h.is_zero() && (&g + &h).occurring_variables().len() == n {
                break (g, w, h);
            }
        };
        let f = &g + &h;
        let dec = if field.is_finite() {
            attempt!(decompose_gap_ge3(&f), f.to_string())
        } else {
            match attempt!(decompose_char0(&f), f.to_string()) {
                Outcome::Decomposed(dec) => dec,
                Outcome::GapOne(_) => return Check::Fail(format!("{f}: reported gap 1")),
            }
        };
        let gap = if field.is_finite() {
            attempt!(
                f.to_table().and_then(|t| table::arity_gap(&t)),
                f.to_string()
            )
            .gap
        } else {
            dec.p
        };
        let quotient_ok = field.is_finite() || dec.quotient.as_ref() == Some(&w);
        if dec.g != g || dec.h != h || dec.p != p || gap != p || !quotient_ok {
            return Check::Fail(format!(
                "{f}: expected g = {g}, p = {p}; got g = {}, p = {}, table gap {gap}",
                dec.g, dec.p
            ));
        }
        Check::Tally(format!("{} n={n} p={p}", field))
    })
}

pub const SUITES: &[&str] = &[
    "general-classification",
    "char2",
    "char0",
    "delta-lemma",
    "oddsupp-dim",
    "counterexample",
    "decompose",
];

/// Bounds and seed for a suite run; unset bounds take the suite defaults.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub q: Option<u32>,
    pub count: Option<u64>,
    pub seed: u64,
}

/// Runs a named suite, one summary per battery.
pub fn run_suite(name: &str, p: &Params) -> polygap::Result<Vec<Summary>> {
    let bad = |msg: String| Err(Error::Precondition(msg));
    Ok(match name {
        "general-classification" => match (p.k, p.m, p.n) {
            (None, None, None) => [(2, 2, 2), (2, 2, 3), (2, 2, 4), (3, 3, 2)]
                .iter()
                .map(|&(k, m, n)| classification(k, m, n))
                .collect(),
            (k, m, n) => {
                let (k, m, n) = (k.unwrap_or(2), m.unwrap_or(2), n.unwrap_or(3));
                if FunctionTable::count(k, m, n).is_none_or(|c| c > 1 << 24) {
                    return bad(format!("{m}^({k}^{n}) functions is too many"));
                }
                vec![classification(k, m, n)]
            }
        },
        "char2" => {
            let q = p.q.unwrap_or(2);
            let n = p.n.unwrap_or(4);
            if !q.is_power_of_two() || !(2..=64).contains(&q) {
                return bad(format!("q = {q} is not a power of 2 up to 64"));
            }
            if FunctionTable::count(q as usize, q as usize, n).is_some_and(|c| c <= 1 << 20) {
                (1..=n).map(|a| char2_exhaustive(q, a)).collect()
            } else if n > (q as usize).max(3) {
                vec![corollary(q, n, p.count.unwrap_or(500), p.seed)]
            } else {
                if (q as u64)
                    .checked_pow(gen::ab_orbits(q, n).len() as u32)
                    .is_none_or(|c| c > 1 << 20)
                {
                    return bad(format!(
                        "(A)/(B) space over GF({q}) in {n} variables is too large"
                    ));
                }
                vec![
                    char2_ab_space(q, n),
                    char2_violators(q, n, p.count.unwrap_or(10_000), p.seed),
                ]
            }
        }
        "char0" => vec![
            ternary_char0(p.count.unwrap_or(10_000), p.seed),
            constant_restriction_char0(
                p.count.map_or(1_000, |c| c / 10 + 1),
                p.n.unwrap_or(5),
                p.seed,
            ),
        ],
        "delta-lemma" => vec![delta_lemma(
            p.count.unwrap_or(1_000),
            p.n.unwrap_or(5),
            p.seed,
        )],
        "oddsupp-dim" => {
            let qs: Vec<u32> = p.q.map_or(vec![2, 4, 8, 16], |q| vec![q]);
            if qs
                .iter()
                .any(|&q| !q.is_power_of_two() || !(2..=16).contains(&q))
            {
                return bad("oddsupp-dim needs q in {2, 4, 8, 16}".into());
            }
            vec![dimension_counts(&qs, p.n.unwrap_or(12))]
        }
        "counterexample" => {
            let cases: Vec<(u64, usize)> = match (p.q, p.n) {
                (None, None) => vec![(3, 2), (3, 3), (5, 2), (5, 3)],
                (q, n) => vec![(q.unwrap_or(3) as u64, n.unwrap_or(3))],
            };
            if cases
                .iter()
                .any(|&(q, n)| q % 2 == 0 || n < 2 || (q as f64).powi(n as i32) > 1e6)
            {
                return bad("counterexample needs odd q, n >= 2 and q^n <= 10^6".into());
            }
            vec![counterexamples(&cases)]
        }
        "decompose" => vec![decomposition_round_trip(p.count.unwrap_or(500), p.seed)],
        other => {
            return bad(format!(
                "unknown suite '{other}' (one of {})",
                SUITES.join(", ")
            ))
        }
    })
}
