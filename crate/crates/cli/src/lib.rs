//! Command-line front-end for polygap: expression parsing, verb dispatch,
//! report rendering and the verification suites.

pub mod command;
pub mod gen;
pub mod parse;
pub mod report;
pub mod verify;

use std::io::Read;
use std::time::Instant;

use polygap::analyzer::{
    check_conditions_ab, check_odd_counterexample, decompose_char0, decompose_char2,
    decompose_gap_ge3, oddsupp_constant_char0, poly_gap, repeats_determined_by_oddsupp,
    symbolic_quasi_arity, ternary_gap_char0, Outcome,
};
use polygap::table::{self, FunctionTable, GapReport};
use polygap::{Error, Field, Polynomial};

pub use command::{Bounds, Cli, Input, Suite, Verb};
pub use report::{Format, Report};

/// Exit code, report text and diagnostics of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Bad input or an unmet precondition (exit 2).
    Input(String),
    /// A checked result did not hold (exit 1); the report is still printed.
    Check(Option<Report>, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_verification() {
            Failure::Check(None, e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<parse::ParseError> for Failure {
    fn from(e: parse::ParseError) -> Self {
        Failure::Input(format!("syntax error: {e}"))
    }
}

type Outcomes = std::result::Result<Report, Failure>;

/// Tables above this many entries are not built for optional cross-checks.
const TABLE_LIMIT: u64 = 1 << 20;

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> RunOutput {
    let start = Instant::now();
    let result = match &cli.verb {
        Verb::Gap(input) => load(input, stdin).and_then(|l| gap(&l)),
        Verb::Minors(input) => load(input, stdin).and_then(|l| minors(&l)),
        Verb::Decompose(input) => load(input, stdin).and_then(|l| decompose(&l.polynomial()?)),
        Verb::Oddsupp(input) => load(input, stdin).and_then(|l| oddsupp(&l)),
        Verb::Interpolate(input) => load(input, stdin).and_then(|l| interpolate(&l)),
        Verb::Verify(suite) => verify(suite, cli.seed),
        Verb::Counterexample(bounds) => counterexample(bounds),
    };
    let render = |r: &Report| r.render(cli.format, start.elapsed());
    match result {
        Ok(r) => RunOutput {
            code: 0,
            stdout: render(&r),
            stderr: String::new(),
        },
        Err(Failure::Input(msg)) => RunOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Check(r, msg)) => RunOutput {
            code: 1,
            stdout: r.as_ref().map(render).unwrap_or_default(),
            stderr: format!("verification failure: {msg}\n"),
        },
    }
}

enum Loaded {
    Poly(Polynomial),
    Table(FunctionTable, Option<Field>),
}

impl Loaded {
    fn polynomial(&self) -> std::result::Result<Polynomial, Failure> {
        match self {
            Loaded::Poly(f) => Ok(f.clone()),
            Loaded::Table(t, field) => {
                let field = match field {
                    Some(f) => f.clone(),
                    None => Field::gf(t.k() as u64)?,
                };
                Ok(Polynomial::interpolate(&field, t)?)
            }
        }
    }
}

fn load(input: &Input, stdin: &mut dyn Read) -> std::result::Result<Loaded, Failure> {
    let field = input.field.as_deref().map(parse::parse_field).transpose()?;
    if let Some(path) = &input.table {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        return Ok(Loaded::Table(FunctionTable::from_exchange(&text)?, field));
    }
    let text = match &input.expr {
        Some(e) => e.clone(),
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    let field = field.unwrap_or_else(Field::rational);
    Ok(Loaded::Poly(parse::parse_polynomial(text.trim(), &field)?))
}

fn vars(v: &[usize]) -> String {
    v.iter()
        .map(|i| format!("x{}", i + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

fn pair(i: usize, j: usize) -> String {
    format!("{}<-{}", i + 1, j + 1)
}

fn table_of(f: &Polynomial) -> Option<FunctionTable> {
    let q = f.field().order()? as u64;
    q.checked_pow(f.arity() as u32)
        .filter(|&s| s <= TABLE_LIMIT)
        .and_then(|_| f.to_table().ok())
}

fn push_gap(r: &mut Report, g: &GapReport) {
    r.push("essential", vars(&g.essential));
    r.push("ess", g.essential.len());
    r.push("gap", g.gap);
    r.push("case", g.case);
    r.push("quasi_arity", g.quasi_arity);
    r.push("repeats_oddsupp_determined", g.repeats_oddsupp_determined);
    if let Some((i, j)) = g.witness {
        r.push("witness", pair(i, j));
    }
    let list: Vec<String> = g
        .minor_arities
        .iter()
        .map(|m| m.essential_arity.to_string())
        .collect();
    r.push("minor_arities", list.join(","));
    for m in &g.minor_arities {
        r.push(format!("minor.{}", pair(m.i, m.j)), m.essential_arity);
    }
}

/// Direct gap against the classification theorem on the same table.
fn classified_gap(
    r: &mut Report,
    t: &FunctionTable,
    direct: &GapReport,
) -> std::result::Result<(), Failure> {
    let c = table::classify_gap(&t.drop_inessential())?;
    r.push("classified_gap", c.gap);
    if c.gap != direct.gap {
        return Err(Failure::Check(
            Some(r.clone()),
            format!(
                "classification predicts gap {}, minors give {}",
                c.gap, direct.gap
            ),
        ));
    }
    Ok(())
}

fn gap(input: &Loaded) -> Outcomes {
    let mut r = Report::new("gap");
    match input {
        Loaded::Table(t, _) => {
            r.push("domain", format!("{} {} {}", t.k(), t.m(), t.n()));
            r.push("arity", t.n());
            let g = table::arity_gap(t)?;
            push_gap(&mut r, &g);
            classified_gap(&mut r, t, &g)?;
        }
        Loaded::Poly(f) => {
            r.push("field", f.field());
            r.push("arity", f.arity());
            r.push("polynomial", f);
            if f.field().is_finite() {
                let t = f.to_table()?;
                let g = table::arity_gap(&t)?;
                push_gap(&mut r, &g);
                classified_gap(&mut r, &t, &g)?;
            } else {
                let mut g = poly_gap(f)?;
                g.quasi_arity = symbolic_quasi_arity(f)?;
                g.repeats_oddsupp_determined = repeats_determined_by_oddsupp(f)?;
                push_gap(&mut r, &g);
                if f.arity() == 3 && g.essential.len() == 3 {
                    let t = ternary_gap_char0(f)?;
                    if let (Some(p), Some(h)) = (t.pattern, t.h) {
                        r.push("unary_pattern", format!("{}{}{}", p[0], p[1], p[2]));
                        r.push("unary_h", h);
                    }
                }
            }
        }
    }
    Ok(r)
}

fn minors(input: &Loaded) -> Outcomes {
    let mut r = Report::new("minors");
    let n = match input {
        Loaded::Poly(f) => {
            r.push("field", f.field());
            r.push("polynomial", f);
            f.arity()
        }
        Loaded::Table(t, _) => {
            r.push("domain", format!("{} {} {}", t.k(), t.m(), t.n()));
            t.n()
        }
    };
    r.push("arity", n);
    for i in 0..n {
        for j in i + 1..n {
            for (a, b) in [(i, j), (j, i)] {
                let key = pair(a, b);
                match input {
                    Loaded::Poly(f) => {
                        let m = f.identification_minor(a, b)?;
                        r.push(format!("ess.{key}"), m.occurring_variables().len());
                        r.push(format!("minor.{key}"), m);
                    }
                    Loaded::Table(t, _) => {
                        r.push(
                            format!("ess.{key}"),
                            t.identification_minor(a, b)?.essential_arity(),
                        );
                    }
                }
            }
        }
    }
    Ok(r)
}

fn decompose(f: &Polynomial) -> Outcomes {
    let field = f.field();
    let outcome = if !field.is_finite() {
        decompose_char0(f)?
    } else if field.characteristic() == 2 {
        decompose_char2(f)?
    } else {
        Outcome::Decomposed(decompose_gap_ge3(f)?)
    };
    let mut r = Report::new("decompose");
    match outcome {
        Outcome::Decomposed(d) => {
            d.verify(f)?;
            for (k, v) in d.record() {
                r.push(k, v);
            }
        }
        Outcome::GapOne(g) => {
            r.push("field", field);
            r.push("arity", f.arity());
            r.push("gap", g.gap);
            r.push("kind", "none");
        }
    }
    Ok(r)
}

fn oddsupp(input: &Loaded) -> Outcomes {
    let mut r = Report::new("oddsupp");
    let f = match input {
        Loaded::Table(t, _) => {
            r.push("domain", format!("{} {} {}", t.k(), t.m(), t.n()));
            r.push("determined", table::is_determined_by_oddsupp(t).is_some());
            r.push(
                "repeats_determined",
                table::is_determined_by_oddsupp(&t.restrict_to_repeats()).is_some(),
            );
            return Ok(r);
        }
        Loaded::Poly(f) => f.canonicalize(),
    };
    r.push("field", f.field());
    r.push("polynomial", &f);
    if !f.field().is_finite() {
        let determined = repeats_determined_by_oddsupp(&f)?;
        r.push("repeats_determined", determined);
        if determined {
            r.push("repeats_constant", oddsupp_constant_char0(&f)?);
        }
        return Ok(r);
    }
    let table = table_of(&f);
    let oracle = table
        .as_ref()
        .map(|t| table::is_determined_by_oddsupp(t).is_some());
    if f.field().characteristic() == 2 {
        let c = check_conditions_ab(&f)?;
        r.push("condition_a", c.satisfies_a);
        if let Some(w) = &c.a_witness {
            let (i, j) = w.swap;
            r.push(
                "condition_a_witness",
                format!("{:?} x{}<>x{}", w.exponents, i + 1, j + 1),
            );
        }
        r.push("condition_b", c.satisfies_b);
        if let Some((e, i, j)) = &c.b_witness {
            r.push(
                "condition_b_witness",
                format!("{e:?} x{}=x{}", i + 1, j + 1),
            );
        }
        r.push("determined", c.satisfied());
        if let Some(o) = oracle {
            r.push("table_oracle", o);
            if o != c.satisfied() {
                return Err(Failure::Check(
                    Some(r),
                    format!(
                        "conditions (A)/(B) give {}, table oracle {o}",
                        c.satisfied()
                    ),
                ));
            }
        }
    } else if let Some(o) = oracle {
        r.push("determined", o);
    } else {
        return Err(Failure::Input(
            "table too large for the oddsupp oracle".into(),
        ));
    }
    r.push("repeats_determined", repeats_determined_by_oddsupp(&f)?);
    Ok(r)
}

fn interpolate(input: &Loaded) -> Outcomes {
    let f = input.polynomial()?;
    let mut r = Report::new("interpolate");
    r.push("field", f.field());
    r.push("arity", f.arity());
    r.push("terms", f.num_terms());
    r.push("polynomial", &f);
    Ok(r)
}

fn counterexample(b: &Bounds) -> Outcomes {
    let (q, n) = (b.q.unwrap_or(3) as u64, b.n.unwrap_or(3));
    if q.checked_pow(n as u32).is_none_or(|s| s > TABLE_LIMIT) {
        return Err(Failure::Input(format!(
            "q^n = {q}^{n} is too large for the table oracle"
        )));
    }
    let c = check_odd_counterexample(q, n)?;
    let mut r = Report::new("counterexample");
    r.push("q", q);
    r.push("n", n);
    r.push("polynomial", &c.f);
    r.push("gap", c.gap);
    r.push("minor.2<-1", &c.minor);
    r.push("expected_minor", &c.expected_minor);
    r.push("full_monomial_coefficient", &c.full_coefficient);
    r.push("holds", c.holds());
    if c.holds() {
        Ok(r)
    } else {
        Err(Failure::Check(
            Some(r),
            format!("counterexample does not hold for q = {q}, n = {n}"),
        ))
    }
}

fn verify(s: &Suite, seed: u64) -> Outcomes {
    let params = verify::Params {
        k: s.bounds.k,
        m: s.bounds.m,
        n: s.bounds.n,
        q: s.bounds.q,
        count: s.count,
        seed,
    };
    let summaries = verify::run_suite(&s.suite, &params)?;
    let mut r = Report::new("verify");
    r.push("suite", &s.suite);
    r.push("seed", seed);
    let mut failures = Vec::new();
    for (b, sum) in summaries.iter().enumerate() {
        let key = format!("battery.{}", b + 1);
        r.push(&key, &sum.name);
        r.push(format!("{key}.checked"), sum.checked);
        r.push(format!("{key}.mismatches"), sum.mismatches);
        for (label, count) in &sum.tallies {
            r.push(format!("{key}.count.{label}"), count);
        }
        if let Some((i, msg)) = &sum.failure {
            failures.push(format!("{} (instance {i}): {msg}", sum.name));
        }
    }
    let total: u64 = summaries.iter().map(|s| s.mismatches).sum();
    r.push("mismatches", total);
    if failures.is_empty() {
        Ok(r)
    } else {
        Err(Failure::Check(Some(r), failures.join("\n")))
    }
}
