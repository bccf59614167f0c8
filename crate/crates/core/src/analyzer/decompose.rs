use super::char2::{check_conditions_ab, ConditionReport};
use super::delta::{is_delta_multiple, vanishes_on_repeats};
use super::symbolic::poly_gap;
use super::{require_all_occur, Decomposition, DecompositionKind, Outcome};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::table::{self, oddsupp_mask, FunctionTable};

/// An identification minor `g = f_{i<-j}` with `h = f - g` nonzero and
/// vanishing on repeated tuples.
struct Candidate {
    pair: (usize, usize),
    g: Polynomial,
    h: Polynomial,
}

/// All candidates, pairs in lexicographic order.
fn candidates(f: &Polynomial) -> Result<Vec<Candidate>> {
    let n = f.arity();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let g = f.identification_minor(i, j)?;
            let h = f - &g;
            if !h.is_zero() && vanishes_on_repeats(&h)? {
                out.push(Candidate { pair: (i, j), g, h });
            }
        }
    }
    Ok(out)
}

/// The low-arity decomposition with `n - p` variables in `g`, checking that
/// every qualifying pair gives the same `g`. Candidates that would imply a
/// gap of at least 2 other than `p` are rejected; for `p < 2` nothing is
/// returned.
fn low_arity(f: &Polynomial, p: usize) -> Result<Option<Decomposition>> {
    let n = f.arity();
    let found = candidates(f)?;
    if let Some(c) = found.iter().find(|c| {
        let vars = c.g.occurring_variables().len();
        vars + 2 <= n && vars + p != n
    }) {
        return Err(Error::Verification(format!(
            "f_{{{}<-{}}} = {} splits off a multiple of delta but the gap is {p}",
            c.pair.0 + 1,
            c.pair.1 + 1,
            c.g
        )));
    }
    if p < 2 {
        return Ok(None);
    }
    let mut matching = found
        .into_iter()
        .filter(|c| c.g.occurring_variables().len() + p == n);
    let Some(first) = matching.next() else {
        return Ok(None);
    };
    let mut pairs = vec![first.pair];
    for c in matching {
        if c.g != first.g {
            return Err(Error::Verification(format!(
                "two different summands: {} from {:?} and {} from {:?}",
                first.g, first.pair, c.g, c.pair
            )));
        }
        pairs.push(c.pair);
    }
    let quotient = if f.field().is_finite() {
        None
    } else {
        let dm = is_delta_multiple(&first.h)?;
        if !dm.is_multiple {
            return Err(Error::Verification(format!(
                "h = {} vanishes on repeated tuples but is not divisible by delta",
                first.h
            )));
        }
        dm.quotient
    };
    Ok(Some(Decomposition {
        g: first.g,
        h: first.h,
        p,
        kind: DecompositionKind::LowArity,
        quotient,
        pairs,
        oddsupp_also_applies: false,
        conditions: None,
    }))
}

/// Decomposition of a polynomial with gap `p >= 3` and arity at least 4 that
/// depends on all variables: `g` on exactly `n - p` variables plus a nonzero
/// multiple `h` of `Δ`. Works over any supported field.
pub fn decompose_gap_ge3(f: &Polynomial) -> Result<Decomposition> {
    require_all_occur(f, 4)?;
    let gap = poly_gap(f)?.gap;
    if gap < 3 {
        return Err(Error::Precondition(format!("gap {gap} is below 3")));
    }
    let mut d = low_arity(f, gap)?
        .ok_or_else(|| Error::Verification(format!("gap {gap} but no decomposition found")))?;
    if f.field().characteristic() == 2 {
        d.oddsupp_also_applies = oddsupp_case(f, &f.to_table()?)?.is_some();
    }
    d.verify(f)?;
    Ok(d)
}

/// Decomposition over Q for any arity `n >= 2`, or gap 1.
pub fn decompose_char0(f: &Polynomial) -> Result<Outcome> {
    match f.field().characteristic() {
        0 => {}
        found => return Err(Error::WrongCharacteristic { expected: 0, found }),
    }
    require_all_occur(f, 2)?;
    let report = poly_gap(f)?;
    let gap = report.gap;
    match low_arity(f, gap)? {
        Some(d) => {
            d.verify(f)?;
            Ok(Outcome::Decomposed(d))
        }
        None if gap == 1 => Ok(Outcome::GapOne(report)),
        None => Err(Error::Verification(format!(
            "gap {gap} but no decomposition found"
        ))),
    }
}

/// `g` determined by oddsupp: the oddsupp profile of `f` on repeated tuples,
/// extended by 0 to tuples with distinct entries, so that `g` vanishes off
/// the repeated tuples. Present when the profile exists and `g` is not
/// constant.
fn oddsupp_case(
    f: &Polynomial,
    t: &FunctionTable,
) -> Result<Option<(Polynomial, Polynomial, ConditionReport)>> {
    let Some(profile) = table::is_determined_by_oddsupp(&t.restrict_to_repeats()) else {
        return Ok(None);
    };
    let gt = FunctionTable::from_fn(t.k(), t.m(), t.n(), |a| {
        profile.get_mask(oddsupp_mask(a)).unwrap_or(0)
    });
    if gt.is_constant() {
        return Ok(None);
    }
    let g = Polynomial::interpolate(f.field(), &gt)?;
    let h = f - &g;
    let conditions = check_conditions_ab(&g)?;
    if !conditions.satisfied() {
        return Err(Error::Verification(format!(
            "oddsupp-determined g = {g} violates conditions (A)/(B)"
        )));
    }
    if !vanishes_on_repeats(&h)? {
        return Err(Error::Verification(format!(
            "h = {h} does not vanish on repeated tuples"
        )));
    }
    Ok(Some((g, h, conditions)))
}

/// Decomposition over GF(2^k) for arity `n >= 4`: the low-arity case when it
/// applies, otherwise the oddsupp case, otherwise gap 1.
pub fn decompose_char2(f: &Polynomial) -> Result<Outcome> {
    match f.field().characteristic() {
        2 => {}
        found => return Err(Error::WrongCharacteristic { expected: 2, found }),
    }
    require_all_occur(f, 4)?;
    let t = f.to_table()?;
    let report = table::arity_gap(&t)?;
    let gap = report.gap;
    let oddsupp = oddsupp_case(f, &t)?;
    if let Some(mut d) = low_arity(f, gap)? {
        d.oddsupp_also_applies = oddsupp.is_some();
        d.verify(f)?;
        return Ok(Outcome::Decomposed(d));
    }
    match oddsupp {
        Some((g, h, conditions)) if gap == 2 => {
            let d = Decomposition {
                g,
                h,
                p: 2,
                kind: DecompositionKind::OddSuppChar2,
                quotient: None,
                pairs: Vec::new(),
                oddsupp_also_applies: true,
                conditions: Some(conditions),
            };
            d.verify(f)?;
            Ok(Outcome::Decomposed(d))
        }
        Some((g, ..)) => Err(Error::Verification(format!(
            "oddsupp summand g = {g} exists but the gap is {gap}"
        ))),
        None if gap == 1 => Ok(Outcome::GapOne(report)),
        None => Err(Error::Verification(format!(
            "gap {gap} but no decomposition found"
        ))),
    }
}
