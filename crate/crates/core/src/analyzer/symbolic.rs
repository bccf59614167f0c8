use std::collections::HashMap;

use super::delta::vanishes_on_repeats;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::table::{self, GapCase, GapReport, MinorArity};

/// Arity gap of the function induced by `f`.
///
/// Over GF(q) the value table is handed to [`table::arity_gap`]. Over Q the
/// essential variables are the occurring ones, and minors, quasi-arity and
/// oddsupp determination are all computed symbolically.
pub fn poly_gap(f: &Polynomial) -> Result<GapReport> {
    if f.field().is_finite() {
        return table::arity_gap(&f.to_table()?);
    }
    let essential = f.occurring_variables();
    let ess = essential.len();
    if ess < 2 {
        return Err(Error::GapUndefined(ess));
    }
    let mut minor_arities = Vec::with_capacity(ess * (ess - 1));
    for (a, &i) in essential.iter().enumerate() {
        for &j in &essential[a + 1..] {
            for (x, y) in [(i, j), (j, i)] {
                minor_arities.push(MinorArity {
                    i: x,
                    j: y,
                    essential_arity: f.identification_minor(x, y)?.occurring_variables().len(),
                });
            }
        }
    }
    let best = minor_arities
        .iter()
        .map(|m| m.essential_arity)
        .max()
        .unwrap_or(0);
    let gap = ess - best;
    let witness = minor_arities
        .iter()
        .filter(|m| m.essential_arity == best)
        .map(|m| (m.i, m.j))
        .min();
    Ok(GapReport {
        arity: f.arity(),
        essential,
        quasi_arity: symbolic_quasi_arity(f)?,
        gap,
        case: GapCase::from_gap(gap, ess),
        witness,
        minor_arities,
        repeats_oddsupp_determined: repeats_determined_by_oddsupp(f)?,
        ternary: None,
    })
}

/// Quasi-arity of `f`: the essential arity of its restriction to tuples with
/// a repeated entry (for `n = 2`: whether `f(x, x)` is nonconstant).
///
/// Over Q the repeated tuples form the union of the hyperplanes
/// `x_i = x_j`, on which `f` is the minor `f_{i<-j}`. A variable `x_k` is
/// inessential on that union exactly when it occurs in no `f_{i<-j}` with
/// `k` outside `{i, j}`, and all the minors `f_{k<-l}` coincide.
pub fn symbolic_quasi_arity(f: &Polynomial) -> Result<usize> {
    if f.field().is_finite() {
        return Ok(table::quasi_arity(&f.to_table()?));
    }
    let n = f.arity();
    match n {
        0 => return Ok(0),
        1 => return Ok(f.occurring_variables().len()),
        2 => return Ok(usize::from(!f.identification_minor(1, 0)?.is_constant())),
        _ => {}
    }
    let mut minors = HashMap::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            minors.insert((i, j), f.identification_minor(i, j)?);
        }
    }
    let essential = (0..n).filter(|&k| {
        let moves = minors
            .iter()
            .any(|(&(i, j), m)| i != k && j != k && m.occurring_variables().contains(&k));
        let mut onto = (0..n).filter(|&l| l != k).map(|l| &minors[&(k, l)]);
        let first = onto.next();
        moves || onto.any(|m| Some(m) != first)
    });
    Ok(essential.count())
}

/// Whether the restriction of `f` to tuples with a repeated entry is
/// determined by oddsupp.
///
/// Over Q: the restriction must be invariant under adjacent transpositions,
/// and `f(x_1, x_1, x_3, ..., x_n)` must not depend on `x_1`.
pub fn repeats_determined_by_oddsupp(f: &Polynomial) -> Result<bool> {
    if f.field().is_finite() {
        let t = f.to_table()?;
        return Ok(table::is_determined_by_oddsupp(&t.restrict_to_repeats()).is_some());
    }
    let n = f.arity();
    if n < 2 {
        return Ok(true);
    }
    if f.identification_minor(1, 0)?
        .occurring_variables()
        .contains(&0)
    {
        return Ok(false);
    }
    for a in 0..n - 1 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(a, a + 1);
        let moved = f.simple_minor(&swap, n)?;
        if !vanishes_on_repeats(&(&moved - f))? {
            return Ok(false);
        }
    }
    Ok(true)
}
