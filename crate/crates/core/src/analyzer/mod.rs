//! Polynomial-level arity gap and the decompositions `f = g + h`, where `h`
//! vanishes on tuples with a repeated entry (a multiple of `Δ`) and `g` either
//! has few variables or, in characteristic 2, is determined by oddsupp.
//!
//! Over GF(q) gap computations go through the value table; over Q they are
//! symbolic, using the fact that a variable of a polynomial over an infinite
//! field is essential exactly when it occurs.

mod char0;
mod char2;
mod decompose;
mod delta;
mod odd;
mod symbolic;

pub use char0::{oddsupp_constant_char0, ternary_gap_char0, TernaryGap};
pub use char2::{
    check_conditions_ab, is_determined_by_oddsupp_poly, oddsupp_dimension_counts,
    split_low_arity_summands, ConditionReport, PermutationWitness,
};
pub use decompose::{decompose_char0, decompose_char2, decompose_gap_ge3};
pub use delta::{is_delta_multiple, vanishes_on_repeats, DeltaMultiple};
pub use odd::{check_odd_counterexample, odd_char_counterexample, CounterexampleReport};
pub use symbolic::{poly_gap, repeats_determined_by_oddsupp, symbolic_quasi_arity};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::table::GapReport;

/// Which kind of summand `g` a decomposition has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecompositionKind {
    /// `g` has exactly `n - p` variables and `h` is nonzero.
    LowArity,
    /// Characteristic 2: `g` is nonconstant and determined by oddsupp.
    OddSuppChar2,
}

impl DecompositionKind {
    pub fn name(self) -> &'static str {
        match self {
            DecompositionKind::LowArity => "low-arity",
            DecompositionKind::OddSuppChar2 => "oddsupp-char2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub g: Polynomial,
    pub h: Polynomial,
    /// The arity gap of `g + h`.
    pub p: usize,
    pub kind: DecompositionKind,
    /// Over Q, the polynomial `w` with `h = w * Δ`.
    pub quotient: Option<Polynomial>,
    /// Identification pairs `(i, j)` whose minor produced `g`, in search order.
    pub pairs: Vec<(usize, usize)>,
    /// Low-arity decompositions over GF(2^k): whether the oddsupp construction
    /// would also have applied.
    pub oddsupp_also_applies: bool,
    /// Set for oddsupp decompositions.
    pub conditions: Option<ConditionReport>,
}

impl Decomposition {
    /// Checks `g + h = f` and the kind-specific certificates.
    pub fn verify(&self, f: &Polynomial) -> Result<()> {
        let fail = |msg: String| Err(Error::Verification(msg));
        if &(&self.g + &self.h) != f {
            return fail("g + h differs from f".into());
        }
        let n = f.arity();
        match self.kind {
            DecompositionKind::LowArity => {
                let vars = self.g.occurring_variables().len();
                if vars + self.p != n {
                    return fail(format!("g has {vars} variables, expected {}", n - self.p));
                }
                if self.h.is_zero() {
                    return fail("h is zero".into());
                }
            }
            DecompositionKind::OddSuppChar2 => {
                let ok = self.conditions.as_ref().is_some_and(|c| c.satisfied());
                if !ok || !check_conditions_ab(&self.g)?.satisfied() {
                    return fail("g violates the oddsupp conditions".into());
                }
            }
        }
        if !vanishes_on_repeats(&self.h)? {
            return fail("h does not vanish on repeated tuples".into());
        }
        if let Some(w) = &self.quotient {
            if (w * &crate::poly::delta(f.field(), n)?) != self.h {
                return fail("quotient times delta differs from h".into());
            }
        }
        Ok(())
    }

    /// Key/value record with a fixed key order.
    pub fn record(&self) -> Vec<(&'static str, String)> {
        let mut out = vec![
            ("field", self.g.field().to_string()),
            ("arity", self.g.arity().to_string()),
            ("gap", self.p.to_string()),
            ("kind", self.kind.name().to_string()),
            ("g", self.g.to_string()),
            ("h", self.h.to_string()),
            ("g_variables", join_vars(&self.g.occurring_variables())),
            (
                "pairs",
                self.pairs
                    .iter()
                    .map(|(i, j)| format!("{}<-{}", i + 1, j + 1))
                    .collect::<Vec<_>>()
                    .join(" "),
            ),
        ];
        if let Some(w) = &self.quotient {
            out.push(("delta_quotient", w.to_string()));
        }
        if let Some(c) = &self.conditions {
            out.push(("condition_a", c.satisfies_a.to_string()));
            out.push(("condition_b", c.satisfies_b.to_string()));
        }
        if self.kind == DecompositionKind::LowArity && self.g.field().characteristic() == 2 {
            out.push((
                "oddsupp_also_applies",
                self.oddsupp_also_applies.to_string(),
            ));
        }
        out
    }
}

/// Result of a decomposition attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Decomposed(Decomposition),
    /// No decomposition exists; the gap is 1.
    GapOne(GapReport),
}

fn join_vars(vars: &[usize]) -> String {
    if vars.is_empty() {
        return "-".into();
    }
    vars.iter()
        .map(|v| format!("x{}", v + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Requires every variable of `f` to occur, and at least `min` of them.
fn require_all_occur(f: &Polynomial, min: usize) -> Result<()> {
    let n = f.arity();
    if n < min {
        return Err(Error::Precondition(format!("arity {n} is below {min}")));
    }
    let occurring = f.occurring_variables().len();
    if occurring != n {
        return Err(Error::Precondition(format!(
            "only {occurring} of {n} variables occur"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
