use std::fmt;

use super::{is_determined_by_oddsupp, FunctionTable};
use crate::error::{Error, Result};

/// Which branch of the general arity-gap classification applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GapCase {
    /// Gap `p >= 3`, equivalently quasi-arity `n - p`.
    HighGap,
    /// Gap 2 with `n != 3`.
    Two,
    /// Gap 2 with `n = 3`, witnessed by a nonconstant unary `h`.
    TernaryTwo,
    /// Gap 1.
    One,
}

impl GapCase {
    pub fn from_gap(gap: usize, essential_arity: usize) -> Self {
        match gap {
            g if g >= 3 => GapCase::HighGap,
            2 if essential_arity == 3 => GapCase::TernaryTwo,
            2 => GapCase::Two,
            _ => GapCase::One,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            GapCase::HighGap => "i",
            GapCase::Two => "ii",
            GapCase::TernaryTwo => "iii",
            GapCase::One => "iv",
        }
    }
}

impl fmt::Display for GapCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// Essential arity of one identification minor `f_{i<-j}` (0-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorArity {
    pub i: usize,
    pub j: usize,
    pub essential_arity: usize,
}

/// Witness for the ternary gap-2 case: `f(x1, x0, x0) = h(x_{pattern[0]})`,
/// `f(x0, x1, x0) = h(x_{pattern[1]})`, `f(x0, x0, x1) = h(x_{pattern[2]})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryWitness {
    pub pattern: [u8; 3],
    /// Value table of the unary function `h`.
    pub h: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapReport {
    pub arity: usize,
    /// Essential variables, 0-based and increasing.
    pub essential: Vec<usize>,
    pub quasi_arity: usize,
    pub gap: usize,
    pub case: GapCase,
    /// Lexicographically first pair `(i, j)` realizing the gap.
    pub witness: Option<(usize, usize)>,
    /// Essential arities of `f_{i<-j}` over essential pairs, listed as
    /// `(1,2), (2,1), (1,3), (3,1), (2,3), (3,2), ...`.
    pub minor_arities: Vec<MinorArity>,
    /// Whether the restriction to tuples with a repeated entry is determined by oddsupp.
    pub repeats_oddsupp_determined: bool,
    pub ternary: Option<TernaryWitness>,
}

impl GapReport {
    pub fn essential_arity(&self) -> usize {
        self.essential.len()
    }
}

/// Quasi-arity: the least essential arity of a function agreeing with `t` on
/// `A^n_=`. For `n != 2` this is the essential arity of the restriction; for
/// `n = 2` it is 0 or 1 according to whether the diagonal is constant.
pub fn quasi_arity(t: &FunctionTable) -> usize {
    match t.n() {
        0 => 0,
        1 => t.essential_arity(),
        2 => {
            let diag: Vec<u32> = (0..t.k() as u32).map(|a| t.get(&[a, a])).collect();
            usize::from(diag.windows(2).any(|w| w[0] != w[1]))
        }
        _ => t.restrict_to_repeats().essential_variables().len(),
    }
}

/// Computes the arity gap directly from the definition: the least drop in
/// essential arity over identification minors of essential pairs.
pub fn arity_gap(t: &FunctionTable) -> Result<GapReport> {
    let essential = t.essential_variables();
    let ess = essential.len();
    if ess < 2 {
        return Err(Error::GapUndefined(ess));
    }
    let mut minor_arities = Vec::with_capacity(ess * (ess - 1));
    for (a, &i) in essential.iter().enumerate() {
        for &j in &essential[a + 1..] {
            for (x, y) in [(i, j), (j, i)] {
                let e = t.identification_minor(x, y)?.essential_arity();
                minor_arities.push(MinorArity {
                    i: x,
                    j: y,
                    essential_arity: e,
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
        arity: t.n(),
        essential,
        quasi_arity: quasi_arity(t),
        gap,
        case: GapCase::from_gap(gap, ess),
        witness,
        minor_arities,
        repeats_oddsupp_determined: is_determined_by_oddsupp(&t.restrict_to_repeats()).is_some(),
        ternary: None,
    })
}

/// Predicts the arity gap from quasi-arity, oddsupp determination and, for
/// `n = 3`, the unary-witness search, without looking at any minor's
/// essential arity. The table must depend on all of its `n >= 2` variables.
pub fn classify_gap(t: &FunctionTable) -> Result<GapReport> {
    let n = t.n();
    let essential = t.essential_variables();
    if essential.len() < 2 {
        return Err(Error::GapUndefined(essential.len()));
    }
    if essential.len() != n {
        return Err(Error::Precondition(format!(
            "inessential variables present ({} of {n} essential)",
            essential.len()
        )));
    }
    let qa = quasi_arity(t);
    let determined = is_determined_by_oddsupp(&t.restrict_to_repeats()).is_some();
    let mut ternary = None;
    let (gap, case) = if n >= 3 && qa + 3 <= n {
        (n - qa, GapCase::HighGap)
    } else if n != 3 && (qa + 2 == n || (qa == n && determined)) {
        (2, GapCase::Two)
    } else if n == 3 {
        ternary = ternary_witness(t);
        if ternary.is_some() {
            (2, GapCase::TernaryTwo)
        } else {
            (1, GapCase::One)
        }
    } else {
        (1, GapCase::One)
    };
    Ok(GapReport {
        arity: n,
        essential,
        quasi_arity: qa,
        gap,
        case,
        witness: None,
        minor_arities: Vec::new(),
        repeats_oddsupp_determined: determined,
        ternary,
    })
}

/// Searches `(i1, i2, i3)` in lexicographic order for a nonconstant `h` with
/// the three one-variable-apart minors equal to `h(x_{i_p})`.
fn ternary_witness(t: &FunctionTable) -> Option<TernaryWitness> {
    let k = t.k() as u32;
    // u[p](x1, x0): position p gets x1, the other two get x0
    let minor = |p: usize, x1: u32, x0: u32| {
        let mut tuple = [x0; 3];
        tuple[p] = x1;
        t.get(&tuple)
    };
    let unary = |p: usize, through: u8| -> Option<Vec<u32>> {
        let h: Vec<u32> = (0..k)
            .map(|a| {
                if through == 1 {
                    minor(p, a, 0)
                } else {
                    minor(p, 0, a)
                }
            })
            .collect();
        let consistent = (0..k).all(|x1| {
            (0..k).all(|x0| {
                let arg = if through == 1 { x1 } else { x0 };
                minor(p, x1, x0) == h[arg as usize]
            })
        });
        consistent.then_some(h)
    };
    (0..8u8).find_map(|bits| {
        let pattern = [bits >> 2 & 1, bits >> 1 & 1, bits & 1];
        let h = unary(0, pattern[0])?;
        if h.windows(2).all(|w| w[0] == w[1]) {
            return None;
        }
        (1..3)
            .all(|p| unary(p, pattern[p]).as_ref() == Some(&h))
            .then_some(TernaryWitness { pattern, h })
    })
}
