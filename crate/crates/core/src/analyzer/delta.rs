use crate::error::Result;
use crate::poly::Polynomial;

/// Whether `h` is zero at every tuple with a repeated entry.
///
/// Over GF(q) this is checked on the value table; over Q every identification
/// minor `h_{i<-j}` must be the zero polynomial.
pub fn vanishes_on_repeats(h: &Polynomial) -> Result<bool> {
    if h.field().is_finite() {
        return Ok(h.to_table()?.vanishes_on_repeats());
    }
    let n = h.arity();
    for i in 0..n {
        for j in i + 1..n {
            if !h.identification_minor(i, j)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMultiple {
    pub is_multiple: bool,
    /// Over Q, `w` with `h = w * Δ`.
    pub quotient: Option<Polynomial>,
}

/// Whether `h` is a multiple of `Δ = prod_{i<j} (x_i - x_j)`.
///
/// Over Q, `h` is divided by each linear factor in turn and the quotient is
/// returned. Over GF(q) the test is functional: `h` must vanish on repeated
/// tuples, since the canonical form of a multiple of `Δ` need not be
/// divisible by `Δ` once exponents are folded.
pub fn is_delta_multiple(h: &Polynomial) -> Result<DeltaMultiple> {
    if h.field().is_finite() {
        return Ok(DeltaMultiple {
            is_multiple: vanishes_on_repeats(h)?,
            quotient: None,
        });
    }
    let n = h.arity();
    let mut w = h.clone();
    for i in 0..n {
        for j in i + 1..n {
            match w.divide_by_difference(i, j)? {
                Some(next) => w = next,
                None => {
                    return Ok(DeltaMultiple {
                        is_multiple: false,
                        quotient: None,
                    })
                }
            }
        }
    }
    Ok(DeltaMultiple {
        is_multiple: true,
        quotient: Some(w),
    })
}
