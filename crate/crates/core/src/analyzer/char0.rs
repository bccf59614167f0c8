use super::require_all_occur;
use super::symbolic::{poly_gap, repeats_determined_by_oddsupp};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::table::GapReport;

fn require_rational(f: &Polynomial) -> Result<()> {
    match f.field().characteristic() {
        0 => Ok(()),
        found => Err(Error::WrongCharacteristic { expected: 0, found }),
    }
}

/// Decides whether `f` restricted to tuples with a repeated entry is
/// determined by oddsupp. When it is, the restriction must be constant; a
/// nonconstant one is reported as a verification failure.
pub fn oddsupp_constant_char0(f: &Polynomial) -> Result<bool> {
    require_rational(f)?;
    let n = f.arity();
    if n < 2 {
        return Err(Error::Precondition(format!("arity {n} is below 2")));
    }
    if !repeats_determined_by_oddsupp(f)? {
        return Ok(false);
    }
    let diagonal = f.simple_minor(&vec![0; n], 1)?;
    let Some(c) = diagonal.constant_value() else {
        return Err(Error::Verification(format!(
            "restriction determined by oddsupp but f(x, ..., x) = {diagonal}"
        )));
    };
    let c = Polynomial::constant(f.field(), n, c);
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let m = f.identification_minor(i, j)?;
            if m != c {
                return Err(Error::Verification(format!(
                    "restriction determined by oddsupp but f_{{{}<-{}}} = {m}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryGap {
    pub report: GapReport,
    /// `(i1, i2, i3)`: position `p` of `f(x0, x0, x0)` replaced by `x1` gives
    /// `h(x_{i_p})`. Present exactly when the gap is 2.
    pub pattern: Option<[u8; 3]>,
    /// The unary `h`, as a polynomial in one variable.
    pub h: Option<Polynomial>,
}

/// Gap of a ternary polynomial over Q together with its unary witness.
///
/// With gap 2 the witness pattern must contain exactly one 1, the
/// quasi-arity must be 1, and `h'` must equal the sum of the partial
/// derivatives of `f` on the diagonal; anything else is a verification failure.
pub fn ternary_gap_char0(f: &Polynomial) -> Result<TernaryGap> {
    require_rational(f)?;
    if f.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: f.arity(),
        });
    }
    require_all_occur(f, 3)?;
    let report = poly_gap(f)?;
    let witness = ternary_witness(f)?;
    let Some((pattern, h)) = witness else {
        if report.gap == 2 {
            return Err(Error::Verification("gap 2 without a unary witness".into()));
        }
        return Ok(TernaryGap {
            report,
            pattern: None,
            h: None,
        });
    };
    if report.gap != 2 {
        return Err(Error::Verification(format!(
            "unary witness {pattern:?} found but gap is {}",
            report.gap
        )));
    }
    if pattern.iter().filter(|&&b| b == 1).count() != 1 {
        return Err(Error::Verification(format!(
            "excluded witness pattern {pattern:?}"
        )));
    }
    if report.quasi_arity != 1 {
        return Err(Error::Verification(format!(
            "gap 2 with quasi-arity {}",
            report.quasi_arity
        )));
    }
    let slope = f.minor_derivative_expansion(&[0, 0, 0], 1, 0)?;
    if slope != h.partial_derivative(0)? || slope.is_zero() {
        return Err(Error::Verification(format!(
            "diagonal derivative {slope} does not match h = {h}"
        )));
    }
    Ok(TernaryGap {
        report,
        pattern: Some(pattern),
        h: Some(h),
    })
}

/// Searches patterns in lexicographic order for a nonconstant unary `h`.
fn ternary_witness(f: &Polynomial) -> Result<Option<([u8; 3], Polynomial)>> {
    // u[p](x1, x0): position p gets x1 (variable 0), the others x0 (variable 1)
    let mut u = Vec::with_capacity(3);
    for p in 0..3 {
        let sigma: Vec<usize> = (0..3).map(|l| usize::from(l != p)).collect();
        u.push(f.simple_minor(&sigma, 2)?);
    }
    let unary = |p: usize, through: u8| -> Result<Option<Polynomial>> {
        let other = usize::from(through == 1);
        if u[p].occurring_variables().contains(&other) {
            return Ok(None);
        }
        Ok(Some(u[p].simple_minor(&[0, 0], 1)?))
    };
    for bits in 0..8u8 {
        let pattern = [bits >> 2 & 1, bits >> 1 & 1, bits & 1];
        let Some(h) = unary(0, pattern[0])? else {
            continue;
        };
        if h.is_constant() {
            continue;
        }
        if unary(1, pattern[1])?.as_ref() == Some(&h) && unary(2, pattern[2])?.as_ref() == Some(&h)
        {
            return Ok(Some((pattern, h)));
        }
    }
    Ok(None)
}
