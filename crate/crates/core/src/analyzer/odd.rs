use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;
use crate::table;

/// `prod_{i=1}^{n} (x_i^{q-1} - 1/2)` over GF(q), `q` odd: a gap-2 polynomial
/// that is not a sum of functions of fewer than `n` variables.
pub fn odd_char_counterexample(q: u64, n: usize) -> Result<Polynomial> {
    if q.is_multiple_of(2) {
        return Err(Error::Precondition(format!("q = {q} is even")));
    }
    if n < 2 {
        return Err(Error::Precondition(format!("arity {n} is below 2")));
    }
    let field = Field::gf(q)?;
    let half = field.inv(&field.from_int(2))?;
    let factor = |i: usize| -> Result<Polynomial> {
        let mut e = vec![0; n];
        e[i] = (q - 1) as u32;
        Polynomial::from_terms(
            &field,
            n,
            [(e, field.one()), (vec![0; n], field.neg(&half))],
        )
    };
    (0..n).try_fold(Polynomial::one(&field, n), |acc, i| Ok(&acc * &factor(i)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub q: u64,
    pub n: usize,
    pub f: Polynomial,
    /// Gap of the value table.
    pub gap: usize,
    /// `f(x_1, x_1, x_3, ..., x_n)`.
    pub minor: Polynomial,
    /// `(1/4) prod_{i>=3} (x_i^{q-1} - 1/2)`, built independently.
    pub expected_minor: Polynomial,
    /// Coefficient of `x_1^{q-1} ... x_n^{q-1}` in `f`.
    pub full_coefficient: String,
}

impl CounterexampleReport {
    pub fn holds(&self) -> bool {
        self.gap == 2 && self.minor == self.expected_minor && self.full_coefficient != "0"
    }
}

/// Builds the counterexample and checks its three properties: gap 2 on the
/// value table, the closed form of the minor identifying `x_1` and `x_2`,
/// and a nonzero coefficient on the product of all `x_i^{q-1}`.
pub fn check_odd_counterexample(q: u64, n: usize) -> Result<CounterexampleReport> {
    let f = odd_char_counterexample(q, n)?;
    let field = f.field().clone();
    let gap = table::arity_gap(&f.to_table()?)?.gap;
    let minor = f.identification_minor(1, 0)?;
    let half = field.inv(&field.from_int(2))?;
    let quarter = field.mul(&half, &half);
    let mut expected_minor = Polynomial::constant(&field, n, quarter);
    for i in 2..n {
        let mut e = vec![0; n];
        e[i] = (q - 1) as u32;
        let factor = Polynomial::from_terms(
            &field,
            n,
            [(e, field.one()), (vec![0; n], field.neg(&half))],
        )?;
        expected_minor = &expected_minor * &factor;
    }
    let full_coefficient = f.coefficient(&vec![(q - 1) as u32; n]).to_string();
    Ok(CounterexampleReport {
        q,
        n,
        f,
        gap,
        minor,
        expected_minor,
        full_coefficient,
    })
}
