use super::symbolic::poly_gap;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::table::domain_len;

/// Tables up to this size are used to confirm the gap directly.
const MAX_ORACLE_TABLE: usize = 1 << 20;

fn require_char2(f: &Polynomial) -> Result<()> {
    match f.field().characteristic() {
        2 => Ok(()),
        found => Err(Error::WrongCharacteristic { expected: 2, found }),
    }
}

/// A monomial whose image under swapping two variables carries a different
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationWitness {
    pub exponents: Vec<u32>,
    pub swap: (usize, usize),
}

impl PermutationWitness {
    pub fn permuted(&self) -> Vec<u32> {
        let mut e = self.exponents.clone();
        e.swap(self.swap.0, self.swap.1);
        e
    }

    /// Whether the witness still shows an asymmetry of `f`.
    pub fn replays(&self, f: &Polynomial) -> bool {
        f.coefficient(&self.exponents) != f.coefficient(&self.permuted())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    /// (A): coefficients are invariant under permuting exponent vectors.
    pub satisfies_a: bool,
    /// (B): no monomial with nonzero coefficient has two equal nonzero exponents.
    pub satisfies_b: bool,
    pub a_witness: Option<PermutationWitness>,
    /// A monomial with nonzero coefficient and positions `i < j` with
    /// `k_i = k_j != 0`.
    pub b_witness: Option<(Vec<u32>, usize, usize)>,
}

impl ConditionReport {
    pub fn satisfied(&self) -> bool {
        self.satisfies_a && self.satisfies_b
    }
}

/// Checks conditions (A) and (B) on the terms of a canonical polynomial over
/// GF(2^k). Symmetry is tested on adjacent transpositions, which generate
/// all permutations.
pub fn check_conditions_ab(f: &Polynomial) -> Result<ConditionReport> {
    require_char2(f)?;
    if !f.is_canonical() {
        return Err(Error::Precondition("polynomial is not canonical".into()));
    }
    let n = f.arity();
    let a_witness = f.terms().find_map(|(m, _)| {
        (0..n.saturating_sub(1))
            .map(|a| PermutationWitness {
                exponents: m.exponents().to_vec(),
                swap: (a, a + 1),
            })
            .find(|w| w.replays(f))
    });
    let b_witness = f.terms().find_map(|(m, _)| {
        let e = m.exponents();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| e[i] != 0 && e[i] == e[j])
            .map(|(i, j)| (e.to_vec(), i, j))
    });
    Ok(ConditionReport {
        satisfies_a: a_witness.is_none(),
        satisfies_b: b_witness.is_none(),
        a_witness,
        b_witness,
    })
}

/// Whether `f` over GF(2^k) is determined by oddsupp, via conditions (A) and (B).
pub fn is_determined_by_oddsupp_poly(f: &Polynomial) -> Result<bool> {
    Ok(check_conditions_ab(f)?.satisfied())
}

/// Splits a gap-2 polynomial over GF(2^k) with more than `max(q, 3)`
/// essential variables into its monomials, each on at most `q - 1` variables,
/// in printing order.
///
/// The gap is confirmed on the value table when it has at most 2^20 entries.
/// Beyond that, every tuple has a repeated entry, and gap 2 is equivalent to
/// conditions (A) and (B) on a nonconstant `f`.
pub fn split_low_arity_summands(f: &Polynomial) -> Result<Vec<Polynomial>> {
    require_char2(f)?;
    let q = f.field().order().expect("characteristic 2 field is finite") as usize;
    let n = f.occurring_variables().len();
    if n <= q.max(3) {
        return Err(Error::Precondition(format!(
            "essential arity {n} must exceed max(q, 3) = {}",
            q.max(3)
        )));
    }
    let gap = match domain_len(q, f.arity()).filter(|&l| l <= MAX_ORACLE_TABLE) {
        Some(_) => poly_gap(f)?.gap,
        None if check_conditions_ab(f)?.satisfied() => 2,
        None => 1,
    };
    if gap != 2 {
        return Err(Error::Precondition(format!("gap is {gap}, not 2")));
    }
    let summands: Vec<Polynomial> = f
        .terms()
        .rev()
        .map(|(m, c)| {
            Polynomial::from_terms(f.field(), f.arity(), [(m.exponents().to_vec(), c.clone())])
        })
        .collect::<Result<_>>()?;
    if let Some(s) = summands.iter().find(|s| s.occurring_variables().len() >= q) {
        return Err(Error::Verification(format!(
            "summand {s} has more than {} variables",
            q - 1
        )));
    }
    let total = summands
        .iter()
        .fold(Polynomial::zero(f.field(), f.arity()), |acc, s| &acc + s);
    if &total != f {
        return Err(Error::Verification("summands do not add up to f".into()));
    }
    Ok(summands)
}

fn binomial(m: u64, t: u64) -> u128 {
    if t > m {
        return 0;
    }
    let t = t.min(m - t);
    (0..t).fold(1u128, |acc, i| acc * (m - i) as u128 / (i + 1) as u128)
}

/// The two dimension counts for oddsupp-determined functions over GF(q), `q`
/// a power of 2: the number of admissible oddsupp values
/// `C(q, n) + C(q, n-2) + ...`, and the number of orbits of monomials allowed
/// by (A) and (B), `C(q-1, n) + C(q-1, n-1) + ... + C(q-1, 0)`.
pub fn oddsupp_dimension_counts(q: u64, n: u64) -> Result<(u128, u128)> {
    if q < 2 || !q.is_power_of_two() || q > 64 {
        return Err(Error::Precondition(format!(
            "{q} is not a power of 2 up to 64"
        )));
    }
    let u = (0..=n / 2).map(|t| binomial(q, n - 2 * t)).sum();
    let v = (0..=n).map(|s| binomial(q - 1, s)).sum();
    Ok((u, v))
}
