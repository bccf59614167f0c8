//! Sparse multivariate polynomials over a [`Field`].
//!
//! Terms are kept in a map from exponent vectors to nonzero coefficients,
//! ordered graded-lexicographically. Over GF(q) every arithmetic result is
//! canonical: each positive exponent is folded into `1..=q-1` using `x^q = x`,
//! so canonical polynomials and functions `GF(q)^n -> GF(q)` correspond one to
//! one. Raw (unfolded) polynomials only arise from [`Polynomial::from_terms_raw`]
//! and [`Polynomial::simple_minor_raw`].
//!
//! Variables are 0-based in the API and printed as `x1, x2, ...`.

mod dense;
mod exchange;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::table::FunctionTable;

/// An exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `x^e` as a function on GF(q): exponent 0 stays, others land in `1..=q-1`.
pub fn fold_exponent(e: u32, q: u32) -> u32 {
    if e == 0 {
        0
    } else {
        (e - 1) % (q - 1) + 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    arity: usize,
    terms: BTreeMap<Monomial, Elem>,
}

impl Polynomial {
    pub fn zero(field: &Field, arity: usize) -> Self {
        Polynomial {
            field: field.clone(),
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Field, arity: usize, c: Elem) -> Self {
        Self::build(field, arity, [(Monomial::one(arity), c)], true)
    }

    pub fn one(field: &Field, arity: usize) -> Self {
        Self::constant(field, arity, field.one())
    }

    /// The variable `x_i` (0-based) of an `arity`-ary polynomial ring.
    pub fn var(field: &Field, arity: usize, i: usize) -> Result<Self> {
        if i >= arity {
            return Err(Error::VariableOutOfRange { index: i, arity });
        }
        Ok(Self::build(
            field,
            arity,
            [(Monomial::var(arity, i), field.one())],
            true,
        ))
    }

    /// Builds a canonical polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms<I>(field: &Field, arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Elem)>,
    {
        Self::checked_terms(field, arity, terms, true)
    }

    /// Like [`Polynomial::from_terms`] but without exponent folding: like
    /// terms are merged and zeros dropped, nothing else.
    pub fn from_terms_raw<I>(field: &Field, arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Elem)>,
    {
        Self::checked_terms(field, arity, terms, false)
    }

    fn checked_terms<I>(field: &Field, arity: usize, terms: I, fold: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Elem)>,
    {
        let terms: Vec<(Monomial, Elem)> = terms
            .into_iter()
            .map(|(e, c)| {
                if e.len() != arity {
                    return Err(Error::ArityMismatch {
                        expected: arity,
                        found: e.len(),
                    });
                }
                if !field.contains(&c) {
                    return Err(Error::NotInField(c.to_string(), field.to_string()));
                }
                Ok((Monomial(e), c))
            })
            .collect::<Result<_>>()?;
        Ok(Self::build(field, arity, terms, fold))
    }

    fn build<I>(field: &Field, arity: usize, terms: I, fold: bool) -> Self
    where
        I: IntoIterator<Item = (Monomial, Elem)>,
    {
        let q = field.order().filter(|_| fold);
        let mut map: BTreeMap<Monomial, Elem> = BTreeMap::new();
        for (mut mono, c) in terms {
            if let Some(q) = q {
                for e in mono.0.iter_mut() {
                    *e = fold_exponent(*e, q);
                }
            }
            accumulate(&mut map, field, mono, c);
        }
        Polynomial {
            field: field.clone(),
            arity,
            terms: map,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Terms in increasing graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Elem {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_constant)
    }

    /// The constant value, if the polynomial is constant.
    pub fn constant_value(&self) -> Option<Elem> {
        self.is_constant()
            .then(|| self.coefficient(&vec![0; self.arity]))
    }

    /// Whether every exponent already respects the `q - 1` bound (always true over Q).
    pub fn is_canonical(&self) -> bool {
        match self.field.order() {
            Some(q) => self.terms.keys().all(|m| m.0.iter().all(|&e| e < q)),
            None => true,
        }
    }

    /// Folds exponents with `x^q = x` and merges like terms. The result
    /// induces the same function; over Q this is the identity.
    pub fn canonicalize(&self) -> Polynomial {
        Self::build(&self.field, self.arity, self.terms.clone(), true)
    }

    /// Indices of variables with a positive exponent in some term.
    pub fn occurring_variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.arity];
        for m in self.terms.keys() {
            for i in m.support() {
                seen[i] = true;
            }
        }
        (0..self.arity).filter(|&i| seen[i]).collect()
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(())
    }

    fn check_var(&self, i: usize) -> Result<()> {
        if i >= self.arity {
            Err(Error::VariableOutOfRange {
                index: i,
                arity: self.arity,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let terms = self.terms.iter().chain(&other.terms);
        Ok(Self::build(
            &self.field,
            self.arity,
            terms.map(|(m, c)| (m.clone(), c.clone())),
            true,
        ))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let q = self.field.order();
        let mut map = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let exps =
                    ma.0.iter()
                        .zip(&mb.0)
                        .map(|(a, b)| {
                            let e = a + b;
                            q.map_or(e, |q| fold_exponent(e, q))
                        })
                        .collect();
                accumulate(
                    &mut map,
                    &self.field,
                    Monomial(exps),
                    self.field.mul(ca, cb),
                );
            }
        }
        Ok(Polynomial {
            field: self.field.clone(),
            arity: self.arity,
            terms: map,
        })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            field: self.field.clone(),
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }

    pub fn scalar_mul(&self, c: &Elem) -> Polynomial {
        Self::build(
            &self.field,
            self.arity,
            self.terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(a, c))),
            true,
        )
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.field, self.arity);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative in `x_i` of the stored representative. The
    /// exponent `a_i` is read as an element of the field, so over GF(p) terms
    /// whose exponent is a multiple of p vanish.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        self.check_var(i)?;
        let terms = self.terms.iter().filter(|(m, _)| m.0[i] > 0).map(|(m, c)| {
            let a = m.0[i];
            let mut e = m.0.clone();
            e[i] -= 1;
            (
                Monomial(e),
                self.field.mul(c, &self.field.from_int(a as i64)),
            )
        });
        Ok(Self::build(&self.field, self.arity, terms, false))
    }

    fn map_variables(&self, sigma: &[usize], arity: usize, fold: bool) -> Result<Polynomial> {
        if sigma.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: sigma.len(),
            });
        }
        if let Some(&s) = sigma.iter().find(|&&s| s >= arity) {
            return Err(Error::VariableOutOfRange { index: s, arity });
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u32; arity];
            for (src, &target) in sigma.iter().enumerate() {
                e[target] += m.0[src];
            }
            (Monomial(e), c.clone())
        });
        Ok(Self::build(&self.field, arity, terms, fold))
    }

    /// The simple minor `g(x_1..x_m) = f(x_{sigma(1)}, ..., x_{sigma(n)})`,
    /// with `sigma` given 0-based; canonical over GF(q).
    pub fn simple_minor(&self, sigma: &[usize], arity: usize) -> Result<Polynomial> {
        self.map_variables(sigma, arity, true)
    }

    /// Variable substitution in the polynomial ring, without exponent folding.
    pub fn simple_minor_raw(&self, sigma: &[usize], arity: usize) -> Result<Polynomial> {
        self.map_variables(sigma, arity, false)
    }

    /// `f_{i<-j}`: substitute `x_j` for `x_i` (0-based), keeping the arity.
    pub fn identification_minor(&self, i: usize, j: usize) -> Result<Polynomial> {
        self.check_var(i)?;
        self.check_var(j)?;
        if i == j {
            return Err(Error::SameVariable(i));
        }
        let sigma: Vec<usize> = (0..self.arity)
            .map(|l| if l == i { j } else { l })
            .collect();
        self.simple_minor(&sigma, self.arity)
    }

    /// Chain rule for simple minors: `sum over sigma(i) = j of (d_i f)` composed
    /// with `sigma`. Equals the `j`-th derivative of the raw minor.
    pub fn minor_derivative_expansion(
        &self,
        sigma: &[usize],
        arity: usize,
        j: usize,
    ) -> Result<Polynomial> {
        if j >= arity {
            return Err(Error::VariableOutOfRange { index: j, arity });
        }
        let mut acc = Polynomial::zero(&self.field, arity);
        for (i, _) in sigma.iter().enumerate().filter(|(_, &s)| s == j) {
            let d = self.partial_derivative(i)?.simple_minor(sigma, arity)?;
            acc = acc.checked_add(&d)?;
        }
        Ok(acc)
    }

    fn check_point(&self, point: &[Elem]) -> Result<()> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: point.len(),
            });
        }
        if let Some(a) = point.iter().find(|a| !self.field.contains(a)) {
            return Err(Error::NotInField(a.to_string(), self.field.to_string()));
        }
        Ok(())
    }

    /// Sparse multivariate Horner evaluation.
    pub fn evaluate(&self, point: &[Elem]) -> Result<Elem> {
        self.check_point(point)?;
        let mut terms: Vec<(&[u32], &Elem)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.0.as_slice(), c))
            .collect();
        terms.sort_by(|a, b| b.0.cmp(a.0));
        Ok(horner(&self.field, &terms, 0, point))
    }

    /// Evaluation term by term; a cross-check for [`Polynomial::evaluate`].
    pub fn evaluate_termwise(&self, point: &[Elem]) -> Result<Elem> {
        self.check_point(point)?;
        let f = &self.field;
        Ok(self.terms.iter().fold(f.zero(), |acc, (m, c)| {
            let v =
                m.0.iter()
                    .zip(point)
                    .fold(c.clone(), |v, (&e, x)| f.mul(&v, &f.pow(x, e as u64)));
            f.add(&acc, &v)
        }))
    }

    /// The induced function as a `q^n` table (finite fields only).
    pub fn to_table(&self) -> Result<FunctionTable> {
        dense::to_table(self)
    }

    /// The unique canonical polynomial inducing `table`, built from the
    /// indicator sum `sum_a t(a) prod_i (1 - (x_i - a_i)^{q-1})`.
    pub fn interpolate(field: &Field, table: &FunctionTable) -> Result<Polynomial> {
        dense::interpolate(field, table)
    }

    /// Exact quotient `f / d`, or `None` when `d` does not divide `f`.
    /// Only over Q, where the ring and its quotient by folding coincide.
    pub fn exact_divide(&self, d: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_compatible(d)?;
        if self.field.is_finite() {
            return Err(Error::Precondition(
                "exact division is only supported over Q".into(),
            ));
        }
        let (lead_m, lead_c) = d.terms.iter().next_back().ok_or(Error::DivisionByZero)?;
        let lead_inv = self.field.inv(lead_c)?;
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((rm, rc)) = rem.terms.iter().next_back() {
            if !lead_m.divides(rm) {
                return Ok(None);
            }
            let qm = Monomial(rm.0.iter().zip(&lead_m.0).map(|(a, b)| a - b).collect());
            let qc = self.field.mul(rc, &lead_inv);
            let step = Self::build(&self.field, self.arity, [(qm.clone(), qc.clone())], false);
            rem = rem.checked_sub(&(&step * d))?;
            quot.insert(qm, qc);
        }
        Ok(Some(Polynomial {
            field: self.field.clone(),
            arity: self.arity,
            terms: quot,
        }))
    }

    /// Synthetic division by `x_i - x_j` viewed as a polynomial in `x_i`:
    /// returns the quotient when the remainder `f|_{x_i = x_j}` is zero.
    pub fn divide_by_difference(&self, i: usize, j: usize) -> Result<Option<Polynomial>> {
        self.check_var(i)?;
        self.check_var(j)?;
        if i == j {
            return Err(Error::SameVariable(i));
        }
        if self.field.is_finite() {
            return Err(Error::Precondition(
                "exact division is only supported over Q".into(),
            ));
        }
        // f = sum_k c_k x_i^k with c_k free of x_i
        let mut coeffs: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::replace(&mut e[i], 0);
            let slot = coeffs
                .entry(k)
                .or_insert_with(|| Polynomial::zero(&self.field, self.arity));
            accumulate(&mut slot.terms, &self.field, Monomial(e), c.clone());
        }
        let Some(&top) = coeffs.keys().next_back() else {
            return Ok(Some(self.clone()));
        };
        let xj = Polynomial::var(&self.field, self.arity, j)?;
        let xi = Polynomial::var(&self.field, self.arity, i)?;
        let zero = Polynomial::zero(&self.field, self.arity);
        // b_{k-1} = c_k + x_j b_k, remainder c_0 + x_j b_0
        let mut carry = zero.clone();
        let mut quotient = zero.clone();
        for k in (1..=top).rev() {
            let ck = coeffs.get(&k).unwrap_or(&zero);
            carry = ck + &(&xj * &carry);
            quotient = &quotient + &(&carry * &xi.pow(k - 1));
        }
        let remainder = coeffs.get(&0).unwrap_or(&zero) + &(&xj * &carry);
        Ok(remainder.is_zero().then_some(quotient))
    }

    /// Same polynomial viewed in a larger ring `F[x_1..x_arity]`.
    pub fn extend_arity(&self, arity: usize) -> Result<Polynomial> {
        if arity < self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: arity,
            });
        }
        let sigma: Vec<usize> = (0..self.arity).collect();
        self.map_variables(&sigma, arity, false)
    }

    pub fn to_exchange(&self) -> String {
        exchange::write(self)
    }

    pub fn from_exchange(text: &str) -> Result<Polynomial> {
        exchange::read(text)
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, Elem>, field: &Field, m: Monomial, c: Elem) {
    if field.is_zero(&c) {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = field.add(o.get(), &c);
            if field.is_zero(&s) {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

fn horner(field: &Field, terms: &[(&[u32], &Elem)], var: usize, point: &[Elem]) -> Elem {
    if terms.is_empty() {
        return field.zero();
    }
    if var == point.len() {
        return terms
            .iter()
            .fold(field.zero(), |acc, (_, c)| field.add(&acc, c));
    }
    let x = &point[var];
    let mut acc = field.zero();
    let mut prev: Option<u32> = None;
    let mut start = 0;
    while start < terms.len() {
        let e = terms[start].0[var];
        let end = start + terms[start..].iter().take_while(|t| t.0[var] == e).count();
        let inner = horner(field, &terms[start..end], var + 1, point);
        if let Some(pe) = prev {
            acc = field.mul(&acc, &field.pow(x, (pe - e) as u64));
        }
        acc = field.add(&acc, &inner);
        prev = Some(e);
        start = end;
    }
    field.mul(&acc, &field.pow(x, prev.unwrap_or(0) as u64))
}

/// `prod_{i<j} (x_i - x_j)` in `n >= 2` variables; canonical over GF(q).
pub fn delta(field: &Field, n: usize) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::Precondition(format!("delta needs n >= 2, got {n}")));
    }
    let mut acc = Polynomial::one(field, n);
    for i in 0..n {
        for j in i + 1..n {
            acc = &acc * &(&Polynomial::var(field, n, i)? - &Polynomial::var(field, n, j)?);
        }
    }
    Ok(acc)
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// Panics on a field or arity mismatch; see the `checked_` variant.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs)
                    .expect("incompatible polynomial operands")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    /// Terms in decreasing graded-lex order, e.g. `x1^2*x2 - 3/4*x3 + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = self.field.is_negative(c);
            let abs = if negative {
                self.field.neg(c)
            } else {
                c.clone()
            };
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if m.is_constant() || abs != self.field.one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{e}", i + 1)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
