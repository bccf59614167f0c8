//! Finite function tables `A^n -> B` and the brute-force theory of essential
//! variables, identification minors, quasi-arity and arity gap.
//!
//! Elements of `A` are `0..k`, elements of `B` are `0..m`. Values are stored
//! densely in mixed-radix order with the rightmost coordinate varying fastest,
//! so the tuple `(a_1, ..., a_n)` lives at index `a_1 k^{n-1} + ... + a_n`.

mod gap;
mod oddsupp;

pub use gap::{
    arity_gap, classify_gap, quasi_arity, GapCase, GapReport, MinorArity, TernaryWitness,
};
pub use oddsupp::{
    admissible_oddsupp_sets, fact_determined_by_oddsupp, is_determined_by_oddsupp, oddsupp,
    oddsupp_mask, OddSuppProfile,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FiniteField;

/// A total function `A^n -> B` on finite sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FunctionTable {
    k: usize,
    m: usize,
    n: usize,
    values: Vec<u32>,
}

/// Read access shared by total and partial tables.
pub trait TableView {
    fn domain_size(&self) -> usize;
    fn arity(&self) -> usize;
    /// Value at a mixed-radix index, or `None` outside the defined domain.
    fn value(&self, idx: usize) -> Option<u32>;
}

impl TableView for FunctionTable {
    fn domain_size(&self) -> usize {
        self.k
    }

    fn arity(&self) -> usize {
        self.n
    }

    fn value(&self, idx: usize) -> Option<u32> {
        Some(self.values[idx])
    }
}

/// Number of points of `A^n`, if it fits in memory-sized integers.
pub fn domain_len(k: usize, n: usize) -> Option<usize> {
    k.checked_pow(n as u32)
}

impl FunctionTable {
    pub fn new(k: usize, m: usize, n: usize, values: Vec<u32>) -> Result<Self> {
        if k == 0 || m == 0 {
            return Err(Error::Format("domain and codomain must be nonempty".into()));
        }
        let len = domain_len(k, n).ok_or_else(|| Error::Format("table too large".into()))?;
        if values.len() != len {
            return Err(Error::Format(format!(
                "expected {len} values for a {k}^{n} table, found {}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v as usize >= m) {
            return Err(Error::Format(format!(
                "value {v} out of codomain range 0..{m}"
            )));
        }
        Ok(FunctionTable { k, m, n, values })
    }

    /// Tabulates `f` at every tuple, in index order.
    pub fn from_fn(k: usize, m: usize, n: usize, mut f: impl FnMut(&[u32]) -> u32) -> Self {
        let len = domain_len(k, n).expect("table size overflow");
        let mut values = Vec::with_capacity(len);
        let mut tuple = vec![0u32; n];
        for _ in 0..len {
            let v = f(&tuple);
            debug_assert!((v as usize) < m);
            values.push(v);
            advance(&mut tuple, k as u32);
        }
        FunctionTable { k, m, n, values }
    }

    pub fn constant(k: usize, m: usize, n: usize, c: u32) -> Self {
        Self::from_fn(k, m, n, |_| c)
    }

    /// Number of functions `A^n -> B`, when it fits in a `u64`.
    pub fn count(k: usize, m: usize, n: usize) -> Option<u64> {
        let len = domain_len(k, n)?;
        (m as u64).checked_pow(u32::try_from(len).ok()?)
    }

    /// The `code`-th function in the enumeration where the value at index `i`
    /// is the `i`-th base-`m` digit of `code`.
    pub fn from_code(k: usize, m: usize, n: usize, mut code: u64) -> Self {
        let len = domain_len(k, n).expect("table size overflow");
        let values = (0..len)
            .map(|_| {
                let v = (code % m as u64) as u32;
                code /= m as u64;
                v
            })
            .collect();
        FunctionTable { k, m, n, values }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn stride(&self, i: usize) -> usize {
        self.k.pow((self.n - 1 - i) as u32)
    }

    pub fn index_of(&self, tuple: &[u32]) -> usize {
        tuple.iter().fold(0, |acc, &a| acc * self.k + a as usize)
    }

    pub fn tuple_of(&self, mut idx: usize) -> Vec<u32> {
        let mut t = vec![0u32; self.n];
        for slot in t.iter_mut().rev() {
            *slot = (idx % self.k) as u32;
            idx /= self.k;
        }
        t
    }

    pub fn get(&self, tuple: &[u32]) -> u32 {
        self.values[self.index_of(tuple)]
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    pub fn essential_variables(&self) -> Vec<usize> {
        essential_variables(self)
    }

    pub fn essential_arity(&self) -> usize {
        self.essential_variables().len()
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v >= self.n {
                return Err(Error::VariableOutOfRange {
                    index: v,
                    arity: self.n,
                });
            }
        }
        if i == j {
            return Err(Error::SameVariable(i));
        }
        Ok(())
    }

    /// `f_{i<-j}`: the minor obtained by substituting `x_j` for `x_i` (0-based).
    pub fn identification_minor(&self, i: usize, j: usize) -> Result<Self> {
        self.check_pair(i, j)?;
        let (si, sj) = (self.stride(i), self.stride(j));
        let k = self.k;
        let values = (0..self.values.len())
            .map(|idx| {
                let ai = (idx / si) % k;
                let aj = (idx / sj) % k;
                self.values[idx - ai * si + aj * si]
            })
            .collect();
        Ok(FunctionTable {
            k,
            m: self.m,
            n: self.n,
            values,
        })
    }

    /// Simple minor `g(x_1..x_arity) = f(x_{sigma(1)}, ..., x_{sigma(n)})`.
    pub fn simple_minor(&self, sigma: &[usize], arity: usize) -> Result<Self> {
        if sigma.len() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: sigma.len(),
            });
        }
        if let Some(&s) = sigma.iter().find(|&&s| s >= arity) {
            return Err(Error::VariableOutOfRange { index: s, arity });
        }
        let mut src = vec![0u32; self.n];
        Ok(Self::from_fn(self.k, self.m, arity, |t| {
            for (slot, &s) in src.iter_mut().zip(sigma) {
                *slot = t[s];
            }
            self.get(&src)
        }))
    }

    /// The table restricted to `A^n_=`, the tuples with a repeated entry.
    pub fn restrict_to_repeats(&self) -> PartialTable {
        PartialTable::repeats(self.clone())
    }

    /// Removes inessential variables, keeping the essential ones in order.
    pub fn drop_inessential(&self) -> FunctionTable {
        let ess = self.essential_variables();
        let mut src = vec![0u32; self.n];
        Self::from_fn(self.k, self.m, ess.len(), |t| {
            for (&e, &a) in ess.iter().zip(t) {
                src[e] = a;
            }
            self.get(&src)
        })
    }

    /// Pointwise `self - other` in the additive group of a finite field.
    pub fn field_sub(&self, other: &Self, field: &FiniteField) -> Result<Self> {
        self.check_field_shape(other, field)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| field.sub(a, b))
            .collect();
        Ok(FunctionTable {
            values,
            ..self.clone()
        })
    }

    pub fn field_add(&self, other: &Self, field: &FiniteField) -> Result<Self> {
        self.check_field_shape(other, field)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| field.add(a, b))
            .collect();
        Ok(FunctionTable {
            values,
            ..self.clone()
        })
    }

    fn check_field_shape(&self, other: &Self, field: &FiniteField) -> Result<()> {
        let q = field.q() as usize;
        if self.m != q || other.m != q {
            return Err(Error::FieldMismatch);
        }
        if (self.k, self.n) != (other.k, other.n) {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// Whether the function is zero at every tuple with a repeated entry.
    pub fn vanishes_on_repeats(&self) -> bool {
        (0..self.values.len()).all(|idx| self.values[idx] == 0 || !has_repeat(idx, self.k, self.n))
    }

    /// Text exchange form: header `k m n`, then the values in index order.
    pub fn to_exchange(&self) -> String {
        let mut out = format!("{} {} {}\n", self.k, self.m, self.n);
        let line_len = self.k.max(2);
        for chunk in self.values.chunks(line_len) {
            let line: Vec<String> = chunk.iter().map(u32::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_exchange(text: &str) -> Result<Self> {
        let mut tokens = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace);
        let mut header = |name: &str| -> Result<usize> {
            tokens
                .next()
                .ok_or_else(|| Error::Format(format!("missing {name} in table header")))?
                .parse()
                .map_err(|_| Error::Format(format!("bad {name} in table header")))
        };
        let k = header("k")?;
        let m = header("m")?;
        let n = header("n")?;
        let values = tokens
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Format(format!("bad table value {t:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::new(k, m, n, values)
    }
}

impl fmt::Display for FunctionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_exchange())
    }
}

/// Domain restriction of a [`PartialTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    All,
    /// `A^n_=`; for `n = 1` this is all of `A`.
    Repeats,
}

/// A table whose values are only consulted on a subset of `A^n`.
#[derive(Clone, Debug)]
pub struct PartialTable {
    table: FunctionTable,
    domain: Domain,
}

impl PartialTable {
    pub fn repeats(table: FunctionTable) -> Self {
        PartialTable {
            table,
            domain: Domain::Repeats,
        }
    }

    pub fn total(table: FunctionTable) -> Self {
        PartialTable {
            table,
            domain: Domain::All,
        }
    }

    pub fn table(&self) -> &FunctionTable {
        &self.table
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_defined(&self, idx: usize) -> bool {
        match self.domain {
            Domain::All => true,
            Domain::Repeats => self.table.n == 1 || has_repeat(idx, self.table.k, self.table.n),
        }
    }

    pub fn essential_variables(&self) -> Vec<usize> {
        essential_variables(self)
    }

    /// Whether the defined part takes a single value (vacuously true if empty).
    pub fn is_constant(&self) -> bool {
        let mut seen = None;
        for idx in 0..self.table.len() {
            if let Some(v) = self.value(idx) {
                match seen {
                    None => seen = Some(v),
                    Some(s) if s != v => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

impl TableView for PartialTable {
    fn domain_size(&self) -> usize {
        self.table.k
    }

    fn arity(&self) -> usize {
        self.table.n
    }

    fn value(&self, idx: usize) -> Option<u32> {
        self.is_defined(idx).then(|| self.table.values[idx])
    }
}

/// Essential variables by exhaustive witness search: `x_i` is essential when
/// two defined points differing only in coordinate `i` carry different values.
pub fn essential_variables<T: TableView>(t: &T) -> Vec<usize> {
    let (k, n) = (t.domain_size(), t.arity());
    let len = k.pow(n as u32);
    (0..n)
        .filter(|&i| {
            let stride = k.pow((n - 1 - i) as u32);
            (0..len).filter(|idx| (idx / stride) % k == 0).any(|base| {
                let mut seen = None;
                (0..k).any(|a| match (t.value(base + a * stride), seen) {
                    (Some(v), None) => {
                        seen = Some(v);
                        false
                    }
                    (Some(v), Some(s)) => v != s,
                    (None, _) => false,
                })
            })
        })
        .collect()
}

/// Whether the tuple at `idx` has two equal coordinates.
pub fn has_repeat(mut idx: usize, k: usize, n: usize) -> bool {
    let mut seen = 0u128;
    for _ in 0..n {
        let a = idx % k;
        if seen >> a & 1 == 1 {
            return true;
        }
        seen |= 1 << a;
        idx /= k;
    }
    false
}

/// Mixed-radix increment, rightmost coordinate fastest.
pub(crate) fn advance(tuple: &mut [u32], k: u32) {
    for slot in tuple.iter_mut().rev() {
        *slot += 1;
        if *slot < k {
            return;
        }
        *slot = 0;
    }
}

/// Decomposes `t = g + h` over the additive group of a finite field, with
/// `h` vanishing on `A^n_=`, `h` nonzero and `ess g = n - p`.
///
/// `g` is found among the identification minors `t_{i<-j}`; every qualifying
/// pair must yield the same `g`.
pub fn decompose_sum(
    t: &FunctionTable,
    field: &FiniteField,
    p: usize,
) -> Result<(FunctionTable, FunctionTable)> {
    let n = t.n;
    let q = field.q() as usize;
    if t.k != q || t.m != q {
        return Err(Error::FieldMismatch);
    }
    if n < 3 {
        return Err(Error::Precondition(format!("arity {n} is below 3")));
    }
    if p == 0 || p > n {
        return Err(Error::Precondition(format!("p = {p} outside 1..={n}")));
    }
    let ess = t.essential_arity();
    if ess != n {
        return Err(Error::Precondition(format!(
            "table depends on {ess} of its {n} variables"
        )));
    }
    let qa = quasi_arity(t);
    if qa + p != n {
        return Err(Error::Precondition(format!(
            "quasi-arity is {qa}, expected {}",
            n as isize - p as isize
        )));
    }
    let mut found: Option<(FunctionTable, FunctionTable)> = None;
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let g = t.identification_minor(i, j)?;
            let h = t.field_sub(&g, field)?;
            if h.values.iter().all(|&v| v == 0) || !h.vanishes_on_repeats() {
                continue;
            }
            if g.essential_arity() != n - p {
                continue;
            }
            match &found {
                None => found = Some((g, h)),
                Some((g0, _)) if *g0 != g => {
                    return Err(Error::Verification(format!(
                        "two distinct decompositions (second from pair ({}, {}))",
                        i + 1,
                        j + 1
                    )))
                }
                _ => {}
            }
        }
    }
    found.ok_or_else(|| {
        Error::Verification("no identification minor yields the decomposition".into())
    })
}
