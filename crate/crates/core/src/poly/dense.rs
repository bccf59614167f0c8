//! Conversions between canonical polynomials and value tables over GF(q).
//!
//! A canonical polynomial is a dense `q^n` tensor of coefficients indexed by
//! exponent vectors, and its value table is the same tensor transformed along
//! every axis by the `q x q` matrix `V[a][e] = a^e`. Interpolation applies the
//! inverse matrix, whose column `a` holds the coefficients of the univariate
//! indicator `1 - (x - a)^{q-1}`.

use super::{fold_exponent, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::field::{Elem, Field, FiniteField};
use crate::table::{domain_len, FunctionTable};

/// Largest dense tensor handled, in entries.
const MAX_DENSE: usize = 1 << 24;

fn dense_len(q: usize, n: usize) -> Result<usize> {
    domain_len(q, n)
        .filter(|&l| l <= MAX_DENSE)
        .ok_or_else(|| Error::Precondition(format!("{q}^{n} points is too many to tabulate")))
}

fn finite(field: &Field) -> Result<&FiniteField> {
    field
        .as_finite()
        .ok_or_else(|| Error::Precondition("tables need a finite field".into()))
}

/// Applies `matrix[out][in]` along every axis of a `q^n` tensor in place.
fn transform(ff: &FiniteField, data: &mut [u32], n: usize, matrix: &[Vec<u32>]) {
    let q = ff.q() as usize;
    let mut line = vec![0u32; q];
    for axis in 0..n {
        let stride = q.pow((n - 1 - axis) as u32);
        for base in (0..data.len()).filter(|idx| (idx / stride).is_multiple_of(q)) {
            for (e, slot) in line.iter_mut().enumerate() {
                *slot = data[base + e * stride];
            }
            for (out, row) in matrix.iter().enumerate() {
                let v = row
                    .iter()
                    .zip(&line)
                    .fold(0, |acc, (&m, &x)| ff.add(acc, ff.mul(m, x)));
                data[base + out * stride] = v;
            }
        }
    }
}

pub(super) fn to_table(f: &Polynomial) -> Result<FunctionTable> {
    let ff = finite(&f.field)?;
    let (q, n) = (ff.q() as usize, f.arity);
    let mut data = vec![0u32; dense_len(q, n)?];
    for (m, c) in &f.terms {
        let idx =
            m.0.iter()
                .fold(0, |acc, &e| acc * q + fold_exponent(e, q as u32) as usize);
        data[idx] = ff.add(data[idx], c.as_index().expect("finite coefficient"));
    }
    let vandermonde: Vec<Vec<u32>> = (0..q as u32)
        .map(|a| (0..q as u64).map(|e| ff.pow(a, e)).collect())
        .collect();
    transform(ff, &mut data, n, &vandermonde);
    FunctionTable::new(q, q, n, data)
}

/// Coefficients (lowest first) of `1 - (x - a)^{q-1}` for every `a`.
fn indicator_matrix(ff: &FiniteField) -> Vec<Vec<u32>> {
    let q = ff.q() as usize;
    let mut by_point = Vec::with_capacity(q);
    for a in 0..q as u32 {
        let mut power = vec![1u32];
        for _ in 1..q {
            // power *= (x - a)
            let mut next = vec![0u32; power.len() + 1];
            for (d, &c) in power.iter().enumerate() {
                next[d + 1] = ff.add(next[d + 1], c);
                next[d] = ff.sub(next[d], ff.mul(c, a));
            }
            power = next;
        }
        let mut ind: Vec<u32> = power.iter().map(|&c| ff.neg(c)).collect();
        ind[0] = ff.add(ind[0], 1);
        by_point.push(ind);
    }
    // matrix[e][a]: coefficient of x^e contributed by the value at a
    (0..q)
        .map(|e| (0..q).map(|a| by_point[a][e]).collect())
        .collect()
}

pub(super) fn interpolate(field: &Field, table: &FunctionTable) -> Result<Polynomial> {
    let ff = finite(field)?;
    let q = ff.q() as usize;
    if table.k() != q || table.m() != q {
        return Err(Error::FieldMismatch);
    }
    let n = table.n();
    dense_len(q, n)?;
    let mut data = table.values().to_vec();
    transform(ff, &mut data, n, &indicator_matrix(ff));
    let terms = data
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(idx, &c)| {
            let exps = table.tuple_of(idx);
            (Monomial(exps), Elem::Finite(c))
        });
    Ok(Polynomial::build(field, n, terms, false))
}
