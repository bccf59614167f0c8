//! Exact coefficient fields: GF(p^k) with q = p^k <= 64, and the rationals.
//!
//! A finite field is represented in the polynomial basis over GF(p) modulo a
//! fixed monic irreducible polynomial of degree k. An element with coordinates
//! `c_0 + c_1 a + ... + c_{k-1} a^{k-1}` is encoded as the integer
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`; this integer is also the element's
//! text literal, and the integer order is the lexicographic order of the
//! coordinate vector read from the highest power down. The prime subfield
//! therefore occupies the indices `0..p`.
//!
//! The default modulus for `(p, k)` is the monic irreducible polynomial of
//! degree k whose lower coefficients have the smallest encoding. For the small
//! fields this gives the familiar choices:
//!
//! | field  | modulus           |
//! |--------|-------------------|
//! | GF(4)  | x^2 + x + 1       |
//! | GF(8)  | x^3 + x + 1       |
//! | GF(16) | x^4 + x + 1       |
//! | GF(32) | x^5 + x^2 + 1     |
//! | GF(64) | x^6 + x + 1       |
//! | GF(9)  | x^2 + 1           |
//! | GF(27) | x^3 + 2x + 1      |
//! | GF(25) | x^2 + 2           |
//! | GF(49) | x^2 + 1           |
//!
//! Prime fields use the modulus `x`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest supported finite field order.
pub const MAX_FIELD_ORDER: u64 = 64;

/// A field element. Finite elements carry their integer encoding; rational
/// elements are always in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Finite(u32),
    Rational(BigRational),
}

impl Elem {
    pub fn as_index(&self) -> Option<u32> {
        match self {
            Elem::Finite(i) => Some(*i),
            Elem::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Elem::Rational(r) => Some(r),
            Elem::Finite(_) => None,
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Finite(i) => write!(f, "{i}"),
            Elem::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Arithmetic tables for GF(p^k).
#[derive(Debug)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, lowest coefficient first, length k + 1.
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl FiniteField {
    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(k);
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        let coords: Vec<Vec<u32>> = (0..q).map(|i| to_coords(i, p, k)).collect();
        for a in 0..qs {
            for b in 0..qs {
                let sum: Vec<u32> = coords[a]
                    .iter()
                    .zip(&coords[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * qs + b] = from_coords(&sum, p);
                let prod = gfp_mulmod(&coords[a], &coords[b], &modulus, p);
                mul[a * qs + b] = from_coords(&prod, p);
            }
        }
        let mut neg = vec![0; qs];
        let mut inv = vec![0; qs];
        for a in 0..qs {
            for b in 0..qs {
                if add[a * qs + b] == 0 {
                    neg[a] = b as u32;
                }
                if a != 0 && mul[a * qs + b] == 1 {
                    inv[a] = b as u32;
                }
            }
        }
        FiniteField {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// `a^e` by repeated squaring, with `0^0 = 1`.
    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Image of an integer under the ring map Z -> GF(q).
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// The coordinate vector of an element, lowest power first.
    pub fn coords(&self, a: u32) -> Vec<u32> {
        to_coords(a, self.p, self.k)
    }
}

fn to_coords(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(a % p);
        a /= p;
    }
    out
}

fn from_coords(c: &[u32], p: u32) -> u32 {
    c.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Product of two polynomials over GF(p) reduced modulo a monic modulus.
fn gfp_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        for (t, &m) in modulus.iter().enumerate() {
            let idx = d - k + t;
            prod[idx] = (prod[idx] + (p - c) * m % p) % p;
        }
    }
    prod.truncate(k);
    prod.resize(k, 0);
    prod
}

/// Remainder of `a` modulo a monic `d` over GF(p); both lowest coefficient first.
fn gfp_rem(a: &[u32], d: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dd = d.len() - 1;
    while r.len() > dd {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if c != 0 {
            for (t, &m) in d.iter().enumerate() {
                r[shift + t] = (r[shift + t] + (p - c) * m % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Exhaustive trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = modulus.len() - 1;
    for d in 1..=k / 2 {
        for low in 0..p.pow(d as u32) {
            let mut cand = to_coords(low, p, d as u32);
            cand.push(1);
            if gfp_rem(modulus, &cand, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn default_modulus(p: u32, k: u32) -> Vec<u32> {
    if k == 1 {
        return vec![0, 1];
    }
    (0..p.pow(k))
        .map(|low| {
            let mut m = to_coords(low, p, k);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("an irreducible polynomial exists in every degree")
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[derive(Debug)]
enum Inner {
    Rational,
    Finite(FiniteField),
}

/// A coefficient field: either GF(p^k) or the rationals.
///
/// Cheap to clone; all clones share the same arithmetic tables.
#[derive(Clone, Debug)]
pub struct Field {
    inner: Arc<Inner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        match (&*self.inner, &*other.inner) {
            (Inner::Rational, Inner::Rational) => true,
            (Inner::Finite(a), Inner::Finite(b)) => a.p == b.p && a.modulus == b.modulus,
            _ => false,
        }
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.inner {
            Inner::Rational => write!(f, "Q"),
            Inner::Finite(ff) if ff.k == 1 => write!(f, "GF({})", ff.p),
            Inner::Finite(ff) => write!(f, "GF({}^{})", ff.p, ff.k),
        }
    }
}

impl Field {
    pub fn rational() -> Field {
        Field {
            inner: Arc::new(Inner::Rational),
        }
    }

    /// GF(p^k) with the default modulus.
    pub fn finite(p: u64, k: u32) -> Result<Field> {
        let (p, k) = Self::check_order(p, k)?;
        Ok(Self::from_tables(FiniteField::build(
            p,
            k,
            default_modulus(p, k),
        )))
    }

    /// GF(p^k) with an explicit modulus, given lowest coefficient first. The
    /// leading coefficient may be omitted (length k) or given as 1 (length k + 1).
    pub fn finite_with_modulus(p: u64, k: u32, modulus: &[u64]) -> Result<Field> {
        let (p, k) = Self::check_order(p, k)?;
        let mut m: Vec<u32> = modulus
            .iter()
            .map(|&c| {
                if c < p as u64 {
                    Ok(c as u32)
                } else {
                    Err(Error::InvalidModulus(format!(
                        "coefficient {c} is not below {p}"
                    )))
                }
            })
            .collect::<Result<_>>()?;
        if m.len() == k as usize {
            m.push(1);
        }
        if m.len() != k as usize + 1 || m[k as usize] != 1 {
            return Err(Error::InvalidModulus(format!(
                "expected a monic polynomial of degree {k}"
            )));
        }
        if !is_irreducible(&m, p) {
            return Err(Error::ReducibleModulus(format_gfp_poly(&m)));
        }
        Ok(Self::from_tables(FiniteField::build(p, k, m)))
    }

    /// GF(q) for a prime power q, default modulus.
    pub fn gf(q: u64) -> Result<Field> {
        if q > MAX_FIELD_ORDER {
            return Err(Error::UnsupportedOrder(q));
        }
        let p = (2..=q)
            .find(|d| q.is_multiple_of(*d))
            .ok_or(Error::NotPrime(q))?;
        let mut k = 0;
        let mut r = q;
        while r.is_multiple_of(p) {
            r /= p;
            k += 1;
        }
        if r != 1 {
            return Err(Error::Precondition(format!("{q} is not a prime power")));
        }
        Field::finite(p, k)
    }

    fn check_order(p: u64, k: u32) -> Result<(u32, u32)> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = p.checked_pow(k).unwrap_or(u64::MAX);
        if q > MAX_FIELD_ORDER {
            return Err(Error::UnsupportedOrder(q));
        }
        Ok((p as u32, k))
    }

    fn from_tables(ff: FiniteField) -> Field {
        Field {
            inner: Arc::new(Inner::Finite(ff)),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(&*self.inner, Inner::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&FiniteField> {
        match &*self.inner {
            Inner::Finite(ff) => Some(ff),
            Inner::Rational => None,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u32> {
        self.as_finite().map(|ff| ff.q)
    }

    pub fn characteristic(&self) -> u64 {
        self.as_finite().map_or(0, |ff| ff.p as u64)
    }

    pub fn zero(&self) -> Elem {
        match &*self.inner {
            Inner::Finite(_) => Elem::Finite(0),
            Inner::Rational => Elem::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Elem {
        match &*self.inner {
            Inner::Finite(_) => Elem::Finite(1),
            Inner::Rational => Elem::Rational(BigRational::one()),
        }
    }

    /// Image of an integer under the canonical ring map from Z.
    pub fn from_int(&self, n: i64) -> Elem {
        match &*self.inner {
            Inner::Finite(ff) => Elem::Finite(ff.from_int(n)),
            Inner::Rational => Elem::Rational(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn from_big(&self, n: &BigInt) -> Elem {
        match &*self.inner {
            Inner::Finite(ff) => {
                let p = BigInt::from(ff.p);
                let r = ((n % &p) + &p) % &p;
                Elem::Finite(u32::try_from(r).expect("residue below p"))
            }
            Inner::Rational => Elem::Rational(BigRational::from_integer(n.clone())),
        }
    }

    /// All elements in canonical order; empty for the rationals.
    pub fn elements(&self) -> Vec<Elem> {
        match &*self.inner {
            Inner::Finite(ff) => (0..ff.q).map(Elem::Finite).collect(),
            Inner::Rational => Vec::new(),
        }
    }

    pub fn contains(&self, a: &Elem) -> bool {
        match (&*self.inner, a) {
            (Inner::Finite(ff), Elem::Finite(i)) => *i < ff.q,
            (Inner::Rational, Elem::Rational(_)) => true,
            _ => false,
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Finite(i) => *i == 0,
            Elem::Rational(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.inner, a, b) {
            (Inner::Finite(ff), Elem::Finite(x), Elem::Finite(y)) => Elem::Finite(ff.add(*x, *y)),
            (Inner::Rational, Elem::Rational(x), Elem::Rational(y)) => Elem::Rational(x + y),
            _ => panic!("{}", mismatch(self, a, b)),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&*self.inner, a) {
            (Inner::Finite(ff), Elem::Finite(x)) => Elem::Finite(ff.neg(*x)),
            (Inner::Rational, Elem::Rational(x)) => Elem::Rational(-x),
            _ => panic!("{}", mismatch(self, a, a)),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&*self.inner, a, b) {
            (Inner::Finite(ff), Elem::Finite(x), Elem::Finite(y)) => Elem::Finite(ff.mul(*x, *y)),
            (Inner::Rational, Elem::Rational(x), Elem::Rational(y)) => Elem::Rational(x * y),
            _ => panic!("{}", mismatch(self, a, b)),
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        match (&*self.inner, a) {
            (Inner::Finite(ff), Elem::Finite(x)) => {
                ff.inv(*x).map(Elem::Finite).ok_or(Error::DivisionByZero)
            }
            (Inner::Rational, Elem::Rational(x)) => {
                if x.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Elem::Rational(x.recip()))
                }
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^e` by repeated squaring, with `a^0 = 1`.
    pub fn pow(&self, a: &Elem, e: u64) -> Elem {
        match (&*self.inner, a) {
            (Inner::Finite(ff), Elem::Finite(x)) => Elem::Finite(ff.pow(*x, e)),
            (Inner::Rational, Elem::Rational(x)) => {
                let mut base = x.clone();
                let mut acc = BigRational::one();
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc *= &base;
                    }
                    base = &base * &base;
                    e >>= 1;
                }
                Elem::Rational(acc)
            }
            _ => panic!("{}", mismatch(self, a, a)),
        }
    }

    /// Whether `a^q = a`, with q the field order.
    pub fn frobenius_fixed(&self, a: &Elem) -> Result<bool> {
        let ff = self
            .as_finite()
            .ok_or_else(|| Error::Precondition("Frobenius check needs a finite field".into()))?;
        Ok(self.pow(a, ff.q as u64) == *a)
    }

    /// Parses an element literal: `0..q-1` for finite fields, `a` or `a/b` for Q.
    pub fn parse_literal(&self, text: &str) -> Result<Elem> {
        let text = text.trim();
        let not_in = || Error::NotInField(text.to_string(), self.to_string());
        match &*self.inner {
            Inner::Finite(ff) => {
                let v: u64 = text.parse().map_err(|_| not_in())?;
                if v < ff.q as u64 {
                    Ok(Elem::Finite(v as u32))
                } else {
                    Err(not_in())
                }
            }
            Inner::Rational => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| not_in())?;
                let den: BigInt = den.parse().map_err(|_| not_in())?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Elem::Rational(BigRational::new(num, den)))
            }
        }
    }

    /// True if the element prints with a leading minus sign.
    pub fn is_negative(&self, a: &Elem) -> bool {
        matches!(a, Elem::Rational(r) if r.is_negative())
    }
}

fn mismatch(field: &Field, a: &Elem, b: &Elem) -> String {
    format!("elements {a:?}, {b:?} do not belong to {field}")
}

fn format_gfp_poly(m: &[u32]) -> String {
    let mut parts = Vec::new();
    for (d, &c) in m.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coeff = if c == 1 && d > 0 {
            String::new()
        } else {
            c.to_string()
        };
        parts.push(match d {
            0 => coeff,
            1 => format!("{coeff}x"),
            _ => format!("{coeff}x^{d}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_fields() -> Vec<Field> {
        [2, 3, 4, 5, 7, 8, 9]
            .iter()
            .map(|&q| Field::gf(q).unwrap())
            .collect()
    }

    #[test]
    fn make_field_examples() {
        assert_eq!(Field::finite(2, 1).unwrap().order(), Some(2));
        let gf4 = Field::finite_with_modulus(2, 2, &[1, 1, 1]).unwrap();
        assert_eq!(gf4.order(), Some(4));
        assert_eq!(gf4, Field::finite(2, 2).unwrap());
        assert_eq!(Field::finite(4, 1), Err(Error::NotPrime(4)));
        assert!(matches!(
            Field::finite_with_modulus(2, 2, &[1, 0, 1]),
            Err(Error::ReducibleModulus(_))
        ));
        assert_eq!(Field::finite(2, 7), Err(Error::UnsupportedOrder(128)));
        assert_eq!(Field::finite(67, 1), Err(Error::UnsupportedOrder(67)));
    }

    #[test]
    fn default_moduli_are_documented_ones() {
        let m = |p, k| {
            Field::finite(p, k)
                .unwrap()
                .as_finite()
                .unwrap()
                .modulus()
                .to_vec()
        };
        assert_eq!(m(2, 2), vec![1, 1, 1]);
        assert_eq!(m(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(m(2, 4), vec![1, 1, 0, 0, 1]);
        assert_eq!(m(2, 5), vec![1, 0, 1, 0, 0, 1]);
        assert_eq!(m(2, 6), vec![1, 1, 0, 0, 0, 0, 1]);
        assert_eq!(m(3, 2), vec![1, 0, 1]);
        assert_eq!(m(3, 3), vec![1, 2, 0, 1]);
        assert_eq!(m(5, 2), vec![2, 0, 1]);
        assert_eq!(m(7, 2), vec![1, 0, 1]);
    }

    #[test]
    fn arithmetic_examples() {
        let gf3 = Field::gf(3).unwrap();
        assert_eq!(gf3.add(&Elem::Finite(2), &Elem::Finite(2)), Elem::Finite(1));
        assert_eq!(gf3.inv(&Elem::Finite(2)), Ok(Elem::Finite(2)));
        assert_eq!(gf3.inv(&Elem::Finite(0)), Err(Error::DivisionByZero));
        let q = Field::rational();
        let a = q.parse_literal("3/4").unwrap();
        let b = q.parse_literal("1/4").unwrap();
        assert_eq!(q.add(&a, &b), q.one());
        assert_eq!(q.add(&a, &b).to_string(), "1");
        assert_eq!(q.parse_literal("6/-8").unwrap().to_string(), "-3/4");
        assert_eq!(q.inv(&q.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn literals() {
        let gf4 = Field::gf(4).unwrap();
        assert_eq!(gf4.parse_literal("3"), Ok(Elem::Finite(3)));
        assert!(matches!(gf4.parse_literal("4"), Err(Error::NotInField(..))));
        assert!(matches!(
            gf4.parse_literal("1/2"),
            Err(Error::NotInField(..))
        ));
        assert_eq!(
            Field::rational().parse_literal("1/0"),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            let els = f.elements();
            let (zero, one) = (f.zero(), f.one());
            for a in &els {
                assert_eq!(f.add(a, &zero), *a);
                assert_eq!(f.mul(a, &one), *a);
                assert_eq!(f.add(a, &f.neg(a)), zero);
                if !f.is_zero(a) {
                    assert_eq!(f.mul(a, &f.inv(a).unwrap()), one, "{f}: inverse of {a}");
                }
                for b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in &els {
                        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                        assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_everything() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 59, 61, 64] {
            let f = Field::gf(q).unwrap();
            for a in f.elements() {
                assert!(f.frobenius_fixed(&a).unwrap(), "GF({q}) element {a}");
            }
        }
    }

    #[test]
    fn gf9_generator_frobenius() {
        // In GF(9) = GF(3)[a]/(a^2 + 1), the element 1 + a (encoding 4) has
        // order 8. Repeated squaring: g^2 = 2a, g^4 = 2, g^8 = 1, g^9 = g.
        let f = Field::gf(9).unwrap();
        let g = Elem::Finite(4);
        assert_eq!(f.pow(&g, 2), Elem::Finite(6));
        assert_eq!(f.pow(&g, 4), Elem::Finite(2));
        assert_eq!(f.pow(&g, 8), Elem::Finite(1));
        assert!(f.frobenius_fixed(&g).unwrap());
        assert!(Field::gf(2)
            .unwrap()
            .frobenius_fixed(&Elem::Finite(1))
            .unwrap());
    }

    #[test]
    fn prime_subfield_embedding() {
        let f = Field::gf(9).unwrap();
        assert_eq!(f.from_int(2), Elem::Finite(2));
        assert_eq!(f.from_int(-1), Elem::Finite(2));
        assert_eq!(f.from_int(3), Elem::Finite(0));
        let two = f.from_int(2);
        assert_eq!(f.mul(&two, &f.inv(&two).unwrap()), f.one());
    }

    #[test]
    fn every_supported_order_builds() {
        for q in 2..=64u64 {
            let r = Field::gf(q);
            let prime_power = (2..=q)
                .find(|d| q % d == 0)
                .map(|p| {
                    let mut r = q;
                    while r % p == 0 {
                        r /= p;
                    }
                    r == 1
                })
                .unwrap();
            assert_eq!(r.is_ok(), prime_power, "q = {q}");
        }
    }

    #[test]
    fn rational_big_values_round_trip() {
        let f = Field::rational();
        let a = f.parse_literal("123456789012345678901234567890/7").unwrap();
        let b = f
            .parse_literal("-98765432109876543210987654321/13")
            .unwrap();
        assert_eq!(f.sub(&f.add(&a, &b), &b), a);
    }
}
