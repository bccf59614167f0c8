//! Seeded random polynomials for the verification suites.
//!
//! Every instance `i` of a battery draws from its own ChaCha8 stream
//! `(seed, i)`, so results do not depend on how work is split across threads.

use num_bigint::BigInt;
use num_rational::BigRational;
use polygap::{Elem, Field, Polynomial};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn instance_rng(seed: u64, instance: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(instance);
    rng
}

/// A uniformly random element; rationals are `a/b` with `|a| <= 5`, `1 <= b <= 3`.
pub fn element(rng: &mut ChaCha8Rng, field: &Field) -> Elem {
    match field.order() {
        Some(q) => Elem::Finite(rng.gen_range(0..q)),
        None => Elem::Rational(BigRational::new(
            BigInt::from(rng.gen_range(-5i64..=5)),
            BigInt::from(rng.gen_range(1i64..=3)),
        )),
    }
}

pub fn nonzero_element(rng: &mut ChaCha8Rng, field: &Field) -> Elem {
    loop {
        let c = element(rng, field);
        if !field.is_zero(&c) {
            return c;
        }
    }
}

/// Up to `max_terms` terms in the variables `vars` of an `n`-ary ring, each
/// exponent at most `max_exp`, with nonzero coefficients.
pub fn polynomial(
    rng: &mut ChaCha8Rng,
    field: &Field,
    n: usize,
    vars: &[usize],
    max_terms: usize,
    max_exp: u32,
) -> Polynomial {
    let count = rng.gen_range(1..=max_terms);
    let terms: Vec<(Vec<u32>, Elem)> = (0..count)
        .map(|_| {
            let mut e = vec![0u32; n];
            for &v in vars {
                e[v] = rng.gen_range(0..=max_exp);
            }
            (e, nonzero_element(rng, field))
        })
        .collect();
    Polynomial::from_terms(field, n, terms).expect("generated terms fit the ring")
}

/// A polynomial in which exactly the variables `vars` occur.
pub fn polynomial_on(
    rng: &mut ChaCha8Rng,
    field: &Field,
    n: usize,
    vars: &[usize],
    max_exp: u32,
) -> Polynomial {
    if vars.is_empty() {
        return Polynomial::constant(field, n, element(rng, field));
    }
    loop {
        let f = polynomial(rng, field, n, vars, vars.len() + 2, max_exp);
        if f.occurring_variables() == vars {
            return f;
        }
    }
}

/// A random `k`-subset of `0..n` in increasing order.
pub fn subset(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let mut picked = rand::seq::index::sample(rng, n, k).into_vec();
    picked.sort_unstable();
    picked
}

/// Monomial orbits allowed by conditions (A) and (B) over GF(q) in `n`
/// variables: sets of distinct nonzero exponents of size at most `n`, as
/// bit masks over `1..q`. The empty set is the constant orbit.
pub fn ab_orbits(q: u32, n: usize) -> Vec<u64> {
    (0u64..1 << (q - 1))
        .filter(|s| s.count_ones() as usize <= n)
        .collect()
}

/// Every exponent vector whose nonzero entries are exactly the exponent set `orbit`.
pub fn orbit_monomials(orbit: u64, n: usize) -> Vec<Vec<u32>> {
    let exps: Vec<u32> = (0..64)
        .filter(|b| orbit >> b & 1 == 1)
        .map(|b| b + 1)
        .collect();
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    place(&exps, 0, &mut current, &mut out);
    out
}

fn place(exps: &[u32], next: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if next == exps.len() {
        out.push(current.clone());
        return;
    }
    for slot in 0..current.len() {
        if current[slot] == 0 {
            current[slot] = exps[next];
            place(exps, next + 1, current, out);
            current[slot] = 0;
        }
    }
}

/// The polynomial with coefficient `coeffs[c]` on every monomial of orbit `orbits[c]`.
pub fn ab_polynomial(field: &Field, n: usize, orbits: &[u64], coeffs: &[Elem]) -> Polynomial {
    let terms = orbits.iter().zip(coeffs).flat_map(|(&o, c)| {
        orbit_monomials(o, n)
            .into_iter()
            .map(move |e| (e, c.clone()))
    });
    Polynomial::from_terms(field, n, terms).expect("orbit monomials fit the ring")
}

/// A random polynomial satisfying (A) and (B).
pub fn random_ab_polynomial(rng: &mut ChaCha8Rng, field: &Field, n: usize) -> Polynomial {
    let q = field.order().expect("finite field");
    let orbits = ab_orbits(q, n);
    let coeffs: Vec<Elem> = orbits.iter().map(|_| element(rng, field)).collect();
    ab_polynomial(field, n, &orbits, &coeffs)
}
