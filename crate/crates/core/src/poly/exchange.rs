//! Line-oriented polynomial exchange format, version 1:
//!
//! ```text
//! polygap-poly 1
//! field 5 1 4
//! 1 0 0 0 1
//! 4 1 1 0 0
//! ```
//!
//! The `field` line is `field p k n` for GF(p^k) with the default modulus, or
//! `field Q n` for the rationals. Each further line is a coefficient literal
//! followed by the `n` exponents. Blank lines and `#` comments are ignored.

use super::Polynomial;
use crate::error::{Error, Result};
use crate::field::Field;

const MAGIC: &str = "polygap-poly";
const VERSION: &str = "1";

pub(super) fn write(f: &Polynomial) -> String {
    let mut out = format!("{MAGIC} {VERSION}\n");
    match f.field.as_finite() {
        Some(ff) => out.push_str(&format!("field {} {} {}\n", ff.p(), ff.k(), f.arity)),
        None => out.push_str(&format!("field Q {}\n", f.arity)),
    }
    for (m, c) in f.terms.iter().rev() {
        out.push_str(&c.to_string());
        for e in m.exponents() {
            out.push_str(&format!(" {e}"));
        }
        out.push('\n');
    }
    out
}

pub(super) fn read(text: &str) -> Result<Polynomial> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let bad = |msg: &str| Error::Format(msg.to_string());
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| bad("empty input"))?
        .split_whitespace()
        .collect();
    if header != [MAGIC, VERSION] {
        return Err(bad("expected header `polygap-poly 1`"));
    }
    let spec: Vec<&str> = lines
        .next()
        .ok_or_else(|| bad("missing field line"))?
        .split_whitespace()
        .collect();
    let parse_num = |s: &str| {
        s.parse::<u64>()
            .map_err(|_| bad("bad number in field line"))
    };
    let (field, arity) = match spec.as_slice() {
        ["field", "Q", n] => (Field::rational(), parse_num(n)? as usize),
        ["field", p, k, n] => (
            Field::finite(parse_num(p)?, parse_num(k)? as u32)?,
            parse_num(n)? as usize,
        ),
        _ => return Err(bad("expected `field p k n` or `field Q n`")),
    };
    let terms = lines
        .map(|line| {
            let mut parts = line.split_whitespace();
            let c = field.parse_literal(parts.next().unwrap_or(""))?;
            let exps = parts
                .map(|e| e.parse::<u32>().map_err(|_| bad("bad exponent")))
                .collect::<Result<Vec<u32>>>()?;
            Ok((exps, c))
        })
        .collect::<Result<Vec<_>>>()?;
    Polynomial::from_terms_raw(&field, arity, terms)
}
