//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := literal | 'x' index ['^' integer] | 'DELTA' n | '(' expr ')' ['^' integer]
//! ```
//!
//! Literals follow the field: `0..q-1` over GF(q), `a` or `a/b` over Q.
//! Variables are `x1, x2, ...` and must be used contiguously from `x1`;
//! `DELTA<n>` stands for `prod_{i<j<=n} (x_i - x_j)` and counts as using
//! `x1..xn`.

use polygap::{delta, Field, Polynomial};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Var(usize),
    Delta(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::Open,
            b')' => Tok::Close,
            b'0'..=b'9' => {
                let mut end = digits(i);
                if end < bytes.len() && bytes[end] == b'/' {
                    let den_end = digits(end + 1);
                    if den_end == end + 1 {
                        return Err(err(end + 1, "expected a denominator"));
                    }
                    end = den_end;
                }
                i = end;
                out.push((start, Tok::Num(text[start..end].to_string())));
                continue;
            }
            b'x' => {
                let end = digits(i + 1);
                let index: usize = text[i + 1..end]
                    .parse()
                    .map_err(|_| err(i + 1, "expected a variable index"))?;
                if index == 0 {
                    return Err(err(i + 1, "variables are numbered from x1"));
                }
                i = end;
                out.push((start, Tok::Var(index - 1)));
                continue;
            }
            b'D' if text[i..].starts_with("DELTA") => {
                let end = digits(i + 5);
                let n: usize = text[i + 5..end]
                    .parse()
                    .map_err(|_| err(i + 5, "expected DELTA<n>"))?;
                if n < 2 {
                    return Err(err(i + 5, "DELTA needs n >= 2"));
                }
                i = end;
                out.push((start, Tok::Delta(n)));
                continue;
            }
            _ => {
                return Err(err(
                    i,
                    &format!(
                        "unexpected character '{}'",
                        text[i..].chars().next().unwrap()
                    ),
                ))
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

fn err(position: usize, message: &str) -> ParseError {
    ParseError {
        position,
        message: message.to_string(),
    }
}

#[derive(Debug)]
enum Ast {
    Num(usize, String),
    Var(usize),
    Delta(usize),
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            Ast::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = Ast::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = Ast::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = Ast::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Ast, ParseError> {
        let at = self.offset();
        let Some((_, tok)) = self.toks.get(self.pos).cloned() else {
            return Err(err(at, "unexpected end of input"));
        };
        self.pos += 1;
        let base = match tok {
            Tok::Num(s) => return Ok(Ast::Num(at, s)),
            Tok::Delta(n) => return Ok(Ast::Delta(n)),
            Tok::Var(i) => Ast::Var(i),
            Tok::Open => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(err(self.offset(), "expected ')'"));
                }
                self.pos += 1;
                inner
            }
            _ => return Err(err(at, "expected a literal, variable or '('")),
        };
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.offset();
        match self.toks.get(self.pos) {
            Some((_, Tok::Num(s))) => {
                let e: u32 = s
                    .parse()
                    .map_err(|_| err(at, "expected a nonnegative integer exponent"))?;
                self.pos += 1;
                Ok(Ast::Pow(Box::new(base), e))
            }
            _ => Err(err(at, "expected an exponent")),
        }
    }
}

fn arity_of(ast: &Ast, used: &mut Vec<bool>) {
    let mut mark = |n: usize| {
        if used.len() < n {
            used.resize(n, false);
        }
    };
    match ast {
        Ast::Num(..) => {}
        Ast::Var(i) => {
            mark(i + 1);
            used[*i] = true;
        }
        Ast::Delta(n) => {
            mark(*n);
            used[..*n].iter_mut().for_each(|u| *u = true);
        }
        Ast::Neg(a) | Ast::Pow(a, _) => arity_of(a, used),
        Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) => {
            arity_of(a, used);
            arity_of(b, used);
        }
    }
}

fn build(ast: &Ast, field: &Field, n: usize) -> Result<Polynomial, ParseError> {
    Ok(match ast {
        Ast::Num(at, s) => {
            let c = field
                .parse_literal(s)
                .map_err(|e| err(*at, &e.to_string()))?;
            Polynomial::constant(field, n, c)
        }
        Ast::Var(i) => Polynomial::var(field, n, *i).expect("arity covers every variable"),
        Ast::Delta(d) => {
            let small = delta(field, *d).expect("DELTA index checked while tokenizing");
            small.extend_arity(n).expect("arity covers DELTA")
        }
        Ast::Neg(a) => build(a, field, n)?.neg(),
        Ast::Add(a, b) => &build(a, field, n)? + &build(b, field, n)?,
        Ast::Sub(a, b) => &build(a, field, n)? - &build(b, field, n)?,
        Ast::Mul(a, b) => &build(a, field, n)? * &build(b, field, n)?,
        Ast::Pow(a, e) => build(a, field, n)?.pow(*e),
    })
}

/// Parses `text` into a canonical polynomial over `field`.
pub fn parse_polynomial(text: &str, field: &Field) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        toks: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    let ast = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return Err(err(parser.offset(), "unexpected token"));
    }
    let mut used = Vec::new();
    arity_of(&ast, &mut used);
    if let Some(missing) = used.iter().position(|&u| !u) {
        return Err(err(
            0,
            &format!(
                "variable x{} is missing (variables must be x1..x{})",
                missing + 1,
                used.len()
            ),
        ));
    }
    build(&ast, field, used.len())
}

/// Parses a field spec: `Q`, `p` or `p,k`.
pub fn parse_field(spec: &str) -> Result<Field, polygap::Error> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("q") {
        return Ok(Field::rational());
    }
    let bad = || polygap::Error::Format(format!("field spec '{spec}' is not Q, p or p,k"));
    let (p, k) = match spec.split_once(',') {
        Some((p, k)) => (p.trim(), k.trim()),
        None => (spec, "1"),
    };
    let p: u64 = p.parse().map_err(|_| bad())?;
    let k: u32 = k.parse().map_err(|_| bad())?;
    Field::finite(p, k)
}
