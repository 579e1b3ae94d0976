//! Text syntax for ring elements.
//!
//! ```text
//! integer  = [ "+" | "-" ] digits                 (Z and Z/n)
//! poly     = [ "+" | "-" ] term { ( "+" | "-" ) term }
//! term     = factor { "*" factor }
//! factor   = digits [ "/" digits ] | var [ "^" digits ]
//! ```
//!
//! Whitespace is insignificant. Residues are reduced modulo `n`. Printing
//! produces the canonical form, which parses back to the same element.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{MPoly, Monomial, Ring, RingDescriptor, RingElem, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '/' => out.push((start, Tok::Slash)),
            '^' => out.push((start, Tok::Caret)),
            c if c.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => return Err(Error::parse(start, format!("unexpected character {c:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn digits(&mut self, what: &str) -> Result<BigInt> {
        let at = self.offset();
        match self.next() {
            Some(Tok::Num(n)) => Ok(n),
            _ => Err(Error::parse(at, format!("expected {what}"))),
        }
    }

    /// Polynomial as `(exponent vector, coefficient)` terms.
    fn poly(&mut self) -> Result<Vec<(Vec<u32>, BigRational)>> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (e, c) = self.term()?;
            terms.push((e, if negate { -c } else { c }));
            match self.peek() {
                None => return Ok(terms),
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(_) => return Err(Error::parse(self.offset(), "expected '+', '-' or end")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Vec<u32>, BigRational)> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coeff = BigRational::one();
        loop {
            let at = self.offset();
            match self.next() {
                Some(Tok::Num(n)) => {
                    let mut q = BigRational::from_integer(n);
                    if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        let den_at = self.offset();
                        let d = self.digits("denominator")?;
                        if d.is_zero() {
                            return Err(Error::parse(den_at, "zero denominator"));
                        }
                        q /= BigRational::from_integer(d);
                    }
                    coeff *= q;
                }
                Some(Tok::Ident(name)) => {
                    let Some(i) = self.vars.iter().position(|v| *v == name) else {
                        return Err(Error::parse(at, format!("unknown variable {name:?}")));
                    };
                    let mut e = 1u32;
                    if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        let e_at = self.offset();
                        let n = self.digits("exponent")?;
                        e = u32::try_from(&n)
                            .map_err(|_| Error::parse(e_at, "exponent too large"))?;
                    }
                    exps[i] = exps[i]
                        .checked_add(e)
                        .ok_or_else(|| Error::parse(at, "exponent too large"))?;
                }
                _ => return Err(Error::parse(at, "expected a number or a variable")),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                return Ok((exps, coeff));
            }
        }
    }
}

impl Ring {
    /// Parses an element in canonical form; errors carry a byte offset.
    pub fn parse(&self, text: &str) -> Result<RingElem> {
        let toks = lex(text)?;
        let end = text.len();
        match self.descriptor() {
            RingDescriptor::Integer | RingDescriptor::Modular { .. } => {
                let mut p = Parser {
                    toks,
                    pos: 0,
                    end,
                    vars: &[],
                };
                let neg = match p.peek() {
                    Some(Tok::Minus) => {
                        p.pos += 1;
                        true
                    }
                    Some(Tok::Plus) => {
                        p.pos += 1;
                        false
                    }
                    _ => false,
                };
                let v = p.digits("digits")?;
                if p.peek().is_some() {
                    return Err(Error::parse(p.offset(), "unexpected trailing input"));
                }
                Ok(self.from_bigint(if neg { -v } else { v }))
            }
            RingDescriptor::UniPoly { var } => {
                let vars = [var.clone()];
                let mut p = Parser {
                    toks,
                    pos: 0,
                    end,
                    vars: &vars,
                };
                let terms = p.poly()?;
                let poly = terms.into_iter().fold(UniPoly::zero(), |acc, (e, c)| {
                    &acc + &UniPoly::monomial(c, e[0] as usize)
                });
                Ok(RingElem::Uni(poly))
            }
            RingDescriptor::MultiPoly { vars } => {
                let mut p = Parser {
                    toks,
                    pos: 0,
                    end,
                    vars,
                };
                let terms = p.poly()?;
                Ok(RingElem::Multi(MPoly::from_terms(
                    vars.len(),
                    terms.into_iter().map(|(e, c)| (Monomial::new(e), c)),
                )))
            }
        }
    }

    pub fn parse_all<S: AsRef<str>>(&self, texts: &[S]) -> Result<Vec<RingElem>> {
        texts.iter().map(|t| self.parse(t.as_ref())).collect()
    }

    /// Canonical text form of `a`.
    pub fn format(&self, a: &RingElem) -> String {
        match (self.descriptor(), a) {
            (_, RingElem::Int(v) | RingElem::Mod(v)) => v.to_string(),
            (RingDescriptor::UniPoly { var }, RingElem::Uni(p)) => {
                let vars = [var.clone()];
                format_terms(
                    p.coeffs()
                        .iter()
                        .enumerate()
                        .rev()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(d, c)| (vec![d as u32], c)),
                    &vars,
                )
            }
            (RingDescriptor::MultiPoly { vars }, RingElem::Multi(p)) => {
                format_terms(p.terms().rev().map(|(m, c)| (m.exps().to_vec(), c)), vars)
            }
            _ => format!("{a:?}"),
        }
    }

    pub fn format_list(&self, items: &[RingElem]) -> String {
        let parts: Vec<String> = items.iter().map(|a| self.format(a)).collect();
        format!("[{}]", parts.join(", "))
    }
}

fn format_terms<'a>(
    terms: impl Iterator<Item = (Vec<u32>, &'a BigRational)>,
    vars: &[String],
) -> String {
    let mut out = String::new();
    for (exps, c) in terms {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let mono: Vec<String> = exps
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if mono.is_empty() {
            write!(out, "{mag}").expect("string write");
        } else {
            if !mag.is_one() {
                write!(out, "{mag}*").expect("string write");
            }
            out.push_str(&mono.join("*"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
