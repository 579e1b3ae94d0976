//! Concrete computable commutative rings.
//!
//! Four ring families are supported. The integers, the residue rings
//! `Z/n` and the univariate rational polynomials form the gcd-certifiable
//! tier: ideal and radical membership reduce to a single generator via
//! extended gcd. Multivariate rational polynomials form the second tier and
//! delegate membership questions to [`crate::groebner`].

pub mod int;
pub mod mpoly;
pub mod upoly;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::audit::{self, CertKind};
use crate::cert::{AnnPowerWitness, RadicalCert};
use crate::error::{Error, Result};
use crate::groebner;

pub use mpoly::{MPoly, Monomial};
pub use upoly::UniPoly;

/// Radical exponent searches give up past this bound in the tier-2 rings.
pub const RADICAL_EXPONENT_CAP: u32 = 64;

/// Default S-pair budget for Buchberger's algorithm.
pub const DEFAULT_PAIR_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integer,
    Modular { modulus: BigInt },
    UniPoly { var: String },
    MultiPoly { vars: Vec<String> },
}

/// How membership questions are decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    /// Every finitely generated ideal is principal with a computable generator.
    Principal,
    /// Membership goes through Gröbner bases.
    Groebner,
}

/// An element in canonical form, so structural equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElem {
    Int(BigInt),
    /// Residue in `[0, modulus)`.
    Mod(BigInt),
    Uni(UniPoly),
    Multi(MPoly),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Pow(u32),
    Eq,
    Zero,
    One,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithValue {
    Elem(RingElem),
    Bool(bool),
}

#[derive(Debug, Clone)]
pub struct Ring {
    desc: RingDescriptor,
    pair_budget: usize,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.desc == other.desc
    }
}

impl Eq for Ring {}

fn mismatch(what: &str) -> ! {
    panic!("descriptor mismatch: {what}")
}

impl Ring {
    pub fn new(desc: RingDescriptor) -> Result<Ring> {
        match &desc {
            RingDescriptor::Modular { modulus } if *modulus < BigInt::from(2) => {
                return Err(Error::InvalidDescriptor(format!(
                    "modulus must be at least 2, got {modulus}"
                )));
            }
            RingDescriptor::UniPoly { var } if !is_identifier(var) => {
                return Err(Error::InvalidDescriptor(format!(
                    "invalid variable name {var:?}"
                )));
            }
            RingDescriptor::MultiPoly { vars } => {
                if vars.is_empty() {
                    return Err(Error::InvalidDescriptor(
                        "multivariate ring needs at least one variable".into(),
                    ));
                }
                let mut seen = HashSet::new();
                for v in vars {
                    if !is_identifier(v) {
                        return Err(Error::InvalidDescriptor(format!(
                            "invalid variable name {v:?}"
                        )));
                    }
                    if !seen.insert(v) {
                        return Err(Error::InvalidDescriptor(format!("duplicate variable {v:?}")));
                    }
                }
            }
            _ => {}
        }
        Ok(Ring {
            desc,
            pair_budget: DEFAULT_PAIR_BUDGET,
        })
    }

    pub fn integers() -> Ring {
        Ring::new(RingDescriptor::Integer).expect("valid")
    }

    /// `Z/n`; panics if `n < 2`.
    pub fn modular(n: u64) -> Ring {
        Ring::new(RingDescriptor::Modular {
            modulus: BigInt::from(n),
        })
        .expect("modulus must be at least 2")
    }

    pub fn univariate(var: &str) -> Ring {
        Ring::new(RingDescriptor::UniPoly { var: var.into() }).expect("valid variable name")
    }

    pub fn multivariate(vars: &[&str]) -> Result<Ring> {
        Ring::new(RingDescriptor::MultiPoly {
            vars: vars.iter().map(|v| v.to_string()).collect(),
        })
    }

    pub fn with_pair_budget(mut self, budget: usize) -> Ring {
        self.pair_budget = budget;
        self
    }

    pub fn pair_budget(&self) -> usize {
        self.pair_budget
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.desc
    }

    pub fn tier(&self) -> Tier {
        match self.desc {
            RingDescriptor::MultiPoly { .. } => Tier::Groebner,
            _ => Tier::Principal,
        }
    }

    pub fn is_domain(&self) -> bool {
        !matches!(self.desc, RingDescriptor::Modular { .. })
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match &self.desc {
            RingDescriptor::Modular { modulus } => Some(modulus),
            _ => None,
        }
    }

    /// Number of polynomial variables in the tier-2 ring.
    pub fn nvars(&self) -> Option<usize> {
        match &self.desc {
            RingDescriptor::MultiPoly { vars } => Some(vars.len()),
            _ => None,
        }
    }

    /// Checks that `a` is a valid canonical element of this ring.
    pub fn check(&self, a: &RingElem) -> Result<()> {
        let ok = match (&self.desc, a) {
            (RingDescriptor::Integer, RingElem::Int(_)) => true,
            (RingDescriptor::Modular { modulus }, RingElem::Mod(r)) => {
                !r.is_negative() && r < modulus
            }
            (RingDescriptor::UniPoly { .. }, RingElem::Uni(_)) => true,
            (RingDescriptor::MultiPoly { vars }, RingElem::Multi(p)) => p.nvars() == vars.len(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch(format!(
                "{a:?} is not an element of {:?}",
                self.desc
            )))
        }
    }

    pub fn check_all(&self, elems: &[RingElem]) -> Result<()> {
        elems.iter().try_for_each(|a| self.check(a))
    }

    pub fn from_bigint(&self, v: BigInt) -> RingElem {
        match &self.desc {
            RingDescriptor::Integer => RingElem::Int(v),
            RingDescriptor::Modular { modulus } => RingElem::Mod(v.mod_floor(modulus)),
            RingDescriptor::UniPoly { .. } => {
                RingElem::Uni(UniPoly::constant(BigRational::from_integer(v)))
            }
            RingDescriptor::MultiPoly { vars } => {
                RingElem::Multi(MPoly::constant(vars.len(), BigRational::from_integer(v)))
            }
        }
    }

    pub fn from_int(&self, v: i64) -> RingElem {
        self.from_bigint(BigInt::from(v))
    }

    /// Rational constant; `None` in the integer and modular rings unless the
    /// value is integral.
    pub fn from_rational(&self, q: BigRational) -> Option<RingElem> {
        match &self.desc {
            RingDescriptor::UniPoly { .. } => Some(RingElem::Uni(UniPoly::constant(q))),
            RingDescriptor::MultiPoly { vars } => Some(RingElem::Multi(MPoly::constant(vars.len(), q))),
            _ => q.is_integer().then(|| self.from_bigint(q.to_integer())),
        }
    }

    /// The `i`-th polynomial variable.
    pub fn var(&self, i: usize) -> Option<RingElem> {
        match &self.desc {
            RingDescriptor::UniPoly { .. } if i == 0 => Some(RingElem::Uni(UniPoly::monomial(
                BigRational::one(),
                1,
            ))),
            RingDescriptor::MultiPoly { vars } if i < vars.len() => {
                Some(RingElem::Multi(MPoly::var(vars.len(), i)))
            }
            _ => None,
        }
    }

    pub fn zero(&self) -> RingElem {
        self.from_int(0)
    }

    pub fn one(&self) -> RingElem {
        self.from_int(1)
    }

    pub fn is_zero(&self, a: &RingElem) -> bool {
        match a {
            RingElem::Int(v) | RingElem::Mod(v) => v.is_zero(),
            RingElem::Uni(p) => p.is_zero(),
            RingElem::Multi(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self, a: &RingElem) -> bool {
        *a == self.one()
    }

    fn reduce(&self, v: BigInt) -> RingElem {
        match &self.desc {
            RingDescriptor::Modular { modulus } => RingElem::Mod(v.mod_floor(modulus)),
            _ => RingElem::Int(v),
        }
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match (a, b) {
            (RingElem::Int(x), RingElem::Int(y)) | (RingElem::Mod(x), RingElem::Mod(y)) => {
                self.reduce(x + y)
            }
            (RingElem::Uni(x), RingElem::Uni(y)) => RingElem::Uni(x + y),
            (RingElem::Multi(x), RingElem::Multi(y)) => RingElem::Multi(x + y),
            _ => mismatch("add"),
        }
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        match a {
            RingElem::Int(x) | RingElem::Mod(x) => self.reduce(-x),
            RingElem::Uni(x) => RingElem::Uni(-x),
            RingElem::Multi(x) => RingElem::Multi(-x),
        }
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        match (a, b) {
            (RingElem::Int(x), RingElem::Int(y)) | (RingElem::Mod(x), RingElem::Mod(y)) => {
                self.reduce(x * y)
            }
            (RingElem::Uni(x), RingElem::Uni(y)) => RingElem::Uni(x * y),
            (RingElem::Multi(x), RingElem::Multi(y)) => RingElem::Multi(x * y),
            _ => mismatch("mul"),
        }
    }

    pub fn pow(&self, a: &RingElem, e: u32) -> RingElem {
        match a {
            RingElem::Int(x) => RingElem::Int(Pow::pow(x, e)),
            RingElem::Mod(x) => {
                let m = self.modulus().unwrap_or_else(|| mismatch("pow"));
                RingElem::Mod(x.modpow(&BigInt::from(e), m))
            }
            RingElem::Uni(x) => RingElem::Uni(x.pow(e)),
            RingElem::Multi(x) => RingElem::Multi(x.pow(e)),
        }
    }

    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a RingElem>) -> RingElem {
        items.into_iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a RingElem>) -> RingElem {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// `sum coeffs[i] * gens[i]`, folded left to right.
    pub fn combine(&self, coeffs: &[RingElem], gens: &[RingElem]) -> RingElem {
        debug_assert_eq!(coeffs.len(), gens.len());
        coeffs
            .iter()
            .zip(gens)
            .fold(self.zero(), |acc, (c, g)| self.add(&acc, &self.mul(c, g)))
    }

    /// Checked entry point for the basic ring operations.
    pub fn arith(&self, op: ArithOp, args: &[RingElem]) -> Result<ArithValue> {
        self.check_all(args)?;
        let arity = match op {
            ArithOp::Zero | ArithOp::One => 0,
            ArithOp::Neg | ArithOp::Pow(_) => 1,
            ArithOp::Add | ArithOp::Mul | ArithOp::Eq => 2,
        };
        if args.len() != arity {
            return Err(Error::DescriptorMismatch(format!(
                "{op:?} takes {arity} arguments, got {}",
                args.len()
            )));
        }
        Ok(match op {
            ArithOp::Add => ArithValue::Elem(self.add(&args[0], &args[1])),
            ArithOp::Mul => ArithValue::Elem(self.mul(&args[0], &args[1])),
            ArithOp::Neg => ArithValue::Elem(self.neg(&args[0])),
            ArithOp::Pow(e) => ArithValue::Elem(self.pow(&args[0], e)),
            ArithOp::Eq => ArithValue::Bool(args[0] == args[1]),
            ArithOp::Zero => ArithValue::Elem(self.zero()),
            ArithOp::One => ArithValue::Elem(self.one()),
        })
    }

    /// The inverse of `a`, if `a` is a unit.
    /// Unit multiple of `a` in a fixed normal form: nonnegative integers,
    /// monic polynomials. Residues are returned unchanged.
    pub fn monic(&self, a: &RingElem) -> RingElem {
        match a {
            RingElem::Int(x) => RingElem::Int(x.abs()),
            RingElem::Mod(_) => a.clone(),
            RingElem::Uni(p) if !p.is_zero() => RingElem::Uni(p.monic()),
            RingElem::Multi(p) if !p.is_zero() => RingElem::Multi(p.monic()),
            _ => a.clone(),
        }
    }

    pub fn is_unit(&self, a: &RingElem) -> Option<RingElem> {
        let inv = match a {
            RingElem::Int(x) => x.abs().is_one().then(|| RingElem::Int(x.clone())),
            RingElem::Mod(x) => {
                let m = self.modulus().unwrap_or_else(|| mismatch("is_unit"));
                let (g, s, _) = int::xgcd(x, m);
                g.is_one().then(|| RingElem::Mod(s.mod_floor(m)))
            }
            RingElem::Uni(p) => match (p.is_constant(), p.leading()) {
                (true, Some(c)) => Some(RingElem::Uni(UniPoly::constant(c.recip()))),
                _ => None,
            },
            RingElem::Multi(p) => (p.is_constant() && !p.is_zero())
                .then(|| RingElem::Multi(MPoly::constant(p.nvars(), p.constant_term().recip()))),
        };
        debug_assert!(inv.as_ref().is_none_or(|b| self.is_one(&self.mul(a, b))));
        inv
    }

    /// Coefficients `c` with `sum c[i] * gens[i] = x`, or `None` when `x` is
    /// not in the ideal. The only error is an exhausted Gröbner budget.
    pub fn ideal_membership(&self, x: &RingElem, gens: &[RingElem]) -> Result<Option<Vec<RingElem>>> {
        let coeffs: Option<Vec<RingElem>> = match self.tier() {
            Tier::Principal => {
                let p = self.principal(gens);
                p.quotient(self, x)
                    .map(|q| p.coeffs.iter().map(|c| self.mul(c, &q)).collect())
            }
            Tier::Groebner => {
                let nvars = self.nvars().expect("tier-2 ring");
                let gens = as_mpolys(gens);
                groebner::mv_ideal_membership(nvars, as_mpoly(x), &gens, self.pair_budget)?
                    .map(|cs| cs.into_iter().map(RingElem::Multi).collect())
            }
        };
        if let Some(cs) = &coeffs {
            let ok = audit::record(CertKind::Combination, self.combine(cs, gens) == *x);
            if !ok {
                return Err(Error::Internal(format!(
                    "ideal membership coefficients for {x:?} failed to re-verify"
                )));
            }
        }
        Ok(coeffs)
    }

    /// A certificate `x^k = sum c[i] * gens[i]` with minimal `k >= 1`, or
    /// `None` when `x` is not in the radical of the ideal.
    pub fn radical_membership(&self, x: &RingElem, gens: &[RingElem]) -> Result<Option<RadicalCert>> {
        let cert = match self.tier() {
            Tier::Principal => self.principal_radical(x, gens)?,
            Tier::Groebner => {
                let nvars = self.nvars().expect("tier-2 ring");
                let gens = as_mpolys(gens);
                groebner::mv_radical_membership(nvars, as_mpoly(x), &gens, self.pair_budget)?.map(
                    |(k, cs)| RadicalCert {
                        k,
                        coeffs: cs.into_iter().map(RingElem::Multi).collect(),
                    },
                )
            }
        };
        if let Some(c) = &cert {
            if !audit::record(CertKind::Radical, c.verify(self, x, gens)) {
                return Err(Error::Internal(format!(
                    "radical certificate for {x:?} failed to re-verify"
                )));
            }
        }
        Ok(cert)
    }

    fn principal_radical(&self, x: &RingElem, gens: &[RingElem]) -> Result<Option<RadicalCert>> {
        if self.is_zero(x) {
            return Ok(Some(RadicalCert {
                k: 1,
                coeffs: vec![self.zero(); gens.len()],
            }));
        }
        let p = self.principal(gens);
        // strip from the generator every factor it shares with x; x is in the
        // radical iff nothing but a unit is left
        let (member, bound) = match (&p.generator, x) {
            (Generator::Int(g), RingElem::Int(v) | RingElem::Mod(v)) => {
                if g.is_zero() {
                    return Ok(None);
                }
                let mut g = g.abs();
                loop {
                    let d = g.gcd(v);
                    if d.is_one() {
                        break;
                    }
                    g /= d;
                }
                let bound = match self.modulus() {
                    Some(m) => m.bits(),
                    None => p.generator_bits(),
                };
                (g.is_one(), bound)
            }
            (Generator::Uni(g), RingElem::Uni(v)) => {
                if g.is_zero() {
                    return Ok(None);
                }
                let mut g = g.clone();
                loop {
                    let (d, _, _) = UniPoly::xgcd(&g, v);
                    if d.is_constant() {
                        break;
                    }
                    g = g.div_exact(&d).expect("gcd divides");
                }
                (g.is_constant(), p.generator_bits())
            }
            _ => mismatch("radical_membership"),
        };
        if !member {
            return Ok(None);
        }
        let cap = u32::try_from(bound.max(1))
            .unwrap_or(u32::MAX)
            .max(RADICAL_EXPONENT_CAP);
        let mut power = x.clone();
        for k in 1..=cap {
            if let Some(q) = p.quotient(self, &power) {
                let coeffs = p.coeffs.iter().map(|c| self.mul(c, &q)).collect();
                return Ok(Some(RadicalCert { k, coeffs }));
            }
            power = self.mul(&power, x);
        }
        Err(Error::Internal(format!(
            "radical member {x:?} has no certificate with exponent <= {cap}"
        )))
    }

    /// Minimal `k` with `f^k * x = 0`, if any exists.
    pub fn ann_power(&self, f: &RingElem, x: &RingElem) -> Option<AnnPowerWitness> {
        let k = if self.is_zero(x) {
            Some(0)
        } else {
            match self.modulus() {
                None => self.is_zero(f).then_some(1),
                Some(m) => {
                    let bound = u32::try_from(int::ceil_log2(m)).unwrap_or(u32::MAX);
                    let mut acc = x.clone();
                    let mut found = None;
                    for k in 0..=bound {
                        if self.is_zero(&acc) {
                            found = Some(k);
                            break;
                        }
                        acc = self.mul(&acc, f);
                    }
                    found
                }
            }
        };
        k.map(|k| {
            let w = AnnPowerWitness { k };
            assert!(
                audit::record(CertKind::AnnPower, w.verify(self, f, x)),
                "annihilator witness failed to re-verify"
            );
            w
        })
    }

    /// A single generator of `<gens>` in the tier-1 rings: nonnegative in
    /// `Z`, a divisor of the modulus in `Z/n`, monic in `Q[x]`. `None` in
    /// tier-2.
    pub fn gcd(&self, gens: &[RingElem]) -> Option<RingElem> {
        (self.tier() == Tier::Principal).then(|| self.principal(gens).generator_elem(self))
    }

    fn principal(&self, gens: &[RingElem]) -> Principal {
        match &self.desc {
            RingDescriptor::Integer => {
                let ints: Vec<BigInt> = gens.iter().map(|g| as_int(g).clone()).collect();
                let (g, cs) = int::gcd_with_coeffs(&ints);
                Principal {
                    generator: Generator::Int(g),
                    coeffs: cs.into_iter().map(RingElem::Int).collect(),
                }
            }
            RingDescriptor::Modular { modulus } => {
                let mut ints: Vec<BigInt> = gens.iter().map(|g| as_int(g).clone()).collect();
                ints.push(modulus.clone());
                let (g, mut cs) = int::gcd_with_coeffs(&ints);
                cs.pop();
                Principal {
                    generator: Generator::Int(g),
                    coeffs: cs.into_iter().map(|c| self.reduce(c)).collect(),
                }
            }
            RingDescriptor::UniPoly { .. } => {
                let polys: Vec<UniPoly> = gens
                    .iter()
                    .map(|g| match g {
                        RingElem::Uni(p) => p.clone(),
                        _ => mismatch("univariate generator"),
                    })
                    .collect();
                let (g, cs) = UniPoly::gcd_with_coeffs(&polys);
                Principal {
                    generator: Generator::Uni(g),
                    coeffs: cs.into_iter().map(RingElem::Uni).collect(),
                }
            }
            RingDescriptor::MultiPoly { .. } => unreachable!("tier-2 rings are not principal"),
        }
    }
}

enum Generator {
    /// Over the integers; for `Z/n` this divides `n`.
    Int(BigInt),
    Uni(UniPoly),
}

/// `generator = sum coeffs[i] * gens[i]`.
struct Principal {
    generator: Generator,
    coeffs: Vec<RingElem>,
}

impl Principal {
    /// `q` with `q * generator = x`, if the generator divides `x`.
    fn quotient(&self, ring: &Ring, x: &RingElem) -> Option<RingElem> {
        match (&self.generator, x) {
            (Generator::Int(g), RingElem::Int(v) | RingElem::Mod(v)) => {
                if g.is_zero() {
                    return v.is_zero().then(|| ring.zero());
                }
                let (q, r) = v.div_rem(g);
                r.is_zero().then(|| ring.reduce(q))
            }
            (Generator::Uni(g), RingElem::Uni(v)) => v.div_exact(g).map(RingElem::Uni),
            _ => mismatch("ideal_membership"),
        }
    }

    fn generator_elem(&self, ring: &Ring) -> RingElem {
        match &self.generator {
            Generator::Int(g) => ring.reduce(g.clone()),
            Generator::Uni(g) => RingElem::Uni(g.clone()),
        }
    }

    /// Bound on the multiplicity of any irreducible factor of the generator.
    fn generator_bits(&self) -> u64 {
        match &self.generator {
            Generator::Int(g) => g.bits(),
            Generator::Uni(g) => g.degree().unwrap_or(0) as u64,
        }
    }
}

fn as_int(a: &RingElem) -> &BigInt {
    match a {
        RingElem::Int(v) | RingElem::Mod(v) => v,
        _ => mismatch("integer element"),
    }
}

fn as_mpoly(a: &RingElem) -> &MPoly {
    match a {
        RingElem::Multi(p) => p,
        _ => mismatch("multivariate element"),
    }
}

fn as_mpolys(gens: &[RingElem]) -> Vec<MPoly> {
    gens.iter().map(|g| as_mpoly(g).clone()).collect()
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(r: &Ring, v: &[i64]) -> Vec<RingElem> {
        v.iter().map(|&x| r.from_int(x)).collect()
    }

    fn qx(c: &[i64]) -> RingElem {
        RingElem::Uni(UniPoly::from_ints(c))
    }

    #[test]
    fn modular_mul_reduces() {
        let r = Ring::modular(12);
        assert_eq!(r.mul(&r.from_int(7), &r.from_int(4)), r.from_int(4));
    }

    #[test]
    fn poly_cancellation() {
        let r = Ring::univariate("x");
        assert_eq!(r.add(&qx(&[0, -1, 1]), &qx(&[0, 1])), qx(&[0, 0, 1]));
    }

    #[test]
    fn pow_zero_is_one() {
        for r in [Ring::integers(), Ring::modular(12), Ring::univariate("x")] {
            assert_eq!(r.pow(&r.from_int(5), 0), r.one());
            assert_eq!(r.pow(&r.zero(), 0), r.one());
        }
    }

    #[test]
    fn arith_checks_descriptor() {
        let z = Ring::integers();
        let m = Ring::modular(5);
        assert!(z.arith(ArithOp::Add, &[z.one(), m.one()]).is_err());
        assert!(m.arith(ArithOp::Neg, &[RingElem::Mod(BigInt::from(7))]).is_err());
        assert_eq!(
            z.arith(ArithOp::Eq, &[z.one(), z.one()]).unwrap(),
            ArithValue::Bool(true)
        );
    }

    #[test]
    fn descriptor_validation() {
        assert!(Ring::new(RingDescriptor::Modular { modulus: BigInt::from(1) }).is_err());
        assert!(Ring::multivariate(&[]).is_err());
        assert!(Ring::multivariate(&["x", "x"]).is_err());
        assert!(Ring::multivariate(&["x", "y"]).is_ok());
    }

    #[test]
    fn units() {
        let z = Ring::integers();
        assert_eq!(z.is_unit(&z.from_int(-1)), Some(z.from_int(-1)));
        assert_eq!(z.is_unit(&z.from_int(2)), None);
        let m = Ring::modular(12);
        assert_eq!(m.is_unit(&m.from_int(5)), Some(m.from_int(5)));
        assert_eq!(m.is_unit(&m.from_int(4)), None);
        let q = Ring::univariate("x");
        assert_eq!(q.is_unit(&qx(&[0, 1])), None);
        assert!(q.is_unit(&qx(&[3])).is_some());
        assert_eq!(q.is_unit(&q.zero()), None);
    }

    #[test]
    fn ideal_membership_examples() {
        let z = Ring::integers();
        assert_eq!(
            z.ideal_membership(&z.one(), &ints(&z, &[6, 10, 15])).unwrap(),
            Some(ints(&z, &[16, -8, -1]))
        );
        assert_eq!(z.ideal_membership(&z.from_int(5), &ints(&z, &[2, 4])).unwrap(), None);
        assert_eq!(z.ideal_membership(&z.from_int(5), &[]).unwrap(), None);
        assert_eq!(z.ideal_membership(&z.zero(), &[]).unwrap(), Some(vec![]));
        let q = Ring::univariate("x");
        assert_eq!(
            q.ideal_membership(&q.one(), &[qx(&[0, 1]), qx(&[-1, 1])]).unwrap(),
            Some(vec![qx(&[1]), qx(&[-1])])
        );
    }

    #[test]
    fn modular_membership_uses_modulus() {
        let m = Ring::modular(12);
        // 3 generates the same ideal as 9 in Z/12, and 5 is a unit
        let c = m.ideal_membership(&m.from_int(3), &ints(&m, &[9])).unwrap().unwrap();
        assert_eq!(m.combine(&c, &ints(&m, &[9])), m.from_int(3));
        assert!(m.ideal_membership(&m.one(), &ints(&m, &[5])).unwrap().is_some());
        assert!(m.ideal_membership(&m.one(), &ints(&m, &[4, 6])).unwrap().is_none());
        assert!(m.ideal_membership(&m.one(), &ints(&m, &[4, 3])).unwrap().is_some());
    }

    #[test]
    fn radical_membership_examples() {
        let z = Ring::integers();
        let c = z.radical_membership(&z.from_int(2), &ints(&z, &[4])).unwrap().unwrap();
        assert_eq!((c.k, c.coeffs), (2, ints(&z, &[1])));
        assert!(z.radical_membership(&z.from_int(3), &ints(&z, &[2])).unwrap().is_none());
        let q = Ring::univariate("x");
        let c = q
            .radical_membership(&qx(&[0, 1]), &[qx(&[0, 0, 1])])
            .unwrap()
            .unwrap();
        assert_eq!((c.k, c.coeffs), (2, vec![qx(&[1])]));
    }

    #[test]
    fn radical_membership_large_multiplicity() {
        let z = Ring::integers();
        let big = z.pow(&z.from_int(2), 100);
        let c = z.radical_membership(&z.from_int(6), &[big]).unwrap().unwrap();
        assert_eq!(c.k, 100);
    }

    #[test]
    fn radical_in_modular_ring() {
        let m = Ring::modular(12);
        // 6 is nilpotent-adjacent: 6^2 = 0, so 6 lies in every radical
        assert_eq!(m.radical_membership(&m.from_int(6), &[]).unwrap().unwrap().k, 2);
        assert!(m.radical_membership(&m.from_int(2), &[]).unwrap().is_none());
        assert!(m.radical_membership(&m.from_int(2), &ints(&m, &[4])).unwrap().is_some());
        assert!(m.radical_membership(&m.from_int(3), &ints(&m, &[4])).unwrap().is_none());
    }

    #[test]
    fn ann_power_examples() {
        let m = Ring::modular(12);
        assert_eq!(m.ann_power(&m.from_int(2), &m.from_int(3)), Some(AnnPowerWitness { k: 2 }));
        let z = Ring::integers();
        assert_eq!(z.ann_power(&z.from_int(2), &z.from_int(3)), None);
        assert_eq!(z.ann_power(&z.from_int(2), &z.zero()), Some(AnnPowerWitness { k: 0 }));
        assert_eq!(z.ann_power(&z.zero(), &z.from_int(3)), Some(AnnPowerWitness { k: 1 }));
        assert_eq!(m.ann_power(&m.from_int(5), &m.from_int(3)), None);
    }

    #[test]
    fn gcd_generators() {
        let z = Ring::integers();
        assert_eq!(z.gcd(&ints(&z, &[4, 6])), Some(z.from_int(2)));
        assert_eq!(z.gcd(&[]), Some(z.zero()));
        let m = Ring::modular(12);
        assert_eq!(m.gcd(&ints(&m, &[8])), Some(m.from_int(4)));
        assert_eq!(m.gcd(&[]), Some(m.zero()));
    }
}
