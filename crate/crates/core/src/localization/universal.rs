//! Sampled check of the three conditions that make a homomorphism out of
//! `R[1/f]` an isomorphism onto its target:
//!
//! * (i) the image of `f` is a unit
//! * (ii) anything sent to zero is killed by a power of `f`
//! * (iii) every target element has the form `φ(r) φ(f)^-n`

use std::fmt;

use crate::error::Result;
use crate::ring::{Ring, RingElem};

use super::{Loc2Elem, Loc2Ring, LocElem, LocRing};

/// A ring `A` under `R` that the check can compute in.
pub trait UniversalTarget {
    type Elem: Clone;
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn inverse(&self, a: &Self::Elem) -> Result<Option<Self::Elem>>;
    /// `(r, n)` with `y · f^n = r` in `A`, from a radical certificate for
    /// `f` over the denominators of `y`.
    fn fraction_candidate(&self, f: &RingElem, y: &Self::Elem) -> Result<Option<(RingElem, u32)>>;
    fn describe(&self, a: &Self::Elem) -> String;
}

impl UniversalTarget for LocRing {
    type Elem = LocElem;

    fn eq(&self, a: &LocElem, b: &LocElem) -> bool {
        LocRing::eq(self, a, b)
    }
    fn mul(&self, a: &LocElem, b: &LocElem) -> LocElem {
        LocRing::mul(self, a, b)
    }
    fn pow(&self, a: &LocElem, e: u32) -> LocElem {
        LocRing::pow(self, a, e)
    }
    fn one(&self) -> LocElem {
        LocRing::one(self)
    }
    fn is_zero(&self, a: &LocElem) -> bool {
        LocRing::is_zero(self, a)
    }
    fn inverse(&self, a: &LocElem) -> Result<Option<LocElem>> {
        self.is_unit(a)
    }

    // f^l = d g gives s / g^m = s d^m / f^(l m).
    fn fraction_candidate(&self, f: &RingElem, y: &LocElem) -> Result<Option<(RingElem, u32)>> {
        let r = self.ring();
        let Some(cert) = r.radical_membership(f, std::slice::from_ref(self.den()))? else {
            return Ok(None);
        };
        let d = &cert.coeffs[0];
        Ok(Some((r.mul(&y.num, &r.pow(d, y.exp)), cert.k * y.exp)))
    }

    fn describe(&self, a: &LocElem) -> String {
        let r = self.ring();
        format!("{}/({})^{}", r.format(&a.num), r.format(self.den()), a.exp)
    }
}

impl UniversalTarget for Loc2Ring {
    type Elem = Loc2Elem;

    fn eq(&self, a: &Loc2Elem, b: &Loc2Elem) -> bool {
        Loc2Ring::eq(self, a, b)
    }
    fn mul(&self, a: &Loc2Elem, b: &Loc2Elem) -> Loc2Elem {
        Loc2Ring::mul(self, a, b)
    }
    fn pow(&self, a: &Loc2Elem, e: u32) -> Loc2Elem {
        Loc2Ring::pow(self, a, e)
    }
    fn one(&self) -> Loc2Elem {
        Loc2Ring::one(self)
    }
    fn is_zero(&self, a: &Loc2Elem) -> bool {
        Loc2Ring::eq(self, a, &self.zero())
    }

    // (f g)^k = c s gives (s / f^n g^m)^-1 = c f^n g^m / (f g)^k.
    fn inverse(&self, a: &Loc2Elem) -> Result<Option<Loc2Elem>> {
        let r = self.ring();
        let fg = r.mul(self.f(), self.g());
        let Some(cert) = r.radical_membership(&fg, std::slice::from_ref(&a.num))? else {
            return Ok(None);
        };
        let scale = r.mul(&r.pow(self.f(), a.inner_exp), &r.pow(self.g(), a.outer_exp));
        let inv = Loc2Elem::new(r.mul(&cert.coeffs[0], &scale), cert.k, cert.k);
        if !self.eq(&self.mul(a, &inv), &self.one()) {
            return Err(crate::Error::Internal("iterated inverse failed to verify".into()));
        }
        Ok(Some(inv))
    }

    // With e = max(n, m), s / f^n g^m = s f^(e-n) g^(e-m) / (f g)^e, and
    // f^l = d (f g) turns that into s f^(e-n) g^(e-m) d^e / f^(l e).
    fn fraction_candidate(&self, f: &RingElem, y: &Loc2Elem) -> Result<Option<(RingElem, u32)>> {
        let r = self.ring();
        let fg = r.mul(self.f(), self.g());
        let Some(cert) = r.radical_membership(f, std::slice::from_ref(&fg))? else {
            return Ok(None);
        };
        let e = y.inner_exp.max(y.outer_exp);
        let num = r.product(&[
            y.num.clone(),
            r.pow(self.f(), e - y.inner_exp),
            r.pow(self.g(), e - y.outer_exp),
            r.pow(&cert.coeffs[0], e),
        ]);
        Ok(Some((num, cert.k * e)))
    }

    fn describe(&self, a: &Loc2Elem) -> String {
        let r = self.ring();
        format!(
            "({}/({})^{})/({})^{}",
            r.format(&a.num),
            r.format(self.f()),
            a.inner_exp,
            r.format(self.g()),
            a.outer_exp
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Clause {
    /// The image of `f` is a unit.
    Unit,
    /// Kernel elements are annihilated by a power of `f`.
    Kernel,
    /// Every target element is a fraction of images.
    Surjective,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::Unit => "(i)",
            Clause::Kernel => "(ii)",
            Clause::Surjective => "(iii)",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One check. `sample` indexes the source samples for (ii), the target
/// samples for (iii), and is `None` for (i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseOutcome {
    pub clause: Clause,
    pub sample: Option<usize>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UniversalReport {
    pub outcomes: Vec<ClauseOutcome>,
}

impl UniversalReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn clause_passed(&self, clause: Clause) -> bool {
        self.outcomes.iter().filter(|o| o.clause == clause).all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClauseOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }

    fn push(&mut self, clause: Clause, sample: Option<usize>, passed: bool, detail: String) {
        self.outcomes.push(ClauseOutcome {
            clause,
            sample,
            passed,
            detail,
        });
    }
}

/// Checks clauses (i) to (iii) for `phi : source -> target` on the given
/// samples. `phi` is only ever evaluated, so any candidate map works.
pub fn universal_property_check<T: UniversalTarget>(
    source: &LocRing,
    target: &T,
    phi: impl Fn(&LocElem) -> T::Elem,
    source_samples: &[LocElem],
    target_samples: &[T::Elem],
) -> Result<UniversalReport> {
    let ring: &Ring = source.ring();
    let f = source.den();
    let mut report = UniversalReport::default();

    let phi_f = phi(&source.from_base(f));
    let phi_f_inv = match target.inverse(&phi_f)? {
        Some(inv) if target.eq(&target.mul(&phi_f, &inv), &target.one()) => {
            report.push(Clause::Unit, None, true, format!("inverse {}", target.describe(&inv)));
            Some(inv)
        }
        _ => {
            report.push(
                Clause::Unit,
                None,
                false,
                format!("image {} of {} is not a unit", target.describe(&phi_f), ring.format(f)),
            );
            None
        }
    };

    for (i, a) in source_samples.iter().enumerate() {
        let image = phi(&source.from_base(&a.num));
        if !target.is_zero(&image) {
            continue;
        }
        match ring.ann_power(f, &a.num) {
            Some(w) => report.push(
                Clause::Kernel,
                Some(i),
                true,
                format!("{}^{} * {} = 0", ring.format(f), w.k, ring.format(&a.num)),
            ),
            None => report.push(
                Clause::Kernel,
                Some(i),
                false,
                format!("{} maps to 0 but no power of {} kills it", ring.format(&a.num), ring.format(f)),
            ),
        }
    }

    for (i, y) in target_samples.iter().enumerate() {
        let found = match (&phi_f_inv, target.fraction_candidate(f, y)?) {
            (Some(inv), Some((r, n))) => {
                let rebuilt = target.mul(&phi(&source.from_base(&r)), &target.pow(inv, n));
                target.eq(&rebuilt, y).then_some((r, n))
            }
            _ => None,
        };
        match found {
            Some((r, n)) => report.push(
                Clause::Surjective,
                Some(i),
                true,
                format!("{} = phi({}) * phi({})^-{}", target.describe(y), ring.format(&r), ring.format(f), n),
            ),
            None => report.push(
                Clause::Surjective,
                Some(i),
                false,
                format!("{} is not exhibited as a fraction", target.describe(y)),
            ),
        }
    }
    Ok(report)
}
