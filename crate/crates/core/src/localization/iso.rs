//! Explicit isomorphisms between localizations:
//!
//! * `R[1/f][1/g] ≅ R[1/(f g)]`
//! * `R[1/f] ≅ R` when `f` is a unit
//! * `R[1/f] ≅ R[1/g]` when each of `f, g` lies in the radical of the other

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElem};
use crate::sample::Sampler;

use super::{restriction_hom, Loc2Elem, Loc2Ring, LocElem, LocHom, LocRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoCase {
    Iterated,
    Unit,
    Mutual,
}

/// Outcome of a sampled check that a pair of maps is mutually inverse and
/// structure preserving.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IsoReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Minimal ring interface shared by the single and iterated localizations.
pub(crate) trait FracRing {
    type Elem: Clone + Debug;
    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn one(&self) -> Self::Elem;
}

impl FracRing for LocRing {
    type Elem = LocElem;
    fn eq(&self, a: &LocElem, b: &LocElem) -> bool {
        LocRing::eq(self, a, b)
    }
    fn add(&self, a: &LocElem, b: &LocElem) -> LocElem {
        LocRing::add(self, a, b)
    }
    fn mul(&self, a: &LocElem, b: &LocElem) -> LocElem {
        LocRing::mul(self, a, b)
    }
    fn one(&self) -> LocElem {
        LocRing::one(self)
    }
}

impl FracRing for Loc2Ring {
    type Elem = Loc2Elem;
    fn eq(&self, a: &Loc2Elem, b: &Loc2Elem) -> bool {
        Loc2Ring::eq(self, a, b)
    }
    fn add(&self, a: &Loc2Elem, b: &Loc2Elem) -> Loc2Elem {
        Loc2Ring::add(self, a, b)
    }
    fn mul(&self, a: &Loc2Elem, b: &Loc2Elem) -> Loc2Elem {
        Loc2Ring::mul(self, a, b)
    }
    fn one(&self) -> Loc2Elem {
        Loc2Ring::one(self)
    }
}

fn check_map<S: FracRing, T: FracRing>(
    report: &mut IsoReport,
    name: &str,
    source: &S,
    target: &T,
    map: impl Fn(&S::Elem) -> T::Elem,
    samples: &[S::Elem],
) {
    report.expect(target.eq(&map(&source.one()), &target.one()), || {
        format!("{name} does not preserve 1")
    });
    for pair in samples.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        report.expect(
            target.eq(&map(&source.add(a, b)), &target.add(&map(a), &map(b))),
            || format!("{name} does not preserve + on {a:?}, {b:?}"),
        );
        report.expect(
            target.eq(&map(&source.mul(a, b)), &target.mul(&map(a), &map(b))),
            || format!("{name} does not preserve * on {a:?}, {b:?}"),
        );
    }
}

fn check_pair<S: FracRing, T: FracRing>(
    source: &S,
    target: &T,
    forward: impl Fn(&S::Elem) -> T::Elem,
    backward: impl Fn(&T::Elem) -> S::Elem,
    source_samples: &[S::Elem],
    target_samples: &[T::Elem],
) -> IsoReport {
    let mut report = IsoReport::default();
    for a in source_samples {
        report.expect(source.eq(&backward(&forward(a)), a), || {
            format!("backward(forward(a)) differs from a = {a:?}")
        });
    }
    for x in target_samples {
        report.expect(target.eq(&forward(&backward(x)), x), || {
            format!("forward(backward(x)) differs from x = {x:?}")
        });
    }
    check_map(&mut report, "forward", source, target, &forward, source_samples);
    check_map(&mut report, "backward", target, source, &backward, target_samples);
    report
}

fn sample_loc(sampler: &mut Sampler, ring: &Ring, n: usize) -> Vec<LocElem> {
    (0..n)
        .map(|_| {
            let num = sampler.elem(ring);
            LocElem::new(num, sampler.exp(3))
        })
        .collect()
}

/// `R[1/f][1/g] ≅ R[1/(f g)]`.
#[derive(Debug, Clone)]
pub struct IteratedIso {
    pub double: Loc2Ring,
    pub single: LocRing,
}

impl IteratedIso {
    pub fn new(ring: &Ring, f: &RingElem, g: &RingElem) -> Self {
        IteratedIso {
            double: Loc2Ring::new(ring, f.clone(), g.clone()),
            single: LocRing::new(ring, ring.mul(f, g)),
        }
    }

    /// `(r / f^n) / g^m ↦ r f^m g^n / (f g)^(n+m)`
    pub fn forward(&self, a: &Loc2Elem) -> LocElem {
        let r = self.double.ring();
        let scale = r.mul(
            &r.pow(self.double.f(), a.outer_exp),
            &r.pow(self.double.g(), a.inner_exp),
        );
        LocElem::new(r.mul(&a.num, &scale), a.inner_exp + a.outer_exp)
    }

    /// `r / (f g)^n ↦ (r / f^n) / g^n`
    pub fn backward(&self, a: &LocElem) -> Loc2Elem {
        Loc2Elem::new(a.num.clone(), a.exp, a.exp)
    }

    pub fn check(&self, double_samples: &[Loc2Elem], single_samples: &[LocElem]) -> IsoReport {
        check_pair(
            &self.double,
            &self.single,
            |a| self.forward(a),
            |a| self.backward(a),
            double_samples,
            single_samples,
        )
    }

    pub fn sample_check(&self, sampler: &mut Sampler, n: usize) -> IsoReport {
        let ring = self.double.ring();
        let doubles: Vec<Loc2Elem> = (0..n)
            .map(|_| {
                let num = sampler.elem(ring);
                Loc2Elem::new(num, sampler.exp(3), sampler.exp(3))
            })
            .collect();
        let singles = sample_loc(sampler, ring, n);
        self.check(&doubles, &singles)
    }
}

/// `R[1/f] ≅ R` for a unit `f`.
#[derive(Debug, Clone)]
pub struct UnitIso {
    pub loc: LocRing,
    pub base: LocRing,
    inverse: RingElem,
}

impl UnitIso {
    pub fn new(ring: &Ring, f: &RingElem) -> Result<Self> {
        let inverse = ring.is_unit(f).ok_or_else(|| {
            Error::Precondition(format!("missing unit certificate: {} is not a unit", ring.format(f)))
        })?;
        Ok(UnitIso {
            loc: LocRing::new(ring, f.clone()),
            base: LocRing::base(ring),
            inverse,
        })
    }

    pub fn inverse(&self) -> &RingElem {
        &self.inverse
    }

    /// `r / f^n ↦ r (f^-1)^n`
    pub fn forward(&self, a: &LocElem) -> LocElem {
        let r = self.loc.ring();
        self.base
            .from_base(&r.mul(&a.num, &r.pow(&self.inverse, a.exp)))
    }

    /// Elements of the base arrive as `r / 1^n`.
    pub fn backward(&self, a: &LocElem) -> LocElem {
        self.loc.from_base(&a.num)
    }

    pub fn check(&self, loc_samples: &[LocElem], base_samples: &[LocElem]) -> IsoReport {
        check_pair(
            &self.loc,
            &self.base,
            |a| self.forward(a),
            |a| self.backward(a),
            loc_samples,
            base_samples,
        )
    }

    pub fn sample_check(&self, sampler: &mut Sampler, n: usize) -> IsoReport {
        let ring = self.loc.ring();
        let locs = sample_loc(sampler, ring, n);
        let bases: Vec<LocElem> = (0..n).map(|_| self.base.from_base(&sampler.elem(ring))).collect();
        self.check(&locs, &bases)
    }
}

/// `R[1/f] ≅ R[1/g]` from certificates `g^k = c f` and `f^l = d g`.
#[derive(Debug, Clone)]
pub struct MutualIso {
    pub forward: LocHom,
    pub backward: LocHom,
}

impl MutualIso {
    pub fn new(ring: &Ring, f: &RingElem, g: &RingElem) -> Result<Self> {
        let forward = restriction_hom(ring, f, g)?.ok_or_else(|| {
            Error::Precondition(format!(
                "missing radical certificate {}^k = c * {}",
                ring.format(g),
                ring.format(f)
            ))
        })?;
        let backward = restriction_hom(ring, g, f)?.ok_or_else(|| {
            Error::Precondition(format!(
                "missing radical certificate {}^l = d * {}",
                ring.format(f),
                ring.format(g)
            ))
        })?;
        Ok(MutualIso { forward, backward })
    }

    pub fn from_homs(forward: LocHom, backward: LocHom) -> Result<Self> {
        if forward.source().den() != backward.target().den()
            || forward.target().den() != backward.source().den()
        {
            return Err(Error::Precondition("homomorphisms do not form a pair".into()));
        }
        Ok(MutualIso { forward, backward })
    }

    pub fn check(&self, f_samples: &[LocElem], g_samples: &[LocElem]) -> IsoReport {
        check_pair(
            self.forward.source(),
            self.forward.target(),
            |a| self.forward.apply(a),
            |a| self.backward.apply(a),
            f_samples,
            g_samples,
        )
    }

    pub fn sample_check(&self, sampler: &mut Sampler, n: usize) -> IsoReport {
        let ring = self.forward.source().ring();
        let fs = sample_loc(sampler, ring, n);
        let gs = sample_loc(sampler, ring, n);
        self.check(&fs, &gs)
    }
}

#[derive(Debug, Clone)]
pub enum CanonicalIso {
    Iterated(IteratedIso),
    Unit(UnitIso),
    Mutual(Box<MutualIso>),
}

impl CanonicalIso {
    pub fn sample_check(&self, sampler: &mut Sampler, n: usize) -> IsoReport {
        match self {
            CanonicalIso::Iterated(i) => i.sample_check(sampler, n),
            CanonicalIso::Unit(i) => i.sample_check(sampler, n),
            CanonicalIso::Mutual(i) => i.sample_check(sampler, n),
        }
    }
}

/// Builds the isomorphism for `case`. The unit case ignores `g`; the other
/// two require it.
pub fn canonical_iso(ring: &Ring, case: IsoCase, f: &RingElem, g: Option<&RingElem>) -> Result<CanonicalIso> {
    let need_g = || g.ok_or_else(|| Error::Precondition(format!("{case:?} isomorphism needs a second element")));
    Ok(match case {
        IsoCase::Iterated => CanonicalIso::Iterated(IteratedIso::new(ring, f, need_g()?)),
        IsoCase::Unit => CanonicalIso::Unit(UnitIso::new(ring, f)?),
        IsoCase::Mutual => CanonicalIso::Mutual(Box::new(MutualIso::new(ring, f, need_g()?)?)),
    })
}
