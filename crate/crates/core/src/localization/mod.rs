//! Localizations `R[1/f]` away from a single element.
//!
//! Elements are fractions `r / f^n` with no canonical form. Two fractions
//! `r/f^n` and `r'/f^m` are equal iff some power of `f` kills the cross
//! difference `f^m r - f^n r'`; [`LocRing::eq_witness`] decides this and
//! returns the exponent.

mod iso;
mod iterated;
mod universal;

pub use iso::{canonical_iso, CanonicalIso, IsoCase, IsoReport, IteratedIso, MutualIso, UnitIso};
pub use iterated::{Loc2Elem, Loc2Ring};
pub use universal::{universal_property_check, Clause, ClauseOutcome, UniversalReport, UniversalTarget};

use crate::cert::AnnPowerWitness;
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElem};

/// `num / den^exp`. Structural equality is *not* ring equality; compare
/// with [`LocRing::eq`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocElem {
    pub num: RingElem,
    pub exp: u32,
}

impl LocElem {
    pub fn new(num: RingElem, exp: u32) -> Self {
        LocElem { num, exp }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocOp {
    Add,
    Mul,
    Neg,
    FromBase,
}

/// The ring `R[1/den]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocRing {
    ring: Ring,
    den: RingElem,
    zero_ring: bool,
}

impl LocRing {
    pub fn new(ring: &Ring, den: RingElem) -> LocRing {
        let zero_ring = ring.ann_power(&den, &ring.one()).is_some();
        LocRing {
            ring: ring.clone(),
            den,
            zero_ring,
        }
    }

    /// `R` itself, as the localization away from 1.
    pub fn base(ring: &Ring) -> LocRing {
        LocRing::new(ring, ring.one())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn den(&self) -> &RingElem {
        &self.den
    }

    /// True iff the inverted element is nilpotent, collapsing the ring to a point.
    pub fn is_zero_ring(&self) -> bool {
        self.zero_ring
    }

    pub fn from_base(&self, r: &RingElem) -> LocElem {
        LocElem::new(r.clone(), 0)
    }

    pub fn zero(&self) -> LocElem {
        self.from_base(&self.ring.zero())
    }

    pub fn one(&self) -> LocElem {
        self.from_base(&self.ring.one())
    }

    /// `den` as a fraction `den / 1`.
    pub fn den_elem(&self) -> LocElem {
        self.from_base(&self.den)
    }

    pub fn check(&self, a: &LocElem) -> Result<()> {
        self.ring.check(&a.num)
    }

    fn den_pow(&self, e: u32) -> RingElem {
        self.ring.pow(&self.den, e)
    }

    /// `den^m r - den^n r'` for `a = r/den^n`, `b = r'/den^m`.
    pub fn cross_diff(&self, a: &LocElem, b: &LocElem) -> RingElem {
        let r = &self.ring;
        r.sub(
            &r.mul(&self.den_pow(b.exp), &a.num),
            &r.mul(&self.den_pow(a.exp), &b.num),
        )
    }

    /// Witness `k` with `den^k (den^m r - den^n r') = 0` for `a = r/den^n`,
    /// `b = r'/den^m`, or `None` if the fractions differ.
    pub fn eq_witness(&self, a: &LocElem, b: &LocElem) -> Option<AnnPowerWitness> {
        let diff = self.cross_diff(a, b);
        let w = self.ring.ann_power(&self.den, &diff);
        debug_assert!(!self.zero_ring || w.is_some());
        w
    }

    pub fn eq(&self, a: &LocElem, b: &LocElem) -> bool {
        self.eq_witness(a, b).is_some()
    }

    pub fn is_zero(&self, a: &LocElem) -> bool {
        self.eq(a, &self.zero())
    }

    pub fn add(&self, a: &LocElem, b: &LocElem) -> LocElem {
        let r = &self.ring;
        let e = a.exp.max(b.exp);
        let num = r.add(
            &r.mul(&a.num, &self.den_pow(e - a.exp)),
            &r.mul(&b.num, &self.den_pow(e - b.exp)),
        );
        LocElem::new(num, e)
    }

    pub fn neg(&self, a: &LocElem) -> LocElem {
        LocElem::new(self.ring.neg(&a.num), a.exp)
    }

    pub fn sub(&self, a: &LocElem, b: &LocElem) -> LocElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &LocElem, b: &LocElem) -> LocElem {
        LocElem::new(self.ring.mul(&a.num, &b.num), a.exp + b.exp)
    }

    pub fn pow(&self, a: &LocElem, e: u32) -> LocElem {
        LocElem::new(self.ring.pow(&a.num, e), a.exp * e)
    }

    pub fn arith(&self, op: LocOp, args: &[LocElem]) -> Result<LocElem> {
        args.iter().try_for_each(|a| self.check(a))?;
        let arity = match op {
            LocOp::Add | LocOp::Mul => 2,
            LocOp::Neg | LocOp::FromBase => 1,
        };
        if args.len() != arity {
            return Err(Error::DescriptorMismatch(format!(
                "{op:?} takes {arity} arguments, got {}",
                args.len()
            )));
        }
        Ok(match op {
            LocOp::Add => self.add(&args[0], &args[1]),
            LocOp::Mul => self.mul(&args[0], &args[1]),
            LocOp::Neg => self.neg(&args[0]),
            LocOp::FromBase => {
                if args[0].exp != 0 {
                    return Err(Error::Precondition("from_base takes an element of R".into()));
                }
                self.from_base(&args[0].num)
            }
        })
    }

    /// Inverse of `a = r/den^n`, if `a` is a unit. `a` is a unit iff `den`
    /// lies in the radical of `<r>`: from `den^k = c r` the inverse is
    /// `c den^n / den^k`.
    pub fn is_unit(&self, a: &LocElem) -> Result<Option<LocElem>> {
        if let Some(u) = self.ring.is_unit(&a.num) {
            let inv = LocElem::new(self.ring.mul(&u, &self.den_pow(a.exp)), 0);
            return Ok(Some(inv));
        }
        let Some(cert) = self.ring.radical_membership(&self.den, std::slice::from_ref(&a.num))? else {
            return Ok(None);
        };
        let c = &cert.coeffs[0];
        let inv = LocElem::new(self.ring.mul(c, &self.den_pow(a.exp)), cert.k);
        if !self.eq(&self.mul(a, &inv), &self.one()) {
            return Err(Error::Internal("localized inverse failed to re-verify".into()));
        }
        Ok(Some(inv))
    }
}

/// The ring map `R[1/f] -> R[1/g]` determined by a certificate
/// `g^k = c * f`: it sends `r/f^n` to `r c^n / g^(k n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocHom {
    source: LocRing,
    target: LocRing,
    k: u32,
    c: RingElem,
}

impl LocHom {
    /// Validates the certificate `target.den^k = c * source.den`.
    pub fn new(source: LocRing, target: LocRing, k: u32, c: RingElem) -> Result<LocHom> {
        let ring = source.ring();
        if ring != target.ring() {
            return Err(Error::DescriptorMismatch("homomorphism between different base rings".into()));
        }
        ring.check(&c)?;
        if k == 0 || ring.pow(target.den(), k) != ring.mul(&c, source.den()) {
            return Err(Error::Precondition(format!(
                "certificate {}^{k} = {} * {} does not hold",
                ring.format(target.den()),
                ring.format(&c),
                ring.format(source.den())
            )));
        }
        Ok(LocHom { source, target, k, c })
    }

    pub fn identity(loc: &LocRing) -> LocHom {
        LocHom {
            source: loc.clone(),
            target: loc.clone(),
            k: 1,
            c: loc.ring().one(),
        }
    }

    pub fn source(&self) -> &LocRing {
        &self.source
    }

    pub fn target(&self) -> &LocRing {
        &self.target
    }

    /// `(k, c)` with `target.den^k = c * source.den`.
    pub fn certificate(&self) -> (u32, &RingElem) {
        (self.k, &self.c)
    }

    pub fn apply(&self, a: &LocElem) -> LocElem {
        let r = self.source.ring();
        LocElem::new(r.mul(&a.num, &r.pow(&self.c, a.exp)), self.k * a.exp)
    }

    /// `other ∘ self`, with certificate `e^(k1 k2) = c2^k1 c1 f`.
    pub fn then(&self, other: &LocHom) -> Result<LocHom> {
        if self.target.den() != other.source.den() {
            return Err(Error::Precondition("homomorphisms are not composable".into()));
        }
        let r = self.source.ring();
        let c = r.mul(&r.pow(&other.c, self.k), &self.c);
        LocHom::new(self.source.clone(), other.target.clone(), self.k * other.k, c)
    }

    /// Checks, on the given sample pairs, that the map preserves `+`, `*`
    /// and `1` and commutes with the structure maps from `R`.
    pub fn respects_structure(&self, samples: &[(LocElem, LocElem)]) -> bool {
        let (s, t) = (&self.source, &self.target);
        if !t.eq(&self.apply(&s.one()), &t.one()) {
            return false;
        }
        samples.iter().all(|(a, b)| {
            let (fa, fb) = (self.apply(a), self.apply(b));
            t.eq(&self.apply(&s.add(a, b)), &t.add(&fa, &fb))
                && t.eq(&self.apply(&s.mul(a, b)), &t.mul(&fa, &fb))
                && t.eq(&self.apply(&s.from_base(&a.num)), &t.from_base(&a.num))
        })
    }
}

/// The restriction `R[1/f] -> R[1/g]`, present iff `g` lies in the radical
/// of `<f>`, i.e. `D(g) <= D(f)`.
pub fn restriction_hom(ring: &Ring, f: &RingElem, g: &RingElem) -> Result<Option<LocHom>> {
    let Some(cert) = ring.radical_membership(g, std::slice::from_ref(f))? else {
        return Ok(None);
    };
    let c = cert.coeffs.into_iter().next().expect("one coefficient");
    LocHom::new(LocRing::new(ring, f.clone()), LocRing::new(ring, g.clone()), cert.k, c).map(Some)
}

/// Restriction `R[1/f] -> R[1/(f g)]` with the direct certificate `(f g)^1 = g * f`.
pub fn restriction_to_product(ring: &Ring, f: &RingElem, g: &RingElem) -> LocHom {
    let fg = ring.mul(f, g);
    LocHom::new(LocRing::new(ring, f.clone()), LocRing::new(ring, fg), 1, g.clone())
        .expect("product certificate holds")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::UniPoly;

    fn qx(c: &[i64]) -> RingElem {
        RingElem::Uni(UniPoly::from_ints(c))
    }

    #[test]
    fn fraction_equality_examples() {
        let q = Ring::univariate("x");
        let l = LocRing::new(&q, qx(&[0, 1]));
        let w = l
            .eq_witness(&LocElem::new(qx(&[1]), 1), &LocElem::new(qx(&[0, 1]), 2))
            .unwrap();
        assert_eq!(w.k, 0);

        let m = Ring::modular(12);
        let l = LocRing::new(&m, m.from_int(2));
        let w = l
            .eq_witness(&LocElem::new(m.from_int(3), 0), &l.zero())
            .unwrap();
        assert_eq!(w.k, 2);

        let z = Ring::integers();
        let l = LocRing::new(&z, z.from_int(2));
        assert!(!l.eq(&LocElem::new(z.one(), 1), &LocElem::new(z.one(), 2)));
    }

    #[test]
    fn arithmetic_examples() {
        let z = Ring::integers();
        let l = LocRing::new(&z, z.from_int(2));
        let half = LocElem::new(z.one(), 1);
        assert!(l.eq(&l.add(&half, &half), &l.one()));
        assert_eq!(l.from_base(&z.zero()), LocElem::new(z.zero(), 0));

        let q = Ring::univariate("x");
        let l = LocRing::new(&q, qx(&[0, 1]));
        let inv_x = LocElem::new(qx(&[1]), 1);
        assert!(l.eq(&l.mul(&inv_x, &l.from_base(&qx(&[0, 1]))), &l.one()));
    }

    #[test]
    fn unit_examples() {
        let z = Ring::integers();
        let l = LocRing::new(&z, z.from_int(2));
        assert_eq!(
            l.is_unit(&l.from_base(&z.from_int(4))).unwrap(),
            Some(LocElem::new(z.one(), 2))
        );
        assert_eq!(l.is_unit(&l.from_base(&z.from_int(3))).unwrap(), None);
        assert_eq!(l.is_unit(&l.one()).unwrap(), Some(l.one()));
        let inv = l.is_unit(&LocElem::new(z.from_int(-1), 3)).unwrap().unwrap();
        assert_eq!(inv, LocElem::new(z.from_int(-8), 0));
    }

    #[test]
    fn restriction_examples() {
        let z = Ring::integers();
        let h = restriction_hom(&z, &z.from_int(2), &z.from_int(6)).unwrap().unwrap();
        assert_eq!(h.certificate(), (1, &z.from_int(3)));
        assert_eq!(h.apply(&LocElem::new(z.one(), 1)), LocElem::new(z.from_int(3), 1));
        assert!(restriction_hom(&z, &z.from_int(6), &z.from_int(2)).unwrap().is_none());
        let id = restriction_hom(&z, &z.from_int(5), &z.from_int(5)).unwrap().unwrap();
        assert_eq!(id.certificate(), (1, &z.one()));

        let q = Ring::univariate("x");
        let h = LocHom::new(
            LocRing::new(&q, qx(&[0, 0, 1])),
            LocRing::new(&q, qx(&[0, 1])),
            2,
            qx(&[1]),
        )
        .unwrap();
        let r = qx(&[3, 1]);
        assert_eq!(h.apply(&LocElem::new(r.clone(), 3)), LocElem::new(r, 6));
    }

    #[test]
    fn bad_certificate_rejected() {
        let z = Ring::integers();
        let res = LocHom::new(
            LocRing::new(&z, z.from_int(2)),
            LocRing::new(&z, z.from_int(6)),
            1,
            z.from_int(2),
        );
        assert!(matches!(res, Err(Error::Precondition(_))));
    }

    #[test]
    fn zero_ring_collapses() {
        for ring in [Ring::integers(), Ring::modular(12), Ring::univariate("x")] {
            let l = LocRing::new(&ring, ring.zero());
            assert!(l.is_zero_ring());
            assert!(l.eq(&l.one(), &l.zero()));
        }
        let m = Ring::modular(12);
        let l = LocRing::new(&m, m.from_int(6));
        assert!(l.is_zero_ring());
        assert!(!LocRing::new(&m, m.from_int(2)).is_zero_ring());
    }

    #[test]
    fn composition_matches_direct() {
        let z = Ring::integers();
        let f = z.from_int(2);
        let g = z.from_int(6);
        let e = z.from_int(30);
        let a = restriction_hom(&z, &f, &g).unwrap().unwrap();
        let b = restriction_hom(&z, &g, &e).unwrap().unwrap();
        let direct = restriction_hom(&z, &f, &e).unwrap().unwrap();
        let composed = a.then(&b).unwrap();
        let x = LocElem::new(z.from_int(7), 3);
        let t = direct.target();
        assert!(t.eq(&composed.apply(&x), &direct.apply(&x)));
        assert!(t.eq(&b.apply(&a.apply(&x)), &direct.apply(&x)));
    }
}
