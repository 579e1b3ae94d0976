use crate::cert::AnnPowerWitness;
use crate::ring::{Ring, RingElem};

use super::{LocElem, LocRing};

/// `(num / f^inner_exp) / (g/1)^outer_exp` in `R[1/f][1/g]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Loc2Elem {
    pub num: RingElem,
    pub inner_exp: u32,
    pub outer_exp: u32,
}

impl Loc2Elem {
    pub fn new(num: RingElem, inner_exp: u32, outer_exp: u32) -> Self {
        Loc2Elem {
            num,
            inner_exp,
            outer_exp,
        }
    }
}

/// The iterated localization `R[1/f][1/g]`, where `g` acts through `g/1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loc2Ring {
    inner: LocRing,
    outer_den: RingElem,
}

impl Loc2Ring {
    pub fn new(ring: &Ring, f: RingElem, g: RingElem) -> Self {
        Loc2Ring {
            inner: LocRing::new(ring, f),
            outer_den: g,
        }
    }

    pub fn ring(&self) -> &Ring {
        self.inner.ring()
    }

    pub fn inner(&self) -> &LocRing {
        &self.inner
    }

    pub fn f(&self) -> &RingElem {
        self.inner.den()
    }

    pub fn g(&self) -> &RingElem {
        &self.outer_den
    }

    pub fn from_base(&self, r: &RingElem) -> Loc2Elem {
        Loc2Elem::new(r.clone(), 0, 0)
    }

    pub fn one(&self) -> Loc2Elem {
        self.from_base(&self.ring().one())
    }

    pub fn zero(&self) -> Loc2Elem {
        self.from_base(&self.ring().zero())
    }

    fn inner_part(&self, a: &Loc2Elem) -> LocElem {
        LocElem::new(a.num.clone(), a.inner_exp)
    }

    /// Equality is decided in two stages. In `A = R[1/f]`, `a = b` iff
    /// `g^k (g^m' a' - g^m b') = 0` for some `k`, where `a', b'` are the inner
    /// fractions; that inner element is `u / f^e`, and it vanishes after
    /// multiplying by `g^k` iff `f^j g^k u = 0` in `R`. Taking `j = k` the
    /// witness is an annihilating power of `f g` on `u`.
    pub fn eq_witness(&self, a: &Loc2Elem, b: &Loc2Elem) -> Option<AnnPowerWitness> {
        let r = self.ring();
        let inner = &self.inner;
        let g_over_1 = inner.from_base(&self.outer_den);
        let lhs = inner.mul(&inner.pow(&g_over_1, b.outer_exp), &self.inner_part(a));
        let rhs = inner.mul(&inner.pow(&g_over_1, a.outer_exp), &self.inner_part(b));
        let diff = inner.sub(&lhs, &rhs);
        r.ann_power(&r.mul(self.f(), &self.outer_den), &diff.num)
    }

    pub fn eq(&self, a: &Loc2Elem, b: &Loc2Elem) -> bool {
        self.eq_witness(a, b).is_some()
    }

    pub fn add(&self, a: &Loc2Elem, b: &Loc2Elem) -> Loc2Elem {
        let r = self.ring();
        let n = a.inner_exp.max(b.inner_exp);
        let m = a.outer_exp.max(b.outer_exp);
        let scale = |x: &Loc2Elem| {
            r.mul(
                &x.num,
                &r.mul(
                    &r.pow(self.f(), n - x.inner_exp),
                    &r.pow(&self.outer_den, m - x.outer_exp),
                ),
            )
        };
        Loc2Elem::new(r.add(&scale(a), &scale(b)), n, m)
    }

    pub fn neg(&self, a: &Loc2Elem) -> Loc2Elem {
        Loc2Elem::new(self.ring().neg(&a.num), a.inner_exp, a.outer_exp)
    }

    pub fn mul(&self, a: &Loc2Elem, b: &Loc2Elem) -> Loc2Elem {
        Loc2Elem::new(
            self.ring().mul(&a.num, &b.num),
            a.inner_exp + b.inner_exp,
            a.outer_exp + b.outer_exp,
        )
    }

    pub fn pow(&self, a: &Loc2Elem, e: u32) -> Loc2Elem {
        Loc2Elem::new(self.ring().pow(&a.num, e), a.inner_exp * e, a.outer_exp * e)
    }
}
