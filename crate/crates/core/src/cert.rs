//! Witnesses for the existential statements the algorithms rely on. Each
//! one is re-checkable by exact arithmetic in its ring.

use crate::ring::{Ring, RingElem};

/// `x^k = sum coeffs[i] * gens[i]`, witnessing `x` in the radical of the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalCert {
    pub k: u32,
    pub coeffs: Vec<RingElem>,
}

impl RadicalCert {
    pub fn verify(&self, ring: &Ring, x: &RingElem, gens: &[RingElem]) -> bool {
        self.k >= 1
            && self.coeffs.len() == gens.len()
            && ring.combine(&self.coeffs, gens) == ring.pow(x, self.k)
    }
}

/// `1 = sum coeffs[i] * gens[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutCert {
    pub coeffs: Vec<RingElem>,
}

impl BezoutCert {
    pub fn verify(&self, ring: &Ring, gens: &[RingElem]) -> bool {
        self.coeffs.len() == gens.len() && ring.is_one(&ring.combine(&self.coeffs, gens))
    }
}

/// `f^k * x = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnnPowerWitness {
    pub k: u32,
}

impl AnnPowerWitness {
    pub fn verify(&self, ring: &Ring, f: &RingElem, x: &RingElem) -> bool {
        ring.is_zero(&ring.mul(&ring.pow(f, self.k), x))
    }
}
