//! Seeded random elements for property runs. All randomness in the crate
//! flows through here so that a seed pins down every run.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::{MPoly, Monomial, Ring, RingDescriptor, RingElem, UniPoly};

/// Size limits for sampled elements.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    /// Integers are drawn from `[-int_bound, int_bound]`.
    pub int_bound: i64,
    pub max_degree: u32,
    /// Polynomial coefficient numerators come from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
    pub max_terms: usize,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            int_bound: 30,
            max_degree: 3,
            coeff_bound: 5,
            max_terms: 3,
        }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    pub shape: Shape,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            shape: Shape::default(),
        }
    }

    pub fn with_shape(mut self, shape: Shape) -> Self {
        self.shape = shape;
        self
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn exp(&mut self, max: u32) -> u32 {
        self.rng.random_range(0..=max)
    }

    fn coeff(&mut self) -> BigRational {
        let b = self.shape.coeff_bound;
        let n = self.rng.random_range(-b..=b);
        let d = if self.rng.random_bool(0.2) { self.rng.random_range(2..=3) } else { 1 };
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn elem(&mut self, ring: &Ring) -> RingElem {
        match ring.descriptor() {
            RingDescriptor::Integer => {
                let b = self.shape.int_bound;
                ring.from_int(self.rng.random_range(-b..=b))
            }
            RingDescriptor::Modular { modulus } => {
                let v: u64 = self.rng.random();
                ring.from_bigint(BigInt::from(v) % modulus)
            }
            RingDescriptor::UniPoly { .. } => {
                let deg = self.rng.random_range(0..=self.shape.max_degree) as usize;
                let coeffs = (0..=deg).map(|_| self.coeff()).collect();
                RingElem::Uni(UniPoly::from_coeffs(coeffs))
            }
            RingDescriptor::MultiPoly { vars } => {
                let n = vars.len();
                let terms = self.rng.random_range(1..=self.shape.max_terms);
                let max_deg = self.shape.max_degree;
                let items: Vec<(Monomial, BigRational)> = (0..terms)
                    .map(|_| {
                        let mut budget = self.rng.random_range(0..=max_deg);
                        let mut e = vec![0u32; n];
                        while budget > 0 {
                            let i = self.rng.random_range(0..n);
                            e[i] += 1;
                            budget -= 1;
                        }
                        (Monomial::new(e), self.coeff())
                    })
                    .collect();
                RingElem::Multi(MPoly::from_terms(n, items))
            }
        }
    }

    pub fn nonzero_elem(&mut self, ring: &Ring) -> RingElem {
        loop {
            let a = self.elem(ring);
            if !ring.is_zero(&a) {
                return a;
            }
        }
    }

    pub fn elems(&mut self, ring: &Ring, n: usize) -> Vec<RingElem> {
        (0..n).map(|_| self.elem(ring)).collect()
    }

    /// A generator list of length `0..=max_len`.
    pub fn gen_list(&mut self, ring: &Ring, max_len: usize) -> Vec<RingElem> {
        let n = self.rng.random_range(0..=max_len);
        self.elems(ring, n)
    }
}
