//! Integer helpers shared by the integer and modular rings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Extended gcd `(g, s, t)` with `s*a + t*b = g` and `g >= 0`.
///
/// When both inputs are nonzero the coefficient `s` is reduced into
/// `[0, |b|/g)`, which pins down a unique certificate for each pair.
pub fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if b.is_zero() {
        return (a.abs(), sign_unit(a), BigInt::zero());
    }
    if a.is_zero() {
        return (b.abs(), BigInt::zero(), sign_unit(b));
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
    }
    if old_r.is_negative() {
        old_r = -old_r;
        old_s = -old_s;
    }
    let g = old_r;
    let m = b.abs() / &g;
    let s = old_s.mod_floor(&m);
    let t = (&g - &s * a) / b;
    debug_assert_eq!(&s * a + &t * b, g);
    (g, s, t)
}

fn sign_unit(a: &BigInt) -> BigInt {
    if a.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    }
}

/// gcd of a list together with coefficients expressing it, folding `xgcd`
/// from the left. The empty list has gcd 0.
pub fn gcd_with_coeffs(gens: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(gens.len());
    for x in gens {
        let (next, s, t) = xgcd(&g, x);
        for c in coeffs.iter_mut() {
            *c *= &s;
        }
        coeffs.push(t);
        g = next;
    }
    (g, coeffs)
}

/// Smallest `k` with `2^k >= n`, for `n >= 1`.
pub fn ceil_log2(n: &BigInt) -> u64 {
    if *n <= BigInt::one() {
        return 0;
    }
    let m: BigInt = n - 1;
    m.bits()
}
