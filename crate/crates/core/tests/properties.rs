//! Randomized checks against independent oracles: naive integer
//! arithmetic, brute-force ideal enumeration in Z/n, and rational numbers.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use zariski::lattice::{join, lat_eq, lat_leq, meet, normalize, LatticeElt};
use zariski::localization::{restriction_hom, LocElem, LocHom, LocRing};
use zariski::sample::{Sampler, Shape};
use zariski::sheaf::{check_compatible, cover_check};
use zariski::{Ring, RingElem};

fn naive_gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Every element of the ideal `⟨gens⟩` of `Z/n`, by closure under adding
/// generators.
fn ideal_mod(n: i64, gens: &[i64]) -> BTreeSet<i64> {
    let mut seen = BTreeSet::from([0]);
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = (x + g).rem_euclid(n);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen
}

fn pow_mod(x: i64, k: u32, n: i64) -> i64 {
    (0..k).fold(1i64, |acc, _| (acc * x).rem_euclid(n))
}

fn ints(z: &Ring, xs: &[i64]) -> Vec<RingElem> {
    xs.iter().map(|&x| z.from_int(x)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn integer_membership_matches_gcd(gens in prop::collection::vec(-50i64..50, 0..4), x in -200i64..200) {
        let z = Ring::integers();
        let g = gens.iter().fold(0, |acc, &v| naive_gcd(acc, v));
        let expected = if g == 0 { x == 0 } else { x % g == 0 };
        let got = z.ideal_membership(&z.from_int(x), &ints(&z, &gens)).unwrap();
        prop_assert_eq!(got.is_some(), expected);
    }

    #[test]
    fn modular_membership_matches_enumeration(n in 2i64..40, gens in prop::collection::vec(0i64..40, 0..4), x in 0i64..40) {
        let m = Ring::modular(n as u64);
        let gens: Vec<i64> = gens.iter().map(|g| g % n).collect();
        let x = x % n;
        let expected = ideal_mod(n, &gens).contains(&x);
        let got = m.ideal_membership(&m.from_int(x), &ints(&m, &gens)).unwrap();
        prop_assert_eq!(got.is_some(), expected);
    }

    #[test]
    fn integer_radical_matches_bruteforce(gens in prop::collection::vec(-30i64..30, 0..3), x in -60i64..60) {
        let z = Ring::integers();
        let g = gens.iter().fold(0, |acc, &v| naive_gcd(acc, v)) as i128;
        let member = |k: u32| {
            let p = (x as i128).pow(k);
            if g == 0 { p == 0 } else { p % g == 0 }
        };
        let oracle = (1..=12).find(|&k| member(k));
        let got = z.radical_membership(&z.from_int(x), &ints(&z, &gens)).unwrap();
        prop_assert_eq!(got.map(|c| c.k), oracle);
    }

    #[test]
    fn modular_radical_matches_bruteforce(n in 2i64..40, gens in prop::collection::vec(0i64..40, 0..3), x in 0i64..40) {
        let m = Ring::modular(n as u64);
        let gens: Vec<i64> = gens.iter().map(|g| g % n).collect();
        let ideal = ideal_mod(n, &gens);
        let oracle = (1..=12).find(|&k| ideal.contains(&pow_mod(x, k, n)));
        let got = m.radical_membership(&m.from_int(x), &ints(&m, &gens)).unwrap();
        prop_assert_eq!(got.map(|c| c.k), oracle);
    }

    #[test]
    fn ann_power_is_minimal(n in 2i64..64, f in 0i64..64, x in 0i64..64) {
        let m = Ring::modular(n as u64);
        let (f, x) = (f % n, x % n);
        let oracle = (0..=12).find(|&k| (pow_mod(f, k, n) * x).rem_euclid(n) == 0);
        prop_assert_eq!(m.ann_power(&m.from_int(f), &m.from_int(x)).map(|w| w.k), oracle);
    }

    #[test]
    fn ann_power_in_integers(f in -5i64..5, x in -5i64..5) {
        let z = Ring::integers();
        let oracle = if x == 0 { Some(0) } else if f == 0 { Some(1) } else { None };
        prop_assert_eq!(z.ann_power(&z.from_int(f), &z.from_int(x)).map(|w| w.k), oracle);
    }

    /// `Z/n[1/f]` is `Z/n'` with `n'` the part of `n` prime to `f`.
    #[test]
    fn modular_loc_eq_matches_quotient(
        n in 2i64..60, f in 0i64..60,
        a in (0i64..60, 0u32..4), b in (0i64..60, 0u32..4), c in (0i64..60, 0u32..4),
    ) {
        let m = Ring::modular(n as u64);
        let f = f % n;
        let mut n2 = n;
        loop {
            let g = naive_gcd(n2, f);
            if g == 1 || n2 == 1 { break; }
            n2 /= g;
        }
        let loc = LocRing::new(&m, m.from_int(f));
        let el = |(r, e): (i64, u32)| LocElem::new(m.from_int(r), e);
        let oracle = |(r1, e1): (i64, u32), (r2, e2): (i64, u32)| {
            (r1 * pow_mod(f, e2, n2) - r2 * pow_mod(f, e1, n2)).rem_euclid(n2) == 0
        };
        let (ea, eb, ec) = (el(a), el(b), el(c));
        prop_assert_eq!(loc.eq(&ea, &eb), oracle(a, b));
        prop_assert!(loc.eq(&ea, &ea));
        prop_assert_eq!(loc.eq(&ea, &eb), loc.eq(&eb, &ea));
        if loc.eq(&ea, &eb) && loc.eq(&eb, &ec) {
            prop_assert!(loc.eq(&ea, &ec));
        }
        // arithmetic respects the relation
        let rewritten = LocElem::new(m.mul(&ea.num, &m.from_int(f)), ea.exp + 1);
        prop_assert!(loc.eq(&loc.add(&ea, &eb), &loc.add(&rewritten, &eb)));
        prop_assert!(loc.eq(&loc.mul(&ea, &ec), &loc.mul(&rewritten, &ec)));
    }

    /// `Z[1/f]` sits inside the rationals for `f ≠ 0`.
    #[test]
    fn integer_loc_eq_matches_rationals(
        f in prop_oneof![-6i64..=-1, 1i64..=6],
        a in (-40i64..40, 0u32..4), b in (-40i64..40, 0u32..4), c in (-40i64..40, 0u32..4),
    ) {
        let z = Ring::integers();
        let loc = LocRing::new(&z, z.from_int(f));
        let q = |(r, e): (i64, u32)| BigRational::new(BigInt::from(r), BigInt::from(f).pow(e));
        let el = |(r, e): (i64, u32)| LocElem::new(z.from_int(r), e);
        prop_assert_eq!(loc.eq(&el(a), &el(b)), q(a) == q(b));
        let sum = loc.add(&el(a), &el(c));
        prop_assert_eq!(BigRational::new(BigInt::from(as_i64(&sum.num)), BigInt::from(f).pow(sum.exp)), q(a) + q(c));
        let prod = loc.mul(&el(b), &el(c));
        prop_assert_eq!(BigRational::new(BigInt::from(as_i64(&prod.num)), BigInt::from(f).pow(prod.exp)), q(b) * q(c));
    }
}

fn as_i64(e: &RingElem) -> i64 {
    match e {
        RingElem::Int(v) => i64::try_from(v).unwrap(),
        _ => panic!("not an integer"),
    }
}

#[test]
fn polynomial_loc_eq_is_an_equivalence() {
    let q = Ring::univariate("x");
    let mut s = Sampler::new(21);
    for _ in 0..1000 {
        let f = s.nonzero_elem(&q);
        let loc = LocRing::new(&q, f.clone());
        let a = LocElem::new(s.elem(&q), s.exp(2));
        let e = s.exp(2);
        let b = LocElem::new(q.mul(&a.num, &q.pow(&f, e)), a.exp + e);
        let c = LocElem::new(q.mul(&b.num, &f), b.exp + 1);
        let d = LocElem::new(s.elem(&q), s.exp(2));
        assert!(loc.eq(&a, &a) && loc.eq(&a, &b) && loc.eq(&b, &a));
        assert!(loc.eq(&b, &c) && loc.eq(&a, &c));
        assert_eq!(loc.eq(&a, &d), loc.eq(&d, &a));
        // a domain with f ≠ 0: equality is plain cross multiplication
        let cross = q.mul(&a.num, &q.pow(&f, d.exp)) == q.mul(&d.num, &q.pow(&f, a.exp));
        assert_eq!(loc.eq(&a, &d), cross);
    }
}

#[test]
fn printing_is_a_fixed_point() {
    let rings = [
        Ring::integers(),
        Ring::modular(12),
        Ring::univariate("x"),
        Ring::multivariate(&["x", "y", "z"]).unwrap(),
    ];
    let mut s = Sampler::new(2);
    for ring in &rings {
        for _ in 0..300 {
            let a = s.elem(ring);
            let text = ring.format(&a);
            let back = ring.parse(&text).unwrap();
            assert_eq!(back, a, "{text}");
            assert_eq!(ring.format(&back), text);
        }
    }
}

fn lattice_laws(ring: &Ring, s: &mut Sampler, triples: usize, max_len: usize) {
    let eq = |a: &LatticeElt, b: &LatticeElt| lat_eq(ring, a, b).unwrap().is_some();
    for _ in 0..triples {
        let a = LatticeElt::new(s.gen_list(ring, max_len));
        let b = LatticeElt::new(s.gen_list(ring, max_len));
        let c = LatticeElt::new(s.gen_list(ring, max_len));
        let m = |x: &LatticeElt, y: &LatticeElt| meet(ring, x, y);
        assert!(eq(&join(&a, &b), &join(&b, &a)));
        assert!(eq(&m(&a, &b), &m(&b, &a)));
        assert!(eq(&join(&a, &join(&b, &c)), &join(&join(&a, &b), &c)));
        assert!(eq(&m(&a, &m(&b, &c)), &m(&m(&a, &b), &c)));
        assert!(eq(&m(&a, &join(&a, &b)), &a));
        assert!(eq(&join(&a, &m(&a, &b)), &a));
        assert!(eq(&join(&a, &a), &a) && eq(&m(&a, &a), &a));
        assert!(eq(&m(&a, &join(&b, &c)), &join(&m(&a, &b), &m(&a, &c))));
        assert!(eq(&join(&a, &m(&b, &c)), &m(&join(&a, &b), &join(&a, &c))));
        let leq = lat_leq(ring, &a, &b).unwrap().is_some();
        assert_eq!(leq, eq(&join(&a, &b), &b));
        let n = normalize(ring, &a).unwrap();
        assert!(eq(&n, &a));
        assert_eq!(normalize(ring, &n).unwrap(), n);
    }
}

#[test]
fn lattice_laws_two_variables() {
    let r = Ring::multivariate(&["x", "y"]).unwrap();
    let shape = Shape {
        int_bound: 5,
        max_degree: 2,
        coeff_bound: 3,
        max_terms: 2,
    };
    let mut s = Sampler::new(8).with_shape(shape);
    lattice_laws(&r, &mut s, 40, 2);
}

#[test]
fn lattice_laws_modular_composite() {
    let mut s = Sampler::new(9);
    lattice_laws(&Ring::modular(360), &mut s, 200, 3);
}

#[test]
fn restriction_homs_agree() {
    // two certificates for D(6) ≤ D(2) give the same map
    let z = Ring::integers();
    let src = LocRing::new(&z, z.from_int(2));
    let tgt = LocRing::new(&z, z.from_int(6));
    let h1 = LocHom::new(src.clone(), tgt.clone(), 1, z.from_int(3)).unwrap();
    let h2 = LocHom::new(src, tgt.clone(), 2, z.from_int(18)).unwrap();
    let mut s = Sampler::new(4);
    for _ in 0..200 {
        let a = LocElem::new(s.elem(&z), s.exp(3));
        assert!(tgt.eq(&h1.apply(&a), &h2.apply(&a)));
    }
}

#[test]
fn restriction_is_functorial_in_zero_divisor_rings() {
    let m = Ring::modular(72);
    let mut s = Sampler::new(6);
    let mut checked = 0;
    for _ in 0..300 {
        let f = s.elem(&m);
        let g = m.mul(&f, &s.elem(&m));
        let e = m.mul(&m.pow(&g, 2), &s.elem(&m));
        let (Some(fg), Some(ge), Some(fe)) = (
            restriction_hom(&m, &f, &g).unwrap(),
            restriction_hom(&m, &g, &e).unwrap(),
            restriction_hom(&m, &f, &e).unwrap(),
        ) else {
            panic!("chain certificates missing");
        };
        let a = LocElem::new(s.elem(&m), s.exp(3));
        assert!(fe.target().eq(&ge.apply(&fg.apply(&a)), &fe.apply(&a)));
        checked += 1;
    }
    assert_eq!(checked, 300);
}

#[test]
fn compatibility_is_symmetric_and_representation_independent() {
    let z = Ring::integers();
    let mut s = Sampler::new(12);
    let parts = ints(&z, &[6, 10, 15]);
    let rev: Vec<RingElem> = parts.iter().rev().cloned().collect();
    let top = LatticeElt::top(&z);
    let cover = cover_check(&z, &top, &parts).unwrap().unwrap();
    let cover_rev = cover_check(&z, &top, &rev).unwrap().unwrap();
    for _ in 0..200 {
        let secs: Vec<LocElem> = if s.exp(1) == 0 {
            let r = s.elem(&z);
            parts
                .iter()
                .map(|f| {
                    let e = s.exp(2);
                    LocElem::new(z.mul(&r, &z.pow(f, e)), e)
                })
                .collect()
        } else {
            parts.iter().map(|_| LocElem::new(s.elem(&z), s.exp(2))).collect()
        };
        let secs_rev: Vec<LocElem> = secs.iter().rev().cloned().collect();
        let fwd = check_compatible(&z, &cover, &secs).unwrap();
        let bwd = check_compatible(&z, &cover_rev, &secs_rev).unwrap();
        assert_eq!(fwd.is_some(), bwd.is_some());
        // replace the first section by an equal one
        let mut alt = secs.clone();
        alt[0] = LocElem::new(z.mul(&secs[0].num, &parts[0]), secs[0].exp + 1);
        assert_eq!(check_compatible(&z, &cover, &alt).unwrap().is_some(), fwd.is_some());
        if let Some(fam) = fwd {
            assert!(fam.verify(&z));
        }
    }
}
