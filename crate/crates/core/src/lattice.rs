//! The Zariski lattice: finite generator lists up to equality of radicals.
//!
//! `[a1, .., an]` stands for `D(a1) ∨ .. ∨ D(an)`. Join concatenates, meet
//! takes all pairwise products, and `a ≤ b` holds when every generator of
//! `a` lies in the radical of the ideal generated by `b`.

use std::fmt;

use crate::cert::RadicalCert;
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElem, Tier};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LatticeElt {
    pub gens: Vec<RingElem>,
}

impl LatticeElt {
    pub fn new(gens: Vec<RingElem>) -> Self {
        LatticeElt { gens }
    }

    pub fn bottom() -> Self {
        LatticeElt { gens: Vec::new() }
    }

    pub fn top(ring: &Ring) -> Self {
        d_of(&ring.one())
    }

    pub fn gens(&self) -> &[RingElem] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        DisplayElt { ring, elt: self }
    }
}

struct DisplayElt<'a> {
    ring: &'a Ring,
    elt: &'a LatticeElt,
}

impl fmt::Display for DisplayElt<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format_list(&self.elt.gens))
    }
}

/// The support `D(f)`.
pub fn d_of(f: &RingElem) -> LatticeElt {
    LatticeElt::new(vec![f.clone()])
}

pub fn join(a: &LatticeElt, b: &LatticeElt) -> LatticeElt {
    LatticeElt::new(a.gens.iter().chain(&b.gens).cloned().collect())
}

/// Pairwise products, row-major: `a0 b0, a0 b1, .., a1 b0, ..`.
pub fn meet(ring: &Ring, a: &LatticeElt, b: &LatticeElt) -> LatticeElt {
    LatticeElt::new(
        a.gens
            .iter()
            .flat_map(|x| b.gens.iter().map(move |y| ring.mul(x, y)))
            .collect(),
    )
}

/// One radical certificate per generator of `a` against `b.gens`, or `None`
/// if some generator of `a` is outside the radical.
pub fn lat_leq(ring: &Ring, a: &LatticeElt, b: &LatticeElt) -> Result<Option<Vec<RadicalCert>>> {
    let mut certs = Vec::with_capacity(a.len());
    for x in &a.gens {
        match ring.radical_membership(x, &b.gens)? {
            Some(c) => certs.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(certs))
}

/// Certificates for both inclusions of a lattice equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqCert {
    /// Generators of `a` in the radical of `b`.
    pub a_in_b: Vec<RadicalCert>,
    /// Generators of `b` in the radical of `a`.
    pub b_in_a: Vec<RadicalCert>,
}

impl EqCert {
    pub fn verify(&self, ring: &Ring, a: &LatticeElt, b: &LatticeElt) -> bool {
        let side = |certs: &[RadicalCert], xs: &LatticeElt, ys: &LatticeElt| {
            certs.len() == xs.len()
                && certs.iter().zip(&xs.gens).all(|(c, x)| c.verify(ring, x, &ys.gens))
        };
        side(&self.a_in_b, a, b) && side(&self.b_in_a, b, a)
    }
}

pub fn lat_eq(ring: &Ring, a: &LatticeElt, b: &LatticeElt) -> Result<Option<EqCert>> {
    let Some(a_in_b) = lat_leq(ring, a, b)? else {
        return Ok(None);
    };
    Ok(lat_leq(ring, b, a)?.map(|b_in_a| EqCert { a_in_b, b_in_a }))
}

/// A smaller list with the same radical. Zeros and duplicates go, a unit
/// anywhere gives `[1]`; principal rings collapse to the gcd and polynomial
/// rings in several variables drop generators that lie in the radical of
/// the rest.
pub fn normalize(ring: &Ring, a: &LatticeElt) -> Result<LatticeElt> {
    if a.gens.iter().any(|g| ring.is_unit(g).is_some()) {
        return Ok(LatticeElt::top(ring));
    }
    match ring.tier() {
        Tier::Principal => {
            let g = ring.gcd(&a.gens).expect("principal ring");
            Ok(if ring.is_zero(&g) {
                LatticeElt::bottom()
            } else if ring.is_unit(&g).is_some() {
                LatticeElt::top(ring)
            } else {
                d_of(&g)
            })
        }
        Tier::Groebner => {
            let mut gens: Vec<RingElem> = Vec::new();
            for g in &a.gens {
                if ring.is_zero(g) {
                    continue;
                }
                let g = ring.monic(g);
                if !gens.contains(&g) {
                    gens.push(g);
                }
            }
            let mut i = 0;
            while i < gens.len() {
                let others: Vec<RingElem> = gens
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, g)| g.clone())
                    .collect();
                if ring.radical_membership(&gens[i], &others)?.is_some() {
                    gens.remove(i);
                } else {
                    i += 1;
                }
            }
            if gens.len() == 1 && ring.is_unit(&gens[0]).is_some() {
                return Ok(LatticeElt::top(ring));
            }
            Ok(LatticeElt::new(gens))
        }
    }
}

/// Whether `a = D(f)` for a single `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Basic {
    Yes(RingElem),
    Unknown,
}

/// Decides basicness in principal rings, where the answer is always yes.
/// With several variables only lists that normalize to at most one
/// generator are recognized.
pub fn is_basic_open(ring: &Ring, a: &LatticeElt) -> Result<Basic> {
    let n = normalize(ring, a)?;
    if ring.tier() == Tier::Principal {
        return Ok(Basic::Yes(ring.gcd(&a.gens).expect("principal ring")));
    }
    Ok(match n.gens.as_slice() {
        [] => Basic::Yes(ring.zero()),
        [g] => Basic::Yes(g.clone()),
        _ => Basic::Unknown,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `D(1) = ⊤`
    OneIsTop,
    /// `D(0) = ⊥`
    ZeroIsBottom,
    /// `D(f g) = D(f) ∧ D(g)`
    Product,
    /// `D(f + g) ≤ D(f) ∨ D(g)`
    Sum,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::OneIsTop => "D(1) = top",
            Relation::ZeroIsBottom => "D(0) = bottom",
            Relation::Product => "D(fg) = D(f) meet D(g)",
            Relation::Sum => "D(f+g) <= D(f) join D(g)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportFailure {
    pub relation: Relation,
    /// Index into the sampled pairs; `None` for the two constant relations.
    pub pair: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SupportReport {
    pub checks: usize,
    pub failures: Vec<SupportFailure>,
}

impl SupportReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the support relations of `D` on each pair.
pub fn support_check(ring: &Ring, pairs: &[(RingElem, RingElem)]) -> Result<SupportReport> {
    let mut report = SupportReport::default();
    let mut expect = |ok: bool, relation, pair| {
        report.checks += 1;
        if !ok {
            report.failures.push(SupportFailure { relation, pair });
        }
    };
    let top = LatticeElt::top(ring);
    let bottom = LatticeElt::bottom();
    expect(lat_eq(ring, &d_of(&ring.one()), &top)?.is_some(), Relation::OneIsTop, None);
    expect(lat_eq(ring, &d_of(&ring.zero()), &bottom)?.is_some(), Relation::ZeroIsBottom, None);
    for (i, (f, g)) in pairs.iter().enumerate() {
        let (df, dg) = (d_of(f), d_of(g));
        let product = lat_eq(ring, &d_of(&ring.mul(f, g)), &meet(ring, &df, &dg))?;
        expect(product.is_some(), Relation::Product, Some(i));
        // f + g = 1 f + 1 g, so the sum relation needs no search.
        let cert = RadicalCert {
            k: 1,
            coeffs: vec![ring.one(), ring.one()],
        };
        let ok = crate::audit::record(
            crate::audit::CertKind::Radical,
            cert.verify(ring, &ring.add(f, g), &[f.clone(), g.clone()]),
        );
        expect(ok, Relation::Sum, Some(i));
    }
    Ok(report)
}

/// A finite lattice given by its order relation, with join and meet tables
/// derived and the distributive laws checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDistLattice {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    top: usize,
    bottom: usize,
}

impl FiniteDistLattice {
    /// `leq[i][j]` means element `i` is below element `j`.
    pub fn new(names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = names.len();
        let bad = |m: &str| Err(Error::InvalidDescriptor(format!("finite lattice: {m}")));
        if n == 0 || leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return bad("order table must be square and nonempty");
        }
        for i in 0..n {
            if !leq[i][i] {
                return bad("order is not reflexive");
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return bad("order is not antisymmetric");
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return bad("order is not transitive");
                    }
                }
            }
        }
        // least upper bound: the upper bound below every other upper bound
        let bound = |i: usize, j: usize, up: bool| -> Option<usize> {
            let rel = |a: usize, b: usize| if up { leq[a][b] } else { leq[b][a] };
            let cands: Vec<usize> = (0..n).filter(|&c| rel(i, c) && rel(j, c)).collect();
            cands.iter().copied().find(|&c| cands.iter().all(|&d| rel(c, d)))
        };
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                match (bound(i, j, true), bound(i, j, false)) {
                    (Some(u), Some(l)) => {
                        join[i][j] = u;
                        meet[i][j] = l;
                    }
                    _ => return bad("some pair has no join or meet"),
                }
            }
        }
        let top = (0..n).find(|&t| (0..n).all(|i| leq[i][t]));
        let bottom = (0..n).find(|&b| (0..n).all(|i| leq[b][i]));
        let (Some(top), Some(bottom)) = (top, bottom) else {
            return bad("missing top or bottom");
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                        return bad("not distributive");
                    }
                }
            }
        }
        Ok(FiniteDistLattice {
            names,
            leq,
            join,
            meet,
            top,
            bottom,
        })
    }

    /// Divisors of `n` ordered by divisibility.
    pub fn divisors(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDescriptor("divisor lattice of 0".into()));
        }
        let ds: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
        let leq = ds.iter().map(|a| ds.iter().map(|b| b.is_multiple_of(*a)).collect()).collect();
        Self::new(ds.iter().map(u64::to_string).collect(), leq)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }
}

/// The image of `a` under the lattice map induced by a support `d`. The
/// support relations are checked on the generators of `a` first.
pub fn universal_morphism(
    ring: &Ring,
    target: &FiniteDistLattice,
    d: impl Fn(&RingElem) -> usize,
    a: &LatticeElt,
) -> Result<usize> {
    let fail = |what: String| Err(Error::Precondition(format!("support map violates {what}")));
    if d(&ring.one()) != target.top() {
        return fail(Relation::OneIsTop.to_string());
    }
    if d(&ring.zero()) != target.bottom() {
        return fail(Relation::ZeroIsBottom.to_string());
    }
    for f in &a.gens {
        for g in &a.gens {
            if d(&ring.mul(f, g)) != target.meet(d(f), d(g)) {
                return fail(format!("{} at ({}, {})", Relation::Product, ring.format(f), ring.format(g)));
            }
            if !target.leq(d(&ring.add(f, g)), target.join(d(f), d(g))) {
                return fail(format!("{} at ({}, {})", Relation::Sum, ring.format(f), ring.format(g)));
            }
        }
    }
    Ok(a.gens.iter().fold(target.bottom(), |acc, g| target.join(acc, d(g))))
}

/// The support of an integer in the divisors of a squarefree `n`: the
/// product of the primes of `n` that do not divide it.
pub fn divisor_support(n: u64) -> impl Fn(&RingElem) -> u64 {
    move |f| {
        let RingElem::Int(v) = f else {
            panic!("divisor support is defined on integers");
        };
        let m = num_bigint::BigInt::from(n);
        let g = num_integer::Integer::gcd(v, &m);
        u64::try_from(&(m / g)).expect("divisor of n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(z: &Ring, xs: &[i64]) -> LatticeElt {
        LatticeElt::new(xs.iter().map(|&x| z.from_int(x)).collect())
    }

    #[test]
    fn supports_of_constants() {
        for ring in [Ring::integers(), Ring::modular(12), Ring::univariate("x")] {
            assert!(lat_eq(&ring, &d_of(&ring.zero()), &LatticeElt::bottom()).unwrap().is_some());
            assert!(lat_eq(&ring, &d_of(&ring.one()), &LatticeElt::top(&ring)).unwrap().is_some());
        }
        let q = Ring::univariate("x");
        let x = q.parse("x").unwrap();
        assert!(lat_eq(&q, &d_of(&x), &d_of(&q.pow(&x, 2))).unwrap().is_some());
    }

    #[test]
    fn join_and_meet() {
        let z = Ring::integers();
        assert_eq!(join(&ints(&z, &[2]), &ints(&z, &[3])), ints(&z, &[2, 3]));
        let m = meet(&z, &ints(&z, &[2]), &ints(&z, &[3]));
        assert_eq!(m, ints(&z, &[6]));
        let q = Ring::univariate("x");
        let a = LatticeElt::new(q.parse_all(&["x"]).unwrap());
        let b = LatticeElt::new(q.parse_all(&["x", "x - 1"]).unwrap());
        let m = meet(&q, &a, &b);
        assert_eq!(m, LatticeElt::new(q.parse_all(&["x^2", "x^2 - x"]).unwrap()));
        assert_eq!(normalize(&q, &m).unwrap(), LatticeElt::new(q.parse_all(&["x"]).unwrap()));
    }

    #[test]
    fn equality_and_order() {
        let z = Ring::integers();
        let cert = lat_eq(&z, &ints(&z, &[4, 6]), &ints(&z, &[2])).unwrap().unwrap();
        assert!(cert.verify(&z, &ints(&z, &[4, 6]), &ints(&z, &[2])));
        assert!(lat_eq(&z, &ints(&z, &[]), &ints(&z, &[0])).unwrap().is_some());
        assert!(lat_leq(&z, &ints(&z, &[2, 3]), &ints(&z, &[6])).unwrap().is_none());
        assert!(lat_leq(&z, &ints(&z, &[6]), &ints(&z, &[2, 3])).unwrap().is_some());
    }

    #[test]
    fn normal_forms() {
        let z = Ring::integers();
        assert_eq!(normalize(&z, &ints(&z, &[4, 6])).unwrap(), ints(&z, &[2]));
        assert_eq!(normalize(&z, &ints(&z, &[0, 0])).unwrap(), LatticeElt::bottom());
        assert_eq!(normalize(&z, &ints(&z, &[-3])).unwrap(), ints(&z, &[3]));
        assert_eq!(normalize(&z, &ints(&z, &[4, 7])).unwrap(), ints(&z, &[1]));
        let m = Ring::modular(12);
        assert_eq!(normalize(&m, &ints(&m, &[5])).unwrap(), ints(&m, &[1]));
        assert_eq!(normalize(&m, &ints(&m, &[8, 6])).unwrap(), ints(&m, &[2]));
        let r = Ring::multivariate(&["x", "y"]).unwrap();
        let xy = LatticeElt::new(r.parse_all(&["x", "y"]).unwrap());
        assert_eq!(normalize(&r, &xy).unwrap(), xy);
        let red = LatticeElt::new(r.parse_all(&["2*x", "0", "x^2*y", "x"]).unwrap());
        assert_eq!(normalize(&r, &red).unwrap(), LatticeElt::new(r.parse_all(&["x"]).unwrap()));
    }

    #[test]
    fn basic_opens() {
        let z = Ring::integers();
        assert_eq!(is_basic_open(&z, &ints(&z, &[4, 6])).unwrap(), Basic::Yes(z.from_int(2)));
        let r = Ring::multivariate(&["x", "y"]).unwrap();
        let x = r.parse("x").unwrap();
        assert_eq!(is_basic_open(&r, &d_of(&x)).unwrap(), Basic::Yes(x));
        let xy = LatticeElt::new(r.parse_all(&["x", "y"]).unwrap());
        assert_eq!(is_basic_open(&r, &xy).unwrap(), Basic::Unknown);
    }

    #[test]
    fn support_relations() {
        let z = Ring::integers();
        let pairs = [(z.zero(), z.zero()), (z.from_int(6), z.from_int(-4))];
        assert!(support_check(&z, &pairs).unwrap().passed());
        let q = Ring::univariate("x");
        let x = q.parse("x").unwrap();
        assert!(support_check(&q, &[(x.clone(), q.neg(&x))]).unwrap().passed());
    }

    #[test]
    fn divisor_lattice_morphism() {
        let lat = FiniteDistLattice::divisors(30).unwrap();
        assert_eq!(lat.size(), 8);
        let d30 = divisor_support(30);
        let d = |f: &RingElem| lat.index_of(&d30(f).to_string()).unwrap();
        let z = Ring::integers();
        assert_eq!(universal_morphism(&z, &lat, d, &LatticeElt::bottom()).unwrap(), lat.bottom());
        let img = universal_morphism(&z, &lat, d, &ints(&z, &[2, 3])).unwrap();
        assert_eq!(img, lat.join(d(&z.from_int(2)), d(&z.from_int(3))));
        assert_eq!(lat.name(img), "30");
        assert_eq!(universal_morphism(&z, &lat, d, &ints(&z, &[1, 10])).unwrap(), lat.top());
        // 4 and 6 generate the same radical as 2
        assert_eq!(
            universal_morphism(&z, &lat, d, &ints(&z, &[4, 6])).unwrap(),
            universal_morphism(&z, &lat, d, &ints(&z, &[2])).unwrap()
        );
    }

    #[test]
    fn bad_support_is_rejected() {
        let lat = FiniteDistLattice::divisors(30).unwrap();
        let z = Ring::integers();
        let err = universal_morphism(&z, &lat, |_| lat.top(), &ints(&z, &[2])).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn non_distributive_rejected() {
        // the diamond M3
        let t = true;
        let f = false;
        let leq = vec![
            vec![t, t, t, t, t],
            vec![f, t, f, f, t],
            vec![f, f, t, f, t],
            vec![f, f, f, t, t],
            vec![f, f, f, f, t],
        ];
        let names = (0..5).map(|i| i.to_string()).collect();
        assert!(FiniteDistLattice::new(names, leq).is_err());
    }
}
