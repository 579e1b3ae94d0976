//! Covers of lattice elements by basic opens, compatible families of
//! sections over them, and the shape of the diagrams whose limits the
//! sheaf condition is about.

use std::fmt;

use crate::cert::{AnnPowerWitness, RadicalCert};
use crate::error::{Error, Result};
use crate::lattice::{d_of, lat_leq, LatticeElt};
use crate::localization::{restriction_to_product, LocElem, LocRing};
use crate::ring::{Ring, RingElem};

/// Objects of the diagram shape for a cover by `n` parts (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagObject {
    Sing(usize),
    /// `Pair(i, j)` with `i < j`.
    Pair(usize, usize),
}

impl fmt::Display for DiagObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagObject::Sing(i) => write!(f, "sing({})", i + 1),
            DiagObject::Pair(i, j) => write!(f, "pair({}, {})", i + 1, j + 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagArrow {
    Id(DiagObject),
    /// `sing(i) -> pair(i, j)`
    Left(usize, usize),
    /// `sing(j) -> pair(i, j)`
    Right(usize, usize),
}

impl DiagArrow {
    pub fn source(&self) -> DiagObject {
        match *self {
            DiagArrow::Id(o) => o,
            DiagArrow::Left(i, _) => DiagObject::Sing(i),
            DiagArrow::Right(_, j) => DiagObject::Sing(j),
        }
    }

    pub fn target(&self) -> DiagObject {
        match *self {
            DiagArrow::Id(o) => o,
            DiagArrow::Left(i, j) | DiagArrow::Right(i, j) => DiagObject::Pair(i, j),
        }
    }
}

/// The indexing category: singletons, ordered pairs and the two inclusions
/// of each singleton into each pair containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagShape {
    n: usize,
    objects: Vec<DiagObject>,
    arrows: Vec<DiagArrow>,
    /// `compose[g][f]` is `g ∘ f` when `f` ends where `g` starts.
    compose: Vec<Vec<Option<usize>>>,
}

impl DiagShape {
    pub fn new(n: usize) -> Self {
        let mut objects: Vec<DiagObject> = (0..n).map(DiagObject::Sing).collect();
        for i in 0..n {
            for j in i + 1..n {
                objects.push(DiagObject::Pair(i, j));
            }
        }
        let mut arrows: Vec<DiagArrow> = objects.iter().map(|&o| DiagArrow::Id(o)).collect();
        for i in 0..n {
            for j in i + 1..n {
                arrows.push(DiagArrow::Left(i, j));
                arrows.push(DiagArrow::Right(i, j));
            }
        }
        let index = |a: DiagArrow| arrows.iter().position(|&b| b == a);
        let compose = arrows
            .iter()
            .map(|&g| {
                arrows
                    .iter()
                    .map(|&f| {
                        if f.target() != g.source() {
                            return None;
                        }
                        match (g, f) {
                            (DiagArrow::Id(_), f) => index(f),
                            (g, DiagArrow::Id(_)) => index(g),
                            _ => None,
                        }
                    })
                    .collect()
            })
            .collect();
        DiagShape {
            n,
            objects,
            arrows,
            compose,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn objects(&self) -> &[DiagObject] {
        &self.objects
    }

    pub fn arrows(&self) -> &[DiagArrow] {
        &self.arrows
    }

    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g][f]
    }

    /// Arrows from `a` to `b`.
    pub fn hom(&self, a: DiagObject, b: DiagObject) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&i| self.arrows[i].source() == a && self.arrows[i].target() == b)
            .collect()
    }
}

/// `target = D(f1) ∨ .. ∨ D(fn)`, with certificates for both inclusions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    target: LatticeElt,
    parts: Vec<RingElem>,
    cert_down: Vec<RadicalCert>,
    cert_up: Vec<RadicalCert>,
}

impl Cover {
    pub fn target(&self) -> &LatticeElt {
        &self.target
    }

    pub fn parts(&self) -> &[RingElem] {
        &self.parts
    }

    /// `parts[i]` in the radical of the target generators.
    pub fn cert_down(&self) -> &[RadicalCert] {
        &self.cert_down
    }

    /// Target generators in the radical of the parts.
    pub fn cert_up(&self) -> &[RadicalCert] {
        &self.cert_up
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn verify(&self, ring: &Ring) -> bool {
        self.cert_down.len() == self.parts.len()
            && self.cert_up.len() == self.target.len()
            && self
                .cert_down
                .iter()
                .zip(&self.parts)
                .all(|(c, f)| c.verify(ring, f, &self.target.gens))
            && self
                .cert_up
                .iter()
                .zip(&self.target.gens)
                .all(|(c, t)| c.verify(ring, t, &self.parts))
    }
}

pub fn cover_check(ring: &Ring, target: &LatticeElt, parts: &[RingElem]) -> Result<Option<Cover>> {
    let joined = LatticeElt::new(parts.to_vec());
    let Some(cert_down) = lat_leq(ring, &joined, target)? else {
        return Ok(None);
    };
    let Some(cert_up) = lat_leq(ring, target, &joined)? else {
        return Ok(None);
    };
    Ok(Some(Cover {
        target: target.clone(),
        parts: parts.to_vec(),
        cert_down,
        cert_up,
    }))
}

/// Sections `sections[i]` of `R[1/parts[i]]` agreeing on every overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibleFamily {
    cover: Cover,
    sections: Vec<LocElem>,
    agreements: Vec<((usize, usize), AnnPowerWitness)>,
}

impl CompatibleFamily {
    pub fn cover(&self) -> &Cover {
        &self.cover
    }

    pub fn sections(&self) -> &[LocElem] {
        &self.sections
    }

    /// For each `i < j`, row-major, the witness for agreement in
    /// `R[1/(f_i f_j)]`.
    pub fn agreements(&self) -> &[((usize, usize), AnnPowerWitness)] {
        &self.agreements
    }

    pub fn verify(&self, ring: &Ring) -> bool {
        self.cover.verify(ring)
            && self.agreements.iter().all(|&((i, j), w)| {
                let loc = LocRing::new(ring, ring.mul(&self.cover.parts[i], &self.cover.parts[j]));
                let (a, b) = overlap_images(ring, &self.cover.parts, &self.sections, i, j);
                w.verify(ring, loc.den(), &loc.cross_diff(&a, &b))
            })
    }
}

/// Images of sections `i` and `j` in `R[1/(f_i f_j)]`.
fn overlap_images(
    ring: &Ring,
    parts: &[RingElem],
    sections: &[LocElem],
    i: usize,
    j: usize,
) -> (LocElem, LocElem) {
    let a = restriction_to_product(ring, &parts[i], &parts[j]).apply(&sections[i]);
    let b = restriction_to_product(ring, &parts[j], &parts[i]).apply(&sections[j]);
    (a, b)
}

/// Decides agreement on every overlap. `None` if some pair disagrees.
pub fn check_compatible(ring: &Ring, cover: &Cover, sections: &[LocElem]) -> Result<Option<CompatibleFamily>> {
    if sections.len() != cover.len() {
        return Err(Error::Precondition(format!(
            "{} sections for a cover by {} parts",
            sections.len(),
            cover.len()
        )));
    }
    let mut agreements = Vec::new();
    for i in 0..cover.len() {
        for j in i + 1..cover.len() {
            let loc = LocRing::new(ring, ring.mul(&cover.parts[i], &cover.parts[j]));
            let (a, b) = overlap_images(ring, &cover.parts, sections, i, j);
            match loc.eq_witness(&a, &b) {
                Some(w) => agreements.push(((i, j), w)),
                None => return Ok(None),
            }
        }
    }
    Ok(Some(CompatibleFamily {
        cover: cover.clone(),
        sections: sections.to_vec(),
        agreements,
    }))
}

/// Convenience for a cover of `D(h)`.
pub fn basic_cover(ring: &Ring, h: &RingElem, parts: &[RingElem]) -> Result<Option<Cover>> {
    cover_check(ring, &d_of(h), parts)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairOutcome {
    /// Glued to this section of `R[1/h]`, restrictions and re-glue agree.
    Glued(LocElem),
    /// Correctly refused: the two sections disagree on `D(f g)`.
    Rejected,
    Failed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackReport {
    pub outcomes: Vec<PairOutcome>,
    /// All elements of `R[1/0]` compared equal.
    pub terminal: bool,
}

impl PullbackReport {
    pub fn passed(&self) -> bool {
        self.terminal && !self.outcomes.iter().any(|o| matches!(o, PairOutcome::Failed(_)))
    }

    pub fn glued(&self) -> usize {
        self.outcomes.iter().filter(|o| matches!(o, PairOutcome::Glued(_))).count()
    }

    pub fn rejected(&self) -> usize {
        self.outcomes.iter().filter(|o| matches!(o, PairOutcome::Rejected)).count()
    }
}

/// Checks that `R[1/h]` is the pullback of `R[1/f] -> R[1/(f g)] <- R[1/g]`
/// on the given pairs, for `D(h) = D(f) ∨ D(g)`. Compatible pairs must
/// glue, restrict back, and glue to the same section with the parts
/// swapped; incompatible pairs must be refused.
pub fn pullback_instance_check(
    ring: &Ring,
    f: &RingElem,
    g: &RingElem,
    h: &RingElem,
    pairs: &[(LocElem, LocElem)],
) -> Result<PullbackReport> {
    let parts = [f.clone(), g.clone()];
    let swapped = [g.clone(), f.clone()];
    let cover = basic_cover(ring, h, &parts)?.ok_or_else(|| {
        Error::Precondition(format!(
            "D({}) is not D({}) ∨ D({})",
            ring.format(h),
            ring.format(f),
            ring.format(g)
        ))
    })?;
    let cover_swapped = basic_cover(ring, h, &swapped)?
        .ok_or_else(|| Error::Internal("cover depends on the order of its parts".into()))?;
    let loc_h = LocRing::new(ring, h.clone());

    let mut outcomes = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        let secs = [a.clone(), b.clone()];
        let Some(family) = check_compatible(ring, &cover, &secs)? else {
            outcomes.push(PairOutcome::Rejected);
            continue;
        };
        let s = crate::structure::glue(ring, h, &family)?.value;
        let mut ok = true;
        for (part, sec) in parts.iter().zip(&secs) {
            let back = crate::structure::restrict_basic(ring, &s, h, part)?;
            ok &= LocRing::new(ring, part.clone()).eq(&back, sec);
        }
        if !ok {
            outcomes.push(PairOutcome::Failed("glue does not restrict to the pair".into()));
            continue;
        }
        let family2 = check_compatible(ring, &cover_swapped, &[b.clone(), a.clone()])?
            .ok_or_else(|| Error::Internal("compatibility depends on the order of parts".into()))?;
        let s2 = crate::structure::glue(ring, h, &family2)?.value;
        if loc_h.eq(&s, &s2) {
            outcomes.push(PairOutcome::Glued(s));
        } else {
            outcomes.push(PairOutcome::Failed("re-glue with swapped parts differs".into()));
        }
    }

    let zero_ring = LocRing::new(ring, ring.zero());
    let terminal = pairs
        .iter()
        .flat_map(|(a, b)| [a, b])
        .all(|x| zero_ring.eq(x, &zero_ring.one()));
    Ok(PullbackReport { outcomes, terminal })
}

/// One section on each side of a two-part cover.
pub type SectionPair = (LocElem, LocElem);

/// Pairs for [`pullback_instance_check`]: restrictions of random sections
/// of `R[1/h]` with rewritten representatives, and the same pairs with the
/// second entry shifted by one, which disagree unless `R[1/(f g)]` is zero.
pub fn sample_pullback_pairs(
    ring: &Ring,
    f: &RingElem,
    g: &RingElem,
    h: &RingElem,
    sampler: &mut crate::sample::Sampler,
    n: usize,
) -> Result<(Vec<SectionPair>, Vec<SectionPair>)> {
    let to_f = crate::localization::restriction_hom(ring, h, f)?
        .ok_or_else(|| Error::Precondition(format!("D({}) is not below D({})", ring.format(f), ring.format(h))))?;
    let to_g = crate::localization::restriction_hom(ring, h, g)?
        .ok_or_else(|| Error::Precondition(format!("D({}) is not below D({})", ring.format(g), ring.format(h))))?;
    let overlap_trivial = LocRing::new(ring, ring.mul(f, g)).is_zero_ring();
    let mut good = Vec::with_capacity(n);
    let mut bad = Vec::new();
    for _ in 0..n {
        let s = LocElem::new(sampler.elem(ring), sampler.exp(2));
        let a = to_f.apply(&s);
        let b = to_g.apply(&s);
        // r/f^n -> r f^e / f^(n+e)
        let e = sampler.exp(2);
        let a = LocElem::new(ring.mul(&a.num, &ring.pow(f, e)), a.exp + e);
        if !overlap_trivial {
            let gl = LocRing::new(ring, g.clone());
            bad.push((a.clone(), gl.add(&b, &gl.one())));
        }
        good.push((a, b));
    }
    Ok((good, bad))
}
