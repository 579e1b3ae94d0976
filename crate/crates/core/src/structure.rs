//! The structure sheaf: `R[1/f]` over `D(f)`, restriction between basic
//! opens, gluing of compatible families and sections over arbitrary
//! lattice elements presented by a cover and a family.

use crate::error::{Error, Result};
use crate::lattice::{d_of, lat_eq, lat_leq, LatticeElt};
use crate::localization::{restriction_hom, restriction_to_product, LocElem, LocHom, LocRing};
use crate::ring::{Ring, RingElem};
use crate::sheaf::{check_compatible, cover_check, CompatibleFamily, Cover};

/// The intermediate values of one gluing run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueTrace {
    /// Common denominator exponent of the inputs.
    pub d: u32,
    /// Largest pairwise annihilating exponent.
    pub n: u32,
    /// `d + n`
    pub big_d: u32,
    /// Exponent in `h^t = Σ e_i f_i^D`.
    pub t: u32,
    pub e: Vec<RingElem>,
    /// `a_i f_i^n`, the numerators over `f_i^D`.
    pub tilde: Vec<RingElem>,
    /// `Σ e_i tilde_i`, the glued numerator over `h^t`.
    pub numerator: RingElem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Glued {
    /// The section of `R[1/h]`.
    pub value: LocElem,
    pub trace: GlueTrace,
}

/// Glues a compatible family on a cover of `D(h)` to a section of
/// `R[1/h]`. The result is checked to restrict to every input.
pub fn glue(ring: &Ring, h: &RingElem, family: &CompatibleFamily) -> Result<Glued> {
    let parts = family.cover().parts();
    let sections = family.sections();
    let cover = cover_check(ring, &d_of(h), parts)?.ok_or_else(|| {
        Error::Precondition(format!(
            "{} is not a cover of D({})",
            ring.format_list(parts),
            ring.format(h)
        ))
    })?;

    let d = sections.iter().map(|s| s.exp).max().unwrap_or(0);
    let a: Vec<RingElem> = sections
        .iter()
        .zip(parts)
        .map(|(s, f)| ring.mul(&s.num, &ring.pow(f, d - s.exp)))
        .collect();
    let fd: Vec<RingElem> = parts.iter().map(|f| ring.pow(f, d)).collect();

    let mut n = 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let diff = ring.sub(&ring.mul(&a[i], &fd[j]), &ring.mul(&a[j], &fd[i]));
            let w = ring.ann_power(&ring.mul(&parts[i], &parts[j]), &diff).ok_or_else(|| {
                Error::Precondition(format!("sections {} and {} disagree on the overlap", i + 1, j + 1))
            })?;
            n = n.max(w.k);
        }
    }
    let big_d = d + n;
    let tilde: Vec<RingElem> = a.iter().zip(parts).map(|(x, f)| ring.mul(x, &ring.pow(f, n))).collect();
    let powered: Vec<RingElem> = parts.iter().map(|f| ring.pow(f, big_d)).collect();

    let cert = ring.radical_membership(h, &powered)?.ok_or_else(|| {
        Error::Internal("cover certificate did not survive raising the parts to a power".into())
    })?;
    let numerator = ring.combine(&cert.coeffs, &tilde);
    let ht = ring.pow(h, cert.k);

    for (j, (fj, tj)) in powered.iter().zip(&tilde).enumerate() {
        if ring.mul(fj, &numerator) != ring.mul(tj, &ht) {
            return Err(Error::Internal(format!("glued numerator fails separation at part {}", j + 1)));
        }
    }

    let value = match ring.is_unit(h) {
        Some(inv) => LocElem::new(ring.mul(&numerator, &ring.pow(&inv, cert.k)), 0),
        None => LocElem::new(numerator.clone(), cert.k),
    };

    let source = LocRing::new(ring, h.clone());
    for (i, (f, down)) in parts.iter().zip(cover.cert_down()).enumerate() {
        let hom = LocHom::new(source.clone(), LocRing::new(ring, f.clone()), down.k, down.coeffs[0].clone())?;
        if !hom.target().eq(&hom.apply(&value), &sections[i]) {
            return Err(Error::Internal(format!("glued section does not restrict to part {}", i + 1)));
        }
    }

    Ok(Glued {
        value,
        trace: GlueTrace {
            d,
            n,
            big_d,
            t: cert.k,
            e: cert.coeffs,
            tilde,
            numerator,
        },
    })
}

/// Restriction `R[1/f] -> R[1/g]`, defined when `D(g) ≤ D(f)`.
pub fn restrict_basic(ring: &Ring, s: &LocElem, f: &RingElem, g: &RingElem) -> Result<LocElem> {
    let hom = restriction_hom(ring, f, g)?.ok_or_else(|| {
        Error::Precondition(format!(
            "no restriction: {} is not in the radical of ({})",
            ring.format(g),
            ring.format(f)
        ))
    })?;
    Ok(hom.apply(s))
}

/// A section over a lattice element, presented on a cover by basic opens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheafSection {
    family: CompatibleFamily,
}

impl SheafSection {
    pub fn new(ring: &Ring, over: &LatticeElt, parts: &[RingElem], sections: &[LocElem]) -> Result<Self> {
        let cover = cover_check(ring, over, parts)?.ok_or_else(|| {
            Error::Precondition(format!(
                "{} does not cover {}",
                ring.format_list(parts),
                over.display(ring)
            ))
        })?;
        Self::from_cover(ring, &cover, sections)
    }

    pub fn from_cover(ring: &Ring, cover: &Cover, sections: &[LocElem]) -> Result<Self> {
        let family = check_compatible(ring, cover, sections)?
            .ok_or_else(|| Error::Precondition("sections are not compatible".into()))?;
        Ok(SheafSection { family })
    }

    /// The section of `R` over the top element given by a global element.
    pub fn global(ring: &Ring, r: &RingElem) -> Result<Self> {
        let one = ring.one();
        Self::new(ring, &LatticeElt::top(ring), &[one], &[LocElem::new(r.clone(), 0)])
    }

    pub fn over(&self) -> &LatticeElt {
        self.family.cover().target()
    }

    pub fn cover(&self) -> &Cover {
        self.family.cover()
    }

    pub fn family(&self) -> &CompatibleFamily {
        &self.family
    }

    pub fn parts(&self) -> &[RingElem] {
        self.family.cover().parts()
    }

    pub fn sections(&self) -> &[LocElem] {
        self.family.sections()
    }
}

/// Restricts `sec` to `y ≤ sec.over()`, presented on the cover `parts` of
/// `y`. Each component is glued from the restrictions of `sec` to the
/// overlaps `g_j f_i`.
pub fn restrict_section(ring: &Ring, sec: &SheafSection, y: &LatticeElt, parts: &[RingElem]) -> Result<SheafSection> {
    if lat_leq(ring, y, sec.over())?.is_none() {
        return Err(Error::Precondition(format!(
            "{} is not below {}",
            y.display(ring),
            sec.over().display(ring)
        )));
    }
    let ycover = cover_check(ring, y, parts)?.ok_or_else(|| {
        Error::Precondition(format!("{} does not cover {}", ring.format_list(parts), y.display(ring)))
    })?;
    let mut components = Vec::with_capacity(parts.len());
    for g in parts {
        let refined: Vec<RingElem> = sec.parts().iter().map(|f| ring.mul(f, g)).collect();
        let restricted: Vec<LocElem> = sec
            .parts()
            .iter()
            .zip(sec.sections())
            .map(|(f, s)| restriction_to_product(ring, f, g).apply(s))
            .collect();
        let cover = cover_check(ring, &d_of(g), &refined)?
            .ok_or_else(|| Error::Internal("refined parts fail to cover a part of y".into()))?;
        let family = check_compatible(ring, &cover, &restricted)?
            .ok_or_else(|| Error::Internal("restricted family lost compatibility".into()))?;
        components.push(glue(ring, g, &family)?.value);
    }
    let family = check_compatible(ring, &ycover, &components)?
        .ok_or_else(|| Error::Internal("restricted components are not compatible".into()))?;
    Ok(SheafSection { family })
}

/// Equality of two sections over the same element, compared on the common
/// refinement `{f_i g_j}` of their covers.
pub fn section_eq(ring: &Ring, s: &SheafSection, t: &SheafSection) -> Result<bool> {
    if lat_eq(ring, s.over(), t.over())?.is_none() {
        return Err(Error::Precondition(format!(
            "sections live over different elements {} and {}",
            s.over().display(ring),
            t.over().display(ring)
        )));
    }
    for (f, a) in s.parts().iter().zip(s.sections()) {
        for (g, b) in t.parts().iter().zip(t.sections()) {
            let loc = LocRing::new(ring, ring.mul(f, g));
            let a = restriction_to_product(ring, f, g).apply(a);
            let b = restriction_to_product(ring, g, f).apply(b);
            if !loc.eq(&a, &b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoundtripReport {
    pub samples: usize,
    /// `(sample index, what went wrong)`
    pub failures: Vec<(usize, String)>,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For each `r`, spreads `r` over a cover of the top element, glues it back
/// and spreads the glue again.
pub fn top_roundtrip(ring: &Ring, parts: &[RingElem], samples: &[RingElem]) -> Result<RoundtripReport> {
    let one = ring.one();
    let cover = cover_check(ring, &LatticeElt::top(ring), parts)?.ok_or_else(|| {
        Error::Precondition(format!("{} does not cover the top element", ring.format_list(parts)))
    })?;
    let base = LocRing::base(ring);
    let mut report = RoundtripReport {
        samples: samples.len(),
        failures: Vec::new(),
    };
    for (idx, r) in samples.iter().enumerate() {
        let spread: Vec<LocElem> = parts.iter().map(|_| LocElem::new(r.clone(), 0)).collect();
        let Some(family) = check_compatible(ring, &cover, &spread)? else {
            report.failures.push((idx, "constant family is not compatible".into()));
            continue;
        };
        let glued = glue(ring, &one, &family)?.value;
        if !base.eq(&glued, &base.from_base(r)) {
            report.failures.push((idx, format!("glue gave {} instead", ring.format(&glued.num))));
            continue;
        }
        for (i, f) in parts.iter().enumerate() {
            let back = restrict_basic(ring, &glued, &one, f)?;
            if !LocRing::new(ring, f.clone()).eq(&back, &spread[i]) {
                report.failures.push((idx, format!("respreading differs on part {}", i + 1)));
            }
        }
    }
    Ok(report)
}
