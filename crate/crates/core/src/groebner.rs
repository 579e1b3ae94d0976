//! Gröbner bases with cofactor tracking over `Q[x1..xn]`, graded reverse
//! lexicographic order.
//!
//! Every basis element carries a transform row expressing it in terms of the
//! input generators, so membership answers come with coefficients that can
//! be re-checked against the original generators.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{MPoly, Monomial, RADICAL_EXPONENT_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub nvars: usize,
    /// The generators the basis was computed from.
    pub gens: Vec<MPoly>,
    /// Monic, minimal (no leading monomial divides another).
    pub basis: Vec<MPoly>,
    /// `basis[i] = sum_j transform[i][j] * gens[j]`.
    pub transform: Vec<Vec<MPoly>>,
    pub order: MonomialOrder,
    /// Number of S-pairs reduced while building the basis.
    pub pairs_processed: usize,
}

impl GroebnerBasis {
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant() && !self.basis[0].is_zero()
    }

    /// Re-checks every transform row against the generators.
    pub fn verify_transform(&self) -> bool {
        self.basis.iter().zip(&self.transform).all(|(b, row)| {
            row.len() == self.gens.len() && combine(self.nvars, row, &self.gens) == *b
        })
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn verify_s_pairs(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let s = s_poly(&self.basis[i], &self.basis[j]);
                let (r, _) = divide_with_cofactors(&s, &self.basis);
                if !r.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Expresses `x` in the generators, or `None` if it is not in the ideal.
    pub fn express(&self, x: &MPoly) -> Option<Vec<MPoly>> {
        let (r, q) = divide_with_cofactors(x, &self.basis);
        if !r.is_zero() {
            return None;
        }
        let mut coeffs = vec![MPoly::zero(self.nvars); self.gens.len()];
        for (qi, row) in q.iter().zip(&self.transform) {
            if qi.is_zero() {
                continue;
            }
            for (c, t) in coeffs.iter_mut().zip(row) {
                *c = &*c + &(qi * t);
            }
        }
        Some(coeffs)
    }
}

pub(crate) fn combine(nvars: usize, coeffs: &[MPoly], gens: &[MPoly]) -> MPoly {
    coeffs
        .iter()
        .zip(gens)
        .fold(MPoly::zero(nvars), |acc, (c, g)| &acc + &(c * g))
}

/// Multivariate division: `p = sum cofactors[i] * basis[i] + remainder`, with
/// no remainder term divisible by a leading monomial of the basis.
pub fn divide_with_cofactors(p: &MPoly, basis: &[MPoly]) -> (MPoly, Vec<MPoly>) {
    let nvars = p.nvars();
    let mut cofactors = vec![MPoly::zero(nvars); basis.len()];
    let mut remainder = MPoly::zero(nvars);
    let mut rest = p.clone();
    let leads: Vec<Option<(Monomial, BigRational)>> = basis
        .iter()
        .map(|b| b.leading_term().map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    while let Some((m, c)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = leads.iter().enumerate().find_map(|(i, lt)| {
            lt.as_ref()
                .filter(|(lm, _)| lm.divides(&m))
                .map(|(lm, lc)| (i, m.div(lm), &c / lc))
        });
        match divisor {
            Some((i, qm, qc)) => {
                rest = &rest - &basis[i].mul_term(&qm, &qc);
                cofactors[i] = &cofactors[i] + &MPoly::term(qm, qc);
            }
            None => {
                let lead = MPoly::term(m, c);
                rest = &rest - &lead;
                remainder = &remainder + &lead;
            }
        }
    }
    (remainder, cofactors)
}

fn s_poly(a: &MPoly, b: &MPoly) -> MPoly {
    let (s, _) = s_combination(a, b);
    s
}

/// The S-polynomial of `a, b` and the multipliers `(ua, ub)` with
/// `S = ua*a - ub*b`.
fn s_combination(a: &MPoly, b: &MPoly) -> (MPoly, (MPoly, MPoly)) {
    let (ma, ca) = a.leading_term().expect("nonzero");
    let (mb, cb) = b.leading_term().expect("nonzero");
    let l = ma.lcm(mb);
    let ua = MPoly::term(l.div(ma), ca.recip());
    let ub = MPoly::term(l.div(mb), cb.recip());
    let s = &(&ua * a) - &(&ub * b);
    (s, (ua, ub))
}

fn unit_vector(nvars: usize, len: usize, i: usize, c: BigRational) -> Vec<MPoly> {
    let mut row = vec![MPoly::zero(nvars); len];
    row[i] = MPoly::constant(nvars, c);
    row
}

/// Buchberger's algorithm tracking cofactors. Aborts with a resource error
/// after `pair_budget` S-pair reductions.
pub fn buchberger(nvars: usize, gens: &[MPoly], pair_budget: usize) -> Result<GroebnerBasis> {
    let m = gens.len();
    let mut polys: Vec<MPoly> = Vec::new();
    let mut rows: Vec<Vec<MPoly>> = Vec::new();
    let finish = |basis: Vec<MPoly>, transform: Vec<Vec<MPoly>>, pairs: usize| {
        let gb = GroebnerBasis {
            nvars,
            gens: gens.to_vec(),
            basis,
            transform,
            order: MonomialOrder::GrevLex,
            pairs_processed: pairs,
        };
        if gb.verify_transform() {
            Ok(gb)
        } else {
            Err(Error::Internal("Gröbner transform rows failed to re-verify".into()))
        }
    };

    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        if g.is_constant() {
            let row = unit_vector(nvars, m, i, g.constant_term().recip());
            return finish(vec![MPoly::one(nvars)], vec![row], 0);
        }
        polys.push(g.clone());
        rows.push(unit_vector(nvars, m, i, BigRational::one()));
    }

    let mut pairs: Vec<(usize, usize)> = (0..polys.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    let mut processed = 0usize;
    while let Some((i, j)) = pairs.pop() {
        let mi = polys[i].leading_monomial().expect("nonzero");
        let mj = polys[j].leading_monomial().expect("nonzero");
        if mi.coprime(mj) {
            continue;
        }
        if processed >= pair_budget {
            return Err(Error::Resource(format!(
                "Buchberger pair budget of {pair_budget} exhausted"
            )));
        }
        processed += 1;
        let (s, (ui, uj)) = s_combination(&polys[i], &polys[j]);
        let (r, q) = divide_with_cofactors(&s, &polys);
        if r.is_zero() {
            continue;
        }
        let mut row: Vec<MPoly> = rows[i]
            .iter()
            .zip(&rows[j])
            .map(|(a, b)| &(&ui * a) - &(&uj * b))
            .collect();
        for (qk, rk) in q.iter().zip(&rows) {
            if qk.is_zero() {
                continue;
            }
            for (c, t) in row.iter_mut().zip(rk) {
                *c = &*c - &(qk * t);
            }
        }
        if r.is_constant() {
            let inv = r.constant_term().recip();
            let row = row.iter().map(|c| c.scale(&inv)).collect();
            return finish(vec![MPoly::one(nvars)], vec![row], processed);
        }
        let new = polys.len();
        polys.push(r);
        rows.push(row);
        pairs.extend((0..new).map(|i| (i, new)));
    }

    // minimize: drop elements whose leading monomial is divisible by another's
    let mut keep = vec![true; polys.len()];
    for i in 0..polys.len() {
        let mi = polys[i].leading_monomial().expect("nonzero");
        for j in 0..polys.len() {
            if i == j || !keep[j] {
                continue;
            }
            let mj = polys[j].leading_monomial().expect("nonzero");
            if mj.divides(mi) && (mj != mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut basis = Vec::new();
    let mut transform = Vec::new();
    for ((p, row), k) in polys.into_iter().zip(rows).zip(keep) {
        if !k {
            continue;
        }
        let inv = p.leading_term().expect("nonzero").1.recip();
        basis.push(p.scale(&inv));
        transform.push(row.iter().map(|c| c.scale(&inv)).collect());
    }
    finish(basis, transform, processed)
}

/// Coefficients expressing `x` in `gens`, or `None` if `x` is not in the ideal.
pub fn mv_ideal_membership(
    nvars: usize,
    x: &MPoly,
    gens: &[MPoly],
    pair_budget: usize,
) -> Result<Option<Vec<MPoly>>> {
    let gb = buchberger(nvars, gens, pair_budget)?;
    Ok(gb.express(x))
}

/// Radical membership by the Rabinowitsch trick: `x` is in the radical of
/// `<gens>` iff `1` is in `<gens, 1 - t*x>` with a fresh variable `t`.
///
/// On success returns `(k, c)` with `x^k = sum c[i] * gens[i]` and `k`
/// minimal: the substitution `t -> 1/x` yields one valid exponent, and
/// smaller exponents are then tried against a basis of `<gens>`.
pub fn mv_radical_membership(
    nvars: usize,
    x: &MPoly,
    gens: &[MPoly],
    pair_budget: usize,
) -> Result<Option<(u32, Vec<MPoly>)>> {
    let m = gens.len();
    if x.is_zero() {
        return Ok(Some((1, vec![MPoly::zero(nvars); m])));
    }
    let t = MPoly::var(nvars + 1, nvars);
    let xt = x.extend_vars(1);
    let mut ext: Vec<MPoly> = gens.iter().map(|g| g.extend_vars(1)).collect();
    ext.push(&MPoly::one(nvars + 1) - &(&t * &xt));
    let gb = buchberger(nvars + 1, &ext, pair_budget)?;
    let Some(coeffs) = gb.express(&MPoly::one(nvars + 1)) else {
        return Ok(None);
    };

    // x^K * c_i(X, 1/x) is a polynomial once K is the largest t-degree
    let split: Vec<Vec<MPoly>> = coeffs[..m].iter().map(MPoly::split_last_var).collect();
    let big_k = split.iter().map(|s| s.len().saturating_sub(1)).max().unwrap_or(0).max(1);
    let big_k = u32::try_from(big_k)
        .map_err(|_| Error::Resource("radical exponent does not fit in u32".into()))?;
    let x_powers: Vec<MPoly> = (0..=big_k).map(|e| x.pow(e)).collect();
    let extracted: Vec<MPoly> = split
        .iter()
        .map(|parts| {
            parts.iter().enumerate().fold(MPoly::zero(nvars), |acc, (j, cj)| {
                &acc + &(cj * &x_powers[big_k as usize - j])
            })
        })
        .collect();
    if combine(nvars, &extracted, gens) != x_powers[big_k as usize] {
        return Err(Error::Internal(
            "Rabinowitsch certificate extraction failed to re-verify".into(),
        ));
    }

    if big_k > 1 {
        let base = buchberger(nvars, gens, pair_budget)?;
        for k in 1..big_k.min(RADICAL_EXPONENT_CAP + 1) {
            if let Some(c) = base.express(&x_powers[k as usize]) {
                return Ok(Some((k, c)));
            }
        }
    }
    Ok(Some((big_k, extracted)))
}
