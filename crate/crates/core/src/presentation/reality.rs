//! Elimination of the redundant half of the generators of an orthogonal factor.
//!
//! For monomial `F` with `F_{j,pi(j)} = f_j`, the relation `U = F Ubar F^{-1}`
//! reads `u_{jk} = (f_j / f_k) u*_{pi(j),pi(k)}`, pairing position `(j, k)`
//! with `(pi(j), pi(k))`. One position per pair is kept.

use std::collections::BTreeMap;

use num_traits::One;

use super::{FactorLayout, Presentation};
use crate::algebra::{AlgElement, GeneratorId, Rational, ScalarMatrix};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct RealitySubstitution {
    /// Redundant generator `u_{ab}` mapped to `c * u*_{jk}`.
    pub sigma: BTreeMap<GeneratorId, AlgElement>,
    /// Generators that survive, sorted.
    pub kept: Vec<GeneratorId>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Class {
    First,
    Second,
    Trailing,
}

fn class(pi: &[usize], i: usize) -> Class {
    match pi[i].cmp(&i) {
        std::cmp::Ordering::Equal => Class::Trailing,
        std::cmp::Ordering::Greater => Class::First,
        std::cmp::Ordering::Less => Class::Second,
    }
}

fn kept_position(pi: &[usize], j: usize, k: usize) -> bool {
    match class(pi, k) {
        Class::First => true,
        Class::Trailing => class(pi, j) != Class::Second,
        Class::Second => false,
    }
}

/// The plain generator an entry stands for, if it is exactly one.
pub(crate) fn as_generator(e: &AlgElement) -> Option<GeneratorId> {
    if e.len() != 1 {
        return None;
    }
    let (w, c) = e.terms().next()?;
    match w.letters() {
        [l] if !l.star && c.is_one() => Some(l.gen),
        _ => None,
    }
}

fn layout_substitution(layout: &FactorLayout, f: &ScalarMatrix) -> Result<RealitySubstitution> {
    let n = layout.dimension();
    if f.shape() != (n, n) {
        return Err(Error::LayoutMismatch(format!(
            "F is {:?} but factor {} has dimension {n}",
            f.shape(),
            layout.factor
        )));
    }
    let pattern = f.monomial_pattern().ok_or(Error::NonMonomial)?;
    let pi: Vec<usize> = pattern.iter().map(|(c, _)| *c).collect();
    let fv: Vec<Rational> = pattern.iter().map(|(_, v)| v.clone()).collect();
    let gen_at = |j: usize, k: usize| {
        as_generator(layout.matrix.get(j, k)).ok_or_else(|| {
            Error::LayoutMismatch(format!(
                "entry ({}, {}) of factor {} is not a generator",
                j + 1,
                k + 1,
                layout.factor
            ))
        })
    };

    let mut sigma = BTreeMap::new();
    let mut kept = Vec::new();
    for j in 0..n {
        for k in 0..n {
            if !kept_position(&pi, j, k) {
                continue;
            }
            let g = gen_at(j, k)?;
            kept.push(g);
            let (a, b) = (pi[j], pi[k]);
            if (a, b) == (j, k) {
                continue;
            }
            let c = &fv[a] / &fv[b];
            let back = &fv[j] / &fv[k];
            if !(&c * &back).is_one() {
                return Err(Error::InconsistentReality {
                    row: a + 1,
                    col: b + 1,
                    detail: format!("coefficients {c} and {back} do not multiply to 1"),
                });
            }
            sigma.insert(gen_at(a, b)?, AlgElement::gen_star(g).scale(&c));
        }
    }
    kept.sort();
    Ok(RealitySubstitution { sigma, kept })
}

/// The reality substitution for the orthogonal factor of `p` governed by `f`.
pub fn reality_substitution(p: &Presentation, f: &ScalarMatrix) -> Result<RealitySubstitution> {
    let layout = p
        .layouts()
        .iter()
        .find(|l| l.f.as_ref() == Some(f))
        .or_else(|| p.layout(0))
        .ok_or_else(|| Error::LayoutMismatch("presentation has no fundamental matrix".into()))?;
    layout_substitution(layout, f)
}

/// Eliminates the redundant generators of every orthogonal factor.
/// Idempotent: a reduced presentation is returned unchanged.
pub fn reduce_orthogonal(p: &Presentation) -> Result<Presentation> {
    if p.is_reduced() {
        return Ok(p.clone());
    }
    let mut sigma = BTreeMap::new();
    for layout in p.layouts() {
        if let Some(f) = &layout.f {
            sigma.extend(layout_substitution(layout, f)?.sigma);
        }
    }
    let mut out = p.substitute(&sigma);
    out.mark_reduced();
    Ok(out)
}
