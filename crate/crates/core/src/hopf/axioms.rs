use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::structure::HopfStructure;
use super::tensor::TensorElement;
use crate::algebra::{AlgElement, Word};
use crate::error::Result;
use crate::presentation::Presentation;
use crate::quotient::{BoundedIdeal, IdealLadder};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Coassociativity,
    CounitLeft,
    CounitRight,
    AntipodeLeft,
    AntipodeRight,
    CoproductRespectsRelations,
    CounitRespectsRelations,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Coassociativity => "coassociativity",
            Axiom::CounitLeft => "counit-left",
            Axiom::CounitRight => "counit-right",
            Axiom::AntipodeLeft => "antipode-left",
            Axiom::AntipodeRight => "antipode-right",
            Axiom::CoproductRespectsRelations => "coproduct-respects-relations",
            Axiom::CounitRespectsRelations => "counit-respects-relations",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// Generator letter or relation the check is about.
    pub subject: String,
    pub status: CheckStatus,
    /// `exact`, `I_d` for the ideal level that settled it, or why it is open.
    pub detail: String,
}

#[derive(Clone, Copy, Debug)]
pub struct HopfOptions {
    pub bound: usize,
    /// Ideal levels spanned by more products than this are not built.
    pub max_products: usize,
}

impl Default for HopfOptions {
    fn default() -> Self {
        HopfOptions {
            bound: 4,
            max_products: 200_000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfReport {
    pub bound: usize,
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    /// `(pass, fail, inconclusive)` per axiom.
    pub fn summary(&self) -> BTreeMap<Axiom, (usize, usize, usize)> {
        let mut out: BTreeMap<Axiom, (usize, usize, usize)> = BTreeMap::new();
        for c in &self.checks {
            let e = out.entry(c.axiom).or_default();
            match c.status {
                CheckStatus::Pass => e.0 += 1,
                CheckStatus::Fail => e.1 += 1,
                CheckStatus::Inconclusive => e.2 += 1,
            }
        }
        out
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn any_fail(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn axiom_passes(&self, axiom: Axiom) -> bool {
        self.checks
            .iter()
            .filter(|c| c.axiom == axiom)
            .all(|c| c.status == CheckStatus::Pass)
    }
}

enum Residual {
    Element(AlgElement),
    Tensor(TensorElement),
}

impl Residual {
    fn is_zero(&self) -> bool {
        match self {
            Residual::Element(x) => x.is_zero(),
            Residual::Tensor(t) => t.is_zero(),
        }
    }

    fn degree(&self) -> usize {
        match self {
            Residual::Element(x) => x.degree(),
            Residual::Tensor(t) => t.leg_degree(),
        }
    }

    /// Whether the residual lies in the ideal (one leg at a time for tensors).
    fn vanishes_modulo(&self, ideal: &BoundedIdeal) -> bool {
        match self {
            Residual::Element(x) => ideal.normal_form(x).is_zero(),
            Residual::Tensor(t) => {
                let mut r = t.clone();
                for leg in 0..t.legs() {
                    r = r.map_leg(leg, |w| ideal.normal_form(&AlgElement::word(w.clone())));
                    if r.is_zero() {
                        return true;
                    }
                }
                r.is_zero()
            }
        }
    }
}

struct Pending {
    axiom: Axiom,
    subject: String,
    residual: Residual,
    exact_only: bool,
}

/// Checks the Hopf *-algebra axioms on generators and relations.
///
/// Coassociativity and the counit laws are first compared exactly in the free
/// algebra; the antipode laws and relation preservation are decided modulo the
/// relations in bounded ideals `I_d`, `d <= bound`. Anything not settled by the
/// bound is reported inconclusive, never failed. The counit must kill every
/// relation exactly.
pub fn hopf_axiom_check(p: &Presentation, bound: usize) -> Result<HopfReport> {
    hopf_axiom_check_with(
        p,
        &HopfOptions {
            bound,
            ..HopfOptions::default()
        },
    )
}

pub fn hopf_axiom_check_with(p: &Presentation, opts: &HopfOptions) -> Result<HopfReport> {
    let h = HopfStructure::new(p)?;
    let letters = p.letters();

    let per_letter: Vec<Result<Vec<Pending>>> = letters
        .par_iter()
        .map(|l| {
            let x = AlgElement::letter(*l);
            let subject = l.to_string();
            let d = h.coproduct(&x)?;
            let coproduct_leg = |w: &Word| h.coproduct_word(w).unwrap_or_else(|_| TensorElement::zero(2));
            let lhs = d.expand_leg(0, coproduct_leg);
            let rhs = d.expand_leg(1, coproduct_leg);
            let counit_left = d.map_leg(0, |w| h.counit_on_leg(w)).multiply();
            let counit_right = d.map_leg(1, |w| h.counit_on_leg(w)).multiply();
            let antipode_leg = |w: &Word| h.antipode_word(w).unwrap_or_else(|_| AlgElement::zero());
            let eps = AlgElement::scalar(h.counit(&x)?);
            let s_left = d.map_leg(0, antipode_leg).multiply();
            let s_right = d.map_leg(1, antipode_leg).multiply();
            Ok(vec![
                Pending {
                    axiom: Axiom::Coassociativity,
                    subject: subject.clone(),
                    residual: Residual::Tensor(lhs.sub(&rhs)),
                    exact_only: false,
                },
                Pending {
                    axiom: Axiom::CounitLeft,
                    subject: subject.clone(),
                    residual: Residual::Element(&counit_left - &x),
                    exact_only: false,
                },
                Pending {
                    axiom: Axiom::CounitRight,
                    subject: subject.clone(),
                    residual: Residual::Element(&counit_right - &x),
                    exact_only: false,
                },
                Pending {
                    axiom: Axiom::AntipodeLeft,
                    subject: subject.clone(),
                    residual: Residual::Element(&s_left - &eps),
                    exact_only: false,
                },
                Pending {
                    axiom: Axiom::AntipodeRight,
                    subject,
                    residual: Residual::Element(&s_right - &eps),
                    exact_only: false,
                },
            ])
        })
        .collect();
    let per_relation: Vec<Result<Vec<Pending>>> = p
        .relations()
        .par_iter()
        .map(|r| {
            let subject = format!("{} = 0", r.element);
            Ok(vec![
                Pending {
                    axiom: Axiom::CoproductRespectsRelations,
                    subject: subject.clone(),
                    residual: Residual::Tensor(h.coproduct(&r.element)?),
                    exact_only: false,
                },
                Pending {
                    axiom: Axiom::CounitRespectsRelations,
                    subject,
                    residual: Residual::Element(AlgElement::scalar(h.counit(&r.element)?)),
                    exact_only: true,
                },
            ])
        })
        .collect();
    let mut pending = Vec::new();
    for batch in per_letter.into_iter().chain(per_relation) {
        pending.extend(batch?);
    }

    let mut status: Vec<Option<(CheckStatus, String)>> = pending
        .iter()
        .map(|item| {
            if item.residual.is_zero() {
                Some((CheckStatus::Pass, "exact".to_string()))
            } else if item.exact_only {
                Some((CheckStatus::Fail, "nonzero".to_string()))
            } else {
                None
            }
        })
        .collect();

    let relations: Vec<AlgElement> = p.relation_elements().cloned().collect();
    let mut ladder = IdealLadder::new(&relations, letters, opts.bound).with_limit(opts.max_products);
    let mut reached = 0;
    for d in 1..=opts.bound {
        if status.iter().all(Option::is_some) {
            break;
        }
        let Some(ideal) = ladder.level(d) else { break };
        reached = d;
        let settled: Vec<bool> = pending
            .par_iter()
            .zip(status.par_iter())
            .map(|(item, st)| st.is_none() && item.residual.degree() <= d && item.residual.vanishes_modulo(ideal))
            .collect();
        for (st, ok) in status.iter_mut().zip(settled) {
            if ok {
                *st = Some((CheckStatus::Pass, format!("I_{d}")));
            }
        }
    }
    let checks = pending
        .into_iter()
        .zip(status)
        .map(|(item, st)| {
            let (status, detail) = st.unwrap_or_else(|| {
                let why = if reached < opts.bound {
                    format!("not in I_{reached}; higher levels too large to build")
                } else {
                    format!("inconclusive at bound {}", opts.bound)
                };
                (CheckStatus::Inconclusive, why)
            });
            AxiomCheck {
                axiom: item.axiom,
                subject: item.subject,
                status,
                detail,
            }
        })
        .collect();
    Ok(HopfReport { bound: opts.bound, checks })
}
