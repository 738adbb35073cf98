use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::symbol::{cyclic_canonical, trace_of, Symbol, TraceExpr};
use crate::algebra::{words_of_length, AlgElement, GeneratorId, Word};
use crate::presentation::Presentation;

/// `expr = 0` must hold for every tracial state of the algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Equation {
    pub expr: TraceExpr,
    pub origin: String,
}

/// Trace equations of `p`: real and imaginary parts of `tau(r)` for every
/// relation, and of `tau(w r)` for every word `w` with `1 <= |w| <= degree`.
/// Equations are normalized and deduplicated; order is deterministic.
pub fn derive_equations(p: &Presentation, degree: usize) -> Vec<Equation> {
    let mut multipliers: Vec<Word> = vec![Word::unit()];
    let letters = p.letters();
    for len in 1..=degree {
        multipliers.extend(words_of_length(&letters, len));
    }
    let mut relations: Vec<(&AlgElement, String)> = Vec::new();
    for r in p.relations() {
        relations.push((&r.element, r.origin.clone()));
    }
    let adjoints: Vec<(AlgElement, String)> = if degree > 0 {
        p.relations()
            .iter()
            .map(|r| (r.element.adjoint(), format!("({})*", r.origin)))
            .collect()
    } else {
        Vec::new()
    };
    for (e, o) in &adjoints {
        relations.push((e, o.clone()));
    }

    let per_relation: Vec<Vec<Equation>> = relations
        .par_iter()
        .map(|(r, origin)| {
            let mut out = Vec::new();
            for w in &multipliers {
                let x = if w.is_empty() {
                    (*r).clone()
                } else {
                    &AlgElement::word(w.clone()) * *r
                };
                let tag = if w.is_empty() { origin.clone() } else { format!("{w} . {origin}") };
                let (re, im) = trace_of(&x);
                out.push(Equation {
                    expr: re,
                    origin: format!("Re tau[{tag}]"),
                });
                out.push(Equation {
                    expr: im,
                    origin: format!("Im tau[{tag}]"),
                });
            }
            out
        })
        .collect();

    let mut seen: BTreeSet<TraceExpr> = BTreeSet::new();
    let mut out = Vec::new();
    for eq in per_relation.into_iter().flatten() {
        if eq.expr.is_zero() {
            continue;
        }
        let key = eq.expr.normalized();
        if !seen.insert(key.clone()) {
            continue;
        }
        out.push(Equation {
            expr: key,
            origin: eq.origin,
        });
    }
    out
}

/// The nonnegative symbol `Re tau(g* g)` of every generator.
pub fn square_symbols(p: &Presentation) -> BTreeMap<GeneratorId, Symbol> {
    p.generators()
        .iter()
        .map(|g| {
            let w = Word::from_letters(vec![g.star(), g.plain()]);
            (*g, Symbol::Re(cyclic_canonical(&w).class))
        })
        .collect()
}
