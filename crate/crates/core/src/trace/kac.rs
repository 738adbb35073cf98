use std::collections::BTreeMap;

use rayon::prelude::*;

use super::certificate::Certificate;
use super::equations::{derive_equations, square_symbols, Equation};
use super::system::TraceSystem;
use crate::algebra::{AlgElement, GeneratorId};
use crate::error::{Error, Result};
use crate::presentation::{reduce_orthogonal, Presentation};

#[derive(Clone, Debug)]
pub struct KacOptions {
    /// Longest word multiplied onto each relation before tracing.
    pub degree: usize,
    pub max_rounds: usize,
}

impl Default for KacOptions {
    fn default() -> Self {
        KacOptions { degree: 0, max_rounds: 64 }
    }
}

#[derive(Clone, Debug)]
pub struct ForcedZero {
    pub generator: GeneratorId,
    /// Equation round (0-based) whose equations the certificate combines.
    pub round: usize,
    pub certificate: Certificate,
}

#[derive(Clone, Debug)]
pub struct KacReport {
    /// The presentation the search started from (after reality reduction).
    pub input: Presentation,
    /// The quotient by every forced zero.
    pub quotient: Presentation,
    pub forced: Vec<ForcedZero>,
    /// Trace equations of each round, indexed by `ForcedZero::round`.
    pub equation_sets: Vec<Vec<Equation>>,
    /// Number of equation derivations, including the final one that found nothing new.
    pub iterations: usize,
    /// Generators whose square is unbounded by the final round's equations.
    pub undetermined: Vec<GeneratorId>,
}

impl KacReport {
    pub fn forced_generators(&self) -> Vec<GeneratorId> {
        self.forced.iter().map(|f| f.generator).collect()
    }

    /// Rechecks every certificate against the equations of its round.
    pub fn verify_all(&self) -> bool {
        self.forced
            .iter()
            .all(|f| f.certificate.target == f.generator && self.equation_sets.get(f.round).is_some_and(|eqs| f.certificate.verify(eqs)))
    }
}

/// Kills generators whose vanishing is forced by faithful traces, until no
/// new generator can be killed.
///
/// Each round derives the trace equations of the current quotient, asks for
/// a certificate for every surviving generator, and sets the certified ones
/// to zero. Orthogonal presentations are reduced first; a non-monomial `F`
/// is refused.
pub fn kac_fixpoint(p: &Presentation, opts: &KacOptions) -> Result<KacReport> {
    let has_orthogonal = p.layouts().iter().any(|l| l.f.is_some());
    let mut current = if has_orthogonal && !p.is_reduced() {
        reduce_orthogonal(p)?
    } else {
        p.clone()
    };
    let input = current.clone();
    let mut forced = Vec::new();
    let mut equation_sets = Vec::new();
    let mut iterations = 0;
    let undetermined = loop {
        let round = equation_sets.len();
        let system = TraceSystem::prepare(derive_equations(&current, opts.degree), square_symbols(&current));
        iterations += 1;
        let results: Vec<(GeneratorId, Result<Option<Certificate>>)> =
            current.generators().par_iter().map(|g| (*g, system.forced_zero(g))).collect();
        let mut killed = Vec::new();
        let mut open = Vec::new();
        for (g, r) in results {
            match r {
                Ok(Some(certificate)) => killed.push(ForcedZero {
                    generator: g,
                    round,
                    certificate,
                }),
                Ok(None) => {}
                Err(Error::Undetermined(_)) => open.push(g),
                Err(e) => return Err(e),
            }
        }
        equation_sets.push(system.into_equations());
        if killed.is_empty() || iterations >= opts.max_rounds {
            break open;
        }
        let zeros: BTreeMap<GeneratorId, AlgElement> = killed.iter().map(|f| (f.generator, AlgElement::zero())).collect();
        current = current.substitute(&zeros);
        forced.extend(killed);
    };
    Ok(KacReport {
        input,
        quotient: current,
        forced,
        equation_sets,
        iterations,
        undetermined,
    })
}
