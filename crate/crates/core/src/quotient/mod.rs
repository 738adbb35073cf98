//! Quotients by forced zeros, Kac targets, presentation matching and
//! bounded ideal membership.

mod ideal;
mod matching;
mod target;

use std::collections::BTreeMap;

use crate::algebra::{AlgElement, GeneratorId};
use crate::error::{Error, Result};
use crate::presentation::Presentation;

pub use ideal::{ideal_contains, spanning_products, BoundedIdeal, IdealLadder};
pub use matching::{check_bijection, match_presentations, MatchMode, MatchResult};
pub use target::{expected_kac_target, KacTarget};

/// Sets each listed generator to zero, drops it, and re-canonicalizes.
pub fn quotient_by_zero(p: &Presentation, zeros: &[GeneratorId]) -> Result<Presentation> {
    if let Some(g) = zeros.iter().find(|g| !p.contains(g)) {
        return Err(Error::UnknownGenerator(*g));
    }
    let sigma: BTreeMap<GeneratorId, AlgElement> = zeros.iter().map(|g| (*g, AlgElement::zero())).collect();
    Ok(p.substitute(&sigma))
}

/// Canonical form: normalized relations, adjoint pairs identified, sorted, deduplicated.
pub fn canonicalize(p: &Presentation) -> Presentation {
    p.canonicalize()
}
