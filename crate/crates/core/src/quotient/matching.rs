use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::ideal::IdealLadder;
use crate::algebra::{AlgElement, GeneratorId};
use crate::error::{Error, Result};
use crate::presentation::Presentation;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatchMode {
    /// Canonical relation sets coincide after renaming.
    Exact,
    /// Each side's relations lie in the other's ideal truncated at `bound`.
    BoundedIdeal { bound: usize },
}

impl fmt::Display for MatchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchMode::Exact => write!(f, "exact"),
            MatchMode::BoundedIdeal { bound } => write!(f, "bounded-ideal({bound})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct MatchResult {
    pub matched: bool,
    pub mode: MatchMode,
    pub renaming: BTreeMap<GeneratorId, GeneratorId>,
    /// Relations, already renamed, that were not shown to hold on the other side.
    pub unmatched_derived: Vec<AlgElement>,
    pub unmatched_target: Vec<AlgElement>,
}

/// Checks that `renaming` is a bijection from the generators of `derived`
/// onto the generators of `target`.
pub fn check_bijection(derived: &Presentation, target: &Presentation, renaming: &BTreeMap<GeneratorId, GeneratorId>) -> Result<()> {
    let domain: BTreeSet<GeneratorId> = renaming.keys().copied().collect();
    let have: BTreeSet<GeneratorId> = derived.generators().iter().copied().collect();
    if domain != have {
        let missing: Vec<String> = have.difference(&domain).map(|g| g.to_string()).collect();
        let extra: Vec<String> = domain.difference(&have).map(|g| g.to_string()).collect();
        return Err(Error::NonBijective(format!(
            "renaming domain differs from the surviving generators (unmapped: [{}], not present: [{}])",
            missing.join(", "),
            extra.join(", ")
        )));
    }
    let image: BTreeSet<GeneratorId> = renaming.values().copied().collect();
    if image.len() != renaming.len() {
        return Err(Error::NonBijective("two generators are renamed to the same target".into()));
    }
    let want: BTreeSet<GeneratorId> = target.generators().iter().copied().collect();
    if image != want {
        return Err(Error::NonBijective("renaming is not onto the target generators".into()));
    }
    Ok(())
}

/// Compares `derived` (renamed) with `target`: exact canonical equality
/// first, then mutual membership in bounded ideals.
pub fn match_presentations(
    derived: &Presentation,
    target: &Presentation,
    renaming: &BTreeMap<GeneratorId, GeneratorId>,
    bound: usize,
) -> Result<MatchResult> {
    check_bijection(derived, target, renaming)?;
    let renamed = derived.rename(renaming);
    if renamed == *target {
        return Ok(MatchResult {
            matched: true,
            mode: MatchMode::Exact,
            renaming: renaming.clone(),
            unmatched_derived: Vec::new(),
            unmatched_target: Vec::new(),
        });
    }
    let ours: Vec<AlgElement> = renamed.relation_elements().cloned().collect();
    let theirs: Vec<AlgElement> = target.relation_elements().cloned().collect();
    let ours_set: BTreeSet<&AlgElement> = ours.iter().collect();
    let theirs_set: BTreeSet<&AlgElement> = theirs.iter().collect();

    let mut target_ideal = IdealLadder::new(&theirs, target.letters(), bound);
    let mut unmatched_derived = Vec::new();
    for r in ours.iter().filter(|r| !theirs_set.contains(r)) {
        match target_ideal.membership_degree(r) {
            Ok(Some(_)) => {}
            Ok(None) | Err(Error::BoundTooSmall { .. }) => unmatched_derived.push(r.clone()),
            Err(e) => return Err(e),
        }
    }
    let mut derived_ideal = IdealLadder::new(&ours, renamed.letters(), bound);
    let mut unmatched_target = Vec::new();
    for r in theirs.iter().filter(|r| !ours_set.contains(r)) {
        match derived_ideal.membership_degree(r) {
            Ok(Some(_)) => {}
            Ok(None) | Err(Error::BoundTooSmall { .. }) => unmatched_target.push(r.clone()),
            Err(e) => return Err(e),
        }
    }
    Ok(MatchResult {
        matched: unmatched_derived.is_empty() && unmatched_target.is_empty(),
        mode: MatchMode::BoundedIdeal { bound },
        renaming: renaming.clone(),
        unmatched_derived,
        unmatched_target,
    })
}
