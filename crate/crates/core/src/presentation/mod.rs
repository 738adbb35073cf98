//! Finitely presented *-algebras: the universal unitary and orthogonal
//! quantum group algebras, their standard forms, free products and block
//! bookkeeping.

mod blocks;
mod builders;
mod reality;
mod spec;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::algebra::{AlgElement, AlgMatrix, GeneratorId, Letter, ScalarMatrix};

pub use blocks::{block_decompose, BlockDecomposition};
pub use builders::{build_universal_orthogonal, build_universal_unitary, free_product, presentation_for};
pub use reality::{reality_substitution, reduce_orthogonal, RealitySubstitution};
pub use spec::{eigenvalue_profile, standard_form_matrix, symplectic, Block, BlockKind, BlockSpec, IndexRole};

/// A defining relation `element = 0`, tagged with where it came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub element: AlgElement,
    pub origin: String,
}

impl Relation {
    pub fn new(element: AlgElement, origin: impl Into<String>) -> Self {
        Relation {
            element,
            origin: origin.into(),
        }
    }
}

/// The fundamental matrix of one free-product factor.
///
/// Entry `(j, k)` is the element that `u_{j+1,k+1}` stands for: the generator
/// itself, or `c * g*` once a redundant generator has been eliminated.
#[derive(Clone, PartialEq, Debug)]
pub struct FactorLayout {
    pub factor: u16,
    pub matrix: AlgMatrix,
    /// `Q = F^* F`; the identity for untwisted factors.
    pub q: ScalarMatrix,
    /// `F` when the factor is orthogonal.
    pub f: Option<ScalarMatrix>,
}

impl FactorLayout {
    pub fn dimension(&self) -> usize {
        self.matrix.rows()
    }
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub label: String,
    generators: Vec<GeneratorId>,
    relations: Vec<Relation>,
    layouts: Vec<FactorLayout>,
    spec: Option<BlockSpec>,
    reduced: bool,
}

impl Presentation {
    pub fn new(
        label: impl Into<String>,
        generators: impl IntoIterator<Item = GeneratorId>,
        relations: Vec<Relation>,
        layouts: Vec<FactorLayout>,
    ) -> Self {
        let generators: BTreeSet<GeneratorId> = generators.into_iter().collect();
        let mut p = Presentation {
            label: label.into(),
            generators: generators.into_iter().collect(),
            relations,
            layouts,
            spec: None,
            reduced: false,
        };
        p.canonicalize_in_place();
        p
    }

    pub fn generators(&self) -> &[GeneratorId] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation_elements(&self) -> impl Iterator<Item = &AlgElement> {
        self.relations.iter().map(|r| &r.element)
    }

    pub fn layouts(&self) -> &[FactorLayout] {
        &self.layouts
    }

    pub fn layout(&self, factor: u16) -> Option<&FactorLayout> {
        self.layouts.iter().find(|l| l.factor == factor)
    }

    pub fn spec(&self) -> Option<&BlockSpec> {
        self.spec.as_ref()
    }

    pub fn with_spec(mut self, spec: BlockSpec) -> Self {
        self.spec = Some(spec);
        self
    }

    /// True once redundant generators of every orthogonal factor were eliminated.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub(crate) fn mark_reduced(&mut self) {
        self.reduced = true;
    }

    pub fn contains(&self, g: &GeneratorId) -> bool {
        self.generators.binary_search(g).is_ok()
    }

    /// Plain and starred letters of every generator, sorted.
    pub fn letters(&self) -> Vec<Letter> {
        let mut v: Vec<Letter> = self.generators.iter().flat_map(|g| [g.plain(), g.star()]).collect();
        v.sort();
        v
    }

    /// `(factor layout, row, col)` of a generator sitting in a fundamental matrix.
    pub fn position_of(&self, g: &GeneratorId) -> Option<(&FactorLayout, usize, usize)> {
        let layout = self.layout(g.factor)?;
        let (j, k) = (g.row as usize, g.col as usize);
        if j == 0 || k == 0 || j > layout.dimension() || k > layout.dimension() {
            return None;
        }
        (layout.matrix.get(j - 1, k - 1) == &AlgElement::gen(*g)).then_some((layout, j - 1, k - 1))
    }

    /// Applies a *-homomorphism to relations and layouts, drops the substituted
    /// generators and re-canonicalizes.
    pub fn substitute(&self, sigma: &BTreeMap<GeneratorId, AlgElement>) -> Presentation {
        let relations = self
            .relations
            .iter()
            .map(|r| Relation::new(r.element.substitute(sigma), r.origin.clone()))
            .collect();
        let layouts = self
            .layouts
            .iter()
            .map(|l| FactorLayout {
                matrix: l.matrix.map(|e| e.substitute(sigma)),
                ..l.clone()
            })
            .collect();
        let mut p = Presentation {
            label: self.label.clone(),
            generators: self.generators.iter().filter(|g| !sigma.contains_key(g)).copied().collect(),
            relations,
            layouts,
            spec: self.spec.clone(),
            reduced: self.reduced,
        };
        p.canonicalize_in_place();
        p
    }

    /// Renames generators letterwise, in relations and layouts.
    pub fn rename(&self, map: &BTreeMap<GeneratorId, GeneratorId>) -> Presentation {
        let mut p = Presentation {
            label: self.label.clone(),
            generators: self.generators.iter().map(|g| *map.get(g).unwrap_or(g)).collect(),
            relations: self
                .relations
                .iter()
                .map(|r| Relation::new(r.element.rename(map), r.origin.clone()))
                .collect(),
            layouts: self
                .layouts
                .iter()
                .map(|l| FactorLayout {
                    matrix: l.matrix.map(|e| e.rename(map)),
                    ..l.clone()
                })
                .collect(),
            spec: self.spec.clone(),
            reduced: self.reduced,
        };
        p.generators.sort();
        p.generators.dedup();
        p.canonicalize_in_place();
        p
    }

    /// Normalizes each relation (least word has coefficient 1), identifies a
    /// relation with its adjoint, drops zeros and duplicates, and sorts.
    pub fn canonicalize(&self) -> Presentation {
        let mut p = self.clone();
        p.canonicalize_in_place();
        p
    }

    fn canonicalize_in_place(&mut self) {
        let mut seen: BTreeMap<AlgElement, String> = BTreeMap::new();
        for r in self.relations.drain(..) {
            if r.element.is_zero() {
                continue;
            }
            let key = canonical_relation(&r.element);
            seen.entry(key).or_insert(r.origin);
        }
        self.relations = seen.into_iter().map(|(e, o)| Relation::new(e, o)).collect();
    }
}

/// Canonical representative of the pair `{r, r*}` up to nonzero scaling.
pub fn canonical_relation(r: &AlgElement) -> AlgElement {
    let a = r.normalized();
    let b = r.adjoint().normalized();
    if b < a {
        b
    } else {
        a
    }
}

impl PartialEq for Presentation {
    /// Presentations are equal when generators and canonical relation sets agree.
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
            && self.relations.len() == other.relations.len()
            && self.relations.iter().zip(&other.relations).all(|(a, b)| a.element == b.element)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} generators, {} relations",
            self.label,
            self.generators.len(),
            self.relations.len()
        )?;
        for r in &self.relations {
            writeln!(f, "  [{}] {} = 0", r.origin, r.element)?;
        }
        Ok(())
    }
}
