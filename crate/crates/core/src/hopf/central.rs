//! The central morphism `gamma: Pol(O_{J_M}^+) -> C[Z_2]`, `u_jk -> delta_jk t`,
//! and membership in its Hopf kernel.

use std::collections::BTreeMap;

use super::structure::HopfStructure;
use super::tensor::TensorElement;
use crate::algebra::{AlgElement, GeneratorId, Letter, Word};
use crate::error::{Error, Result};
use crate::presentation::{symplectic, Presentation, Relation};

/// The generator `t` of `C[Z_2]`.
pub const T: GeneratorId = GeneratorId::new(0, 't', 1, 1);

/// `C[Z_2]` as the presentation `t = t*`, `t^2 = 1`.
pub fn cz2() -> Presentation {
    let t = AlgElement::gen(T);
    let rels = vec![
        Relation::new(&t - &AlgElement::gen_star(T), "t = t*"),
        Relation::new(&(&t * &t) - &AlgElement::one(), "t^2 = 1"),
    ];
    Presentation::new("C[Z_2]", [T], rels, Vec::new())
}

/// Normal form in `C[Z_2]`: every word in `t, t*` becomes `1` or `t` by parity.
/// Letters other than `t` are left alone.
pub fn reduce_cz2(x: &AlgElement) -> AlgElement {
    let mut out = AlgElement::zero();
    for (w, c) in x.terms() {
        let mut rest: Vec<Letter> = Vec::new();
        let mut parity = false;
        for l in w.letters() {
            if l.gen == T {
                parity = !parity;
            } else {
                rest.push(*l);
            }
        }
        if parity {
            rest.insert(0, T.plain());
        }
        out.add_term(Word::from_letters(rest), c.clone());
    }
    out
}

/// A *-homomorphism from a presentation to `C[Z_2]`, given on generators.
#[derive(Clone, Debug)]
pub struct MorphismSpec {
    pub target: Presentation,
    pub images: BTreeMap<GeneratorId, AlgElement>,
}

impl MorphismSpec {
    pub fn apply(&self, x: &AlgElement) -> AlgElement {
        reduce_cz2(&x.substitute(&self.images))
    }

    pub fn apply_word(&self, w: &Word) -> AlgElement {
        self.apply(&AlgElement::word(w.clone()))
    }

    /// Whether every relation of `p` maps to zero.
    pub fn respects_relations(&self, p: &Presentation) -> bool {
        p.relation_elements().all(|r| self.apply(r).is_zero())
    }
}

fn symplectic_size(p: &Presentation) -> Result<usize> {
    let shape_error = || Error::LayoutMismatch("expected a single factor with F = J_M".into());
    let [layout] = p.layouts() else {
        return Err(shape_error());
    };
    let n = layout.dimension();
    if n % 2 != 0 || layout.f.as_ref() != Some(&symplectic(n / 2)) {
        return Err(shape_error());
    }
    Ok(n / 2)
}

/// `gamma(u_jk) = delta_jk t` on `Pol(O_{J_M}^+)`.
pub fn gamma(p: &Presentation) -> Result<MorphismSpec> {
    symplectic_size(p)?;
    let mut images = BTreeMap::new();
    for g in p.generators() {
        let (_, j, k) = p.position_of(g).ok_or_else(|| Error::NotInLayout(g.to_string()))?;
        let image = if j == k { AlgElement::gen(T) } else { AlgElement::zero() };
        images.insert(*g, image);
    }
    Ok(MorphismSpec { target: cz2(), images })
}

/// `(m (x) id) Delta(g) = (m (x) id) Sigma Delta(g)` for every generator `g`.
pub fn is_central(p: &Presentation, m: &MorphismSpec) -> Result<bool> {
    let h = HopfStructure::new(p)?;
    for g in p.generators() {
        let d = h.coproduct(&AlgElement::gen(*g))?;
        let direct = d.map_leg(0, |w| m.apply_word(w));
        let flipped = d.flip().map_leg(0, |w| m.apply_word(w));
        if direct != flipped {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn central_morphism_check(p: &Presentation) -> Result<bool> {
    is_central(p, &gamma(p)?)
}

/// `(gamma (x) id) Delta(b) = 1 (x) b`, exactly after `t^2 = 1`.
pub fn hopf_kernel_membership(p: &Presentation, b: &AlgElement) -> Result<bool> {
    let m = gamma(p)?;
    let h = HopfStructure::new(p)?;
    let lhs = h.coproduct(b)?.map_leg(0, |w| m.apply_word(w));
    let rhs = TensorElement::elementary(&[&AlgElement::one(), b]);
    Ok(lhs == rhs)
}
