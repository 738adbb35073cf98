use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::tensor::TensorElement;
use crate::algebra::{AlgElement, Letter, Rational, Word};
use crate::error::{Error, Result};
use crate::presentation::Presentation;

/// Coproduct, counit and antipode of a presentation with fundamental
/// layouts, tabulated on letters.
///
/// For a generator at position `(j, k)` of a layout `M` with twist `Q`:
/// `Delta(u_jk) = sum_l M_jl (x) M_lk`, `eps(u_jk) = delta_jk`,
/// `S(u_jk) = M_kj*` and `S(u*_jk) = (Q^{-1} M^t Q)_jk`. Starred letters get
/// the adjoint coproduct and counit.
#[derive(Clone, Debug)]
pub struct HopfStructure {
    delta: BTreeMap<Letter, TensorElement>,
    eps: BTreeMap<Letter, Rational>,
    antipode: BTreeMap<Letter, AlgElement>,
}

impl HopfStructure {
    pub fn new(p: &Presentation) -> Result<HopfStructure> {
        let mut delta = BTreeMap::new();
        let mut eps = BTreeMap::new();
        let mut antipode = BTreeMap::new();
        for g in p.generators() {
            let (layout, j, k) = p.position_of(g).ok_or_else(|| Error::NotInLayout(g.to_string()))?;
            let m = &layout.matrix;
            let n = layout.dimension();
            let mut d = TensorElement::zero(2);
            for l in 0..n {
                d.add_scaled(&TensorElement::elementary(&[m.get(j, l), m.get(l, k)]), &Rational::one());
            }
            let e = if j == k { Rational::one() } else { Rational::zero() };
            let qinv = layout.q.inverse()?;
            let mut s_star = AlgElement::zero();
            for a in 0..n {
                for b in 0..n {
                    let c = qinv.get(j, a) * layout.q.get(b, k);
                    if !c.is_zero() {
                        s_star += m.get(b, a).scale(&c);
                    }
                }
            }
            delta.insert(g.star(), d.adjoint());
            delta.insert(g.plain(), d);
            eps.insert(g.plain(), e.clone());
            eps.insert(g.star(), e);
            antipode.insert(g.plain(), m.get(k, j).adjoint());
            antipode.insert(g.star(), s_star);
        }
        Ok(HopfStructure { delta, eps, antipode })
    }

    fn letter_delta(&self, l: &Letter) -> Result<&TensorElement> {
        self.delta.get(l).ok_or_else(|| Error::NotInLayout(l.to_string()))
    }

    pub fn coproduct_word(&self, w: &Word) -> Result<TensorElement> {
        let mut acc = TensorElement::one(2);
        for l in w.letters() {
            acc = acc.mul(self.letter_delta(l)?);
        }
        Ok(acc)
    }

    pub fn coproduct(&self, x: &AlgElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero(2);
        for (w, c) in x.terms() {
            out.add_scaled(&self.coproduct_word(w)?, c);
        }
        Ok(out)
    }

    pub fn counit_word(&self, w: &Word) -> Result<Rational> {
        let mut acc = Rational::one();
        for l in w.letters() {
            let e = self.eps.get(l).ok_or_else(|| Error::NotInLayout(l.to_string()))?;
            if e.is_zero() {
                return Ok(Rational::zero());
            }
            acc *= e;
        }
        Ok(acc)
    }

    pub fn counit(&self, x: &AlgElement) -> Result<Rational> {
        let mut out = Rational::zero();
        for (w, c) in x.terms() {
            out += c * self.counit_word(w)?;
        }
        Ok(out)
    }

    /// Anti-multiplicative: `S(l_1 ... l_n) = S(l_n) ... S(l_1)`.
    pub fn antipode_word(&self, w: &Word) -> Result<AlgElement> {
        let mut acc = AlgElement::one();
        for l in w.letters().iter().rev() {
            let s = self.antipode.get(l).ok_or_else(|| Error::NotInLayout(l.to_string()))?;
            acc = &acc * s;
        }
        Ok(acc)
    }

    pub fn antipode(&self, x: &AlgElement) -> Result<AlgElement> {
        let mut out = AlgElement::zero();
        for (w, c) in x.terms() {
            out += self.antipode_word(w)?.scale(c);
        }
        Ok(out)
    }

    /// `eps` extended to a linear map on words, for use on tensor legs.
    pub(crate) fn counit_on_leg(&self, w: &Word) -> AlgElement {
        AlgElement::scalar(self.counit_word(w).unwrap_or_else(|_| Rational::zero()))
    }
}

pub fn coproduct(p: &Presentation, x: &AlgElement) -> Result<TensorElement> {
    HopfStructure::new(p)?.coproduct(x)
}

pub fn counit(p: &Presentation, x: &AlgElement) -> Result<Rational> {
    HopfStructure::new(p)?.counit(x)
}

pub fn antipode(p: &Presentation, x: &AlgElement) -> Result<AlgElement> {
    HopfStructure::new(p)?.antipode(x)
}
