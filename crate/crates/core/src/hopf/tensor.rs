use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{AlgElement, Rational, Word};

/// Element of a tensor power `A^{(x) legs}` of the free *-algebra, as a
/// finite map from word tuples to coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    legs: usize,
    terms: BTreeMap<Vec<Word>, Rational>,
}

impl TensorElement {
    pub fn zero(legs: usize) -> Self {
        TensorElement {
            legs,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(legs: usize) -> Self {
        let mut t = TensorElement::zero(legs);
        t.add_term(vec![Word::unit(); legs], Rational::from_integer(1.into()));
        t
    }

    /// `parts[0] (x) parts[1] (x) ...`, expanded.
    pub fn elementary(parts: &[&AlgElement]) -> Self {
        let mut out = TensorElement::one(0);
        for part in parts {
            let mut next = TensorElement::zero(out.legs + 1);
            for (ws, c) in &out.terms {
                for (w, d) in part.terms() {
                    let mut key = ws.clone();
                    key.push(w.clone());
                    next.add_term(key, c * d);
                }
            }
            out = next;
        }
        out
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, key: Vec<Word>, c: Rational) {
        debug_assert_eq!(key.len(), self.legs);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Rational) {
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x * c);
        }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::from_integer((-1).into()));
        out
    }

    /// Legwise product `(a (x) b)(c (x) d) = ac (x) bd`.
    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(self.legs);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let key = a.iter().zip(b).map(|(u, v)| u.concat(v)).collect();
                out.add_term(key, x * y);
            }
        }
        out
    }

    /// The flip `w1 (x) w2 -> w2 (x) w1` on two legs.
    pub fn flip(&self) -> TensorElement {
        assert_eq!(self.legs, 2, "flip acts on the tensor square");
        let mut out = TensorElement::zero(2);
        for (k, c) in &self.terms {
            out.add_term(vec![k[1].clone(), k[0].clone()], c.clone());
        }
        out
    }

    /// Legwise adjoint, the *-structure of the tensor product.
    pub fn adjoint(&self) -> TensorElement {
        let mut out = TensorElement::zero(self.legs);
        for (k, c) in &self.terms {
            out.add_term(k.iter().map(Word::adjoint).collect(), c.clone());
        }
        out
    }

    /// Applies a linear map given on words to leg `i`.
    pub fn map_leg(&self, i: usize, f: impl Fn(&Word) -> AlgElement) -> TensorElement {
        let mut cache: BTreeMap<&Word, AlgElement> = BTreeMap::new();
        let mut out = TensorElement::zero(self.legs);
        for (k, c) in &self.terms {
            let image = cache.entry(&k[i]).or_insert_with(|| f(&k[i]));
            for (w, d) in image.terms() {
                let mut key = k.clone();
                key[i] = w.clone();
                out.add_term(key, c * d);
            }
        }
        out
    }

    /// Replaces leg `i` by the tensor `f(word)`, growing the number of legs.
    pub fn expand_leg(&self, i: usize, f: impl Fn(&Word) -> TensorElement) -> TensorElement {
        let mut cache: BTreeMap<&Word, TensorElement> = BTreeMap::new();
        let mut legs = None;
        let mut out_terms = Vec::new();
        for (k, c) in &self.terms {
            let image = cache.entry(&k[i]).or_insert_with(|| f(&k[i]));
            legs = Some(self.legs - 1 + image.legs);
            for (ws, d) in &image.terms {
                let mut key = Vec::with_capacity(self.legs - 1 + ws.len());
                key.extend_from_slice(&k[..i]);
                key.extend(ws.iter().cloned());
                key.extend_from_slice(&k[i + 1..]);
                out_terms.push((key, c * d));
            }
        }
        let mut out = TensorElement::zero(legs.unwrap_or(self.legs + 1));
        for (k, c) in out_terms {
            out.add_term(k, c);
        }
        out
    }

    /// Multiplies the legs together (the algebra multiplication `m`).
    pub fn multiply(&self) -> AlgElement {
        AlgElement::from_terms(self.terms.iter().map(|(k, c)| {
            let w = k.iter().fold(Word::unit(), |acc, w| acc.concat(w));
            (w, c.clone())
        }))
    }

    /// Largest word length on any leg.
    pub fn leg_degree(&self) -> usize {
        self.terms.keys().flat_map(|k| k.iter().map(Word::len)).max().unwrap_or(0)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c} ")?;
            for (j, w) in k.iter().enumerate() {
                if j > 0 {
                    write!(f, " ⊗ ")?;
                }
                write!(f, "{w}")?;
            }
        }
        Ok(())
    }
}
