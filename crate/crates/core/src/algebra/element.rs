use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use super::word::{GeneratorId, Letter, Word};

/// A finite rational combination of words in the free *-algebra.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct AlgElement {
    terms: BTreeMap<Word, Rational>,
}

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement::default()
    }

    pub fn one() -> Self {
        AlgElement::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        AlgElement::term(Word::unit(), c)
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut e = AlgElement::zero();
        e.add_term(w, c);
        e
    }

    pub fn word(w: Word) -> Self {
        AlgElement::term(w, Rational::one())
    }

    pub fn letter(l: Letter) -> Self {
        AlgElement::word(Word::letter(l))
    }

    pub fn gen(g: GeneratorId) -> Self {
        AlgElement::letter(g.plain())
    }

    pub fn gen_star(g: GeneratorId) -> Self {
        AlgElement::letter(g.star())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut e = AlgElement::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Rational> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest word length present; 0 for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().map_or(0, Word::len)
    }

    pub fn least_term(&self) -> Option<(&Word, &Rational)> {
        self.terms.iter().next()
    }

    pub fn leading_term(&self) -> Option<(&Word, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn generators(&self) -> BTreeSet<GeneratorId> {
        self.terms.keys().flat_map(|w| w.generators()).collect()
    }

    pub fn scale(&self, c: &Rational) -> AlgElement {
        if c.is_zero() {
            return AlgElement::zero();
        }
        AlgElement {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// The *-operation. Coefficients are real, so only words change.
    pub fn adjoint(&self) -> AlgElement {
        AlgElement {
            terms: self.terms.iter().map(|(w, c)| (w.adjoint(), c.clone())).collect(),
        }
    }

    /// Applies the *-homomorphism determined by `sigma` on plain generators.
    /// Starred letters map to the adjoint of the image; unlisted letters stay.
    pub fn substitute(&self, sigma: &BTreeMap<GeneratorId, AlgElement>) -> AlgElement {
        let mut adj_cache: BTreeMap<GeneratorId, AlgElement> = BTreeMap::new();
        let mut out = AlgElement::zero();
        for (w, c) in &self.terms {
            if !w.generators().any(|g| sigma.contains_key(&g)) {
                out.add_term(w.clone(), c.clone());
                continue;
            }
            let mut acc = AlgElement::scalar(c.clone());
            for l in w.letters() {
                let image = match sigma.get(&l.gen) {
                    None => AlgElement::letter(*l),
                    Some(img) if !l.star => img.clone(),
                    Some(img) => adj_cache.entry(l.gen).or_insert_with(|| img.adjoint()).clone(),
                };
                acc = &acc * &image;
                if acc.is_zero() {
                    break;
                }
            }
            out += acc;
        }
        out
    }

    /// Letter-level renaming of generators (stars preserved).
    pub fn rename(&self, map: &BTreeMap<GeneratorId, GeneratorId>) -> AlgElement {
        AlgElement::from_terms(self.terms.iter().map(|(w, c)| {
            let letters = w
                .letters()
                .iter()
                .map(|l| Letter {
                    gen: *map.get(&l.gen).unwrap_or(&l.gen),
                    star: l.star,
                })
                .collect();
            (Word::from_letters(letters), c.clone())
        }))
    }

    /// Scales so that the least word has coefficient 1.
    pub fn normalized(&self) -> AlgElement {
        match self.least_term() {
            None => AlgElement::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }
}

impl Ord for AlgElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

impl PartialOrd for AlgElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::AddAssign for AlgElement {
    fn add_assign(&mut self, rhs: AlgElement) {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
    }
}

impl<'a> std::ops::AddAssign<&'a AlgElement> for AlgElement {
    fn add_assign(&mut self, rhs: &'a AlgElement) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl<'a> std::ops::SubAssign<&'a AlgElement> for AlgElement {
    fn sub_assign(&mut self, rhs: &'a AlgElement) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c.clone());
        }
    }
}

impl<'a> Add<&'a AlgElement> for &'a AlgElement {
    type Output = AlgElement;
    fn add(self, rhs: &'a AlgElement) -> AlgElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for AlgElement {
    type Output = AlgElement;
    fn add(mut self, rhs: AlgElement) -> AlgElement {
        self += rhs;
        self
    }
}

impl<'a> Sub<&'a AlgElement> for &'a AlgElement {
    type Output = AlgElement;
    fn sub(self, rhs: &'a AlgElement) -> AlgElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for AlgElement {
    type Output = AlgElement;
    fn sub(mut self, rhs: AlgElement) -> AlgElement {
        self -= &rhs;
        self
    }
}

impl Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        AlgElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        -&self
    }
}

impl<'a> Mul<&'a AlgElement> for &'a AlgElement {
    type Output = AlgElement;
    fn mul(self, rhs: &'a AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for AlgElement {
    type Output = AlgElement;
    fn mul(self, rhs: AlgElement) -> AlgElement {
        &self * &rhs
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if w.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{} {w}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}
