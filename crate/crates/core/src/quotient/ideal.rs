//! Degree-bounded two-sided ideals of the free *-algebra.
//!
//! `I_d` is the linear span of `w r w'` over relations `r` (and their
//! adjoints) with `|w| + deg r + |w'| <= d`. It is a subspace of `I`, so
//! membership in `I_d` proves membership in the ideal; non-membership is
//! only evidence at that degree.

use std::collections::BTreeMap;

use crate::algebra::{words_of_length, AlgElement, Letter, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct BoundedIdeal {
    bound: usize,
    /// Semi-echelon basis: leading word -> element with leading coefficient 1.
    basis: BTreeMap<Word, AlgElement>,
}

impl BoundedIdeal {
    pub fn new(relations: &[AlgElement], letters: &[Letter], bound: usize) -> BoundedIdeal {
        let mut ideal = BoundedIdeal {
            bound,
            basis: BTreeMap::new(),
        };
        let mut gens: Vec<AlgElement> = Vec::new();
        for r in relations {
            gens.push(r.clone());
            let adj = r.adjoint();
            if adj.normalized() != r.normalized() {
                gens.push(adj);
            }
        }
        let words: Vec<Vec<Word>> = (0..=bound).map(|len| words_of_length(letters, len)).collect();
        for r in &gens {
            let d = r.degree();
            if d > bound {
                continue;
            }
            let room = bound - d;
            for left_len in 0..=room {
                for right_len in 0..=room - left_len {
                    for w in &words[left_len] {
                        let left = if w.is_empty() {
                            r.clone()
                        } else {
                            &AlgElement::word(w.clone()) * r
                        };
                        for v in &words[right_len] {
                            let x = if v.is_empty() {
                                left.clone()
                            } else {
                                &left * &AlgElement::word(v.clone())
                            };
                            ideal.insert(x);
                        }
                    }
                }
            }
        }
        ideal
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Dimension of `I_d`.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    fn insert(&mut self, mut x: AlgElement) {
        while let Some((w, c)) = x.leading_term() {
            match self.basis.get(w) {
                Some(b) => {
                    let c = c.clone();
                    x -= &b.scale(&c);
                }
                None => {
                    let w = w.clone();
                    let inv = c.recip();
                    self.basis.insert(w, x.scale(&inv));
                    return;
                }
            }
        }
    }

    /// Remainder of `x` after full reduction by the basis; zero iff `x` is in `I_d`.
    pub fn normal_form(&self, x: &AlgElement) -> AlgElement {
        let mut rest = x.clone();
        let mut out = AlgElement::zero();
        while let Some((w, c)) = rest.leading_term() {
            let (w, c) = (w.clone(), c.clone());
            match self.basis.get(&w) {
                Some(b) => rest -= &b.scale(&c),
                None => {
                    let t = AlgElement::term(w, c);
                    rest -= &t;
                    out += t;
                }
            }
        }
        out
    }

    pub fn contains(&self, x: &AlgElement) -> Result<bool> {
        let d = x.degree();
        if d > self.bound {
            return Err(Error::BoundTooSmall {
                bound: self.bound,
                degree: d,
            });
        }
        Ok(self.normal_form(x).is_zero())
    }
}

/// Number of products `w r w'` spanning `I_d` (relations and adjoints counted separately).
pub fn spanning_products(relations: &[AlgElement], letters: usize, d: usize) -> usize {
    let mut total: usize = 0;
    for r in relations {
        let deg = r.degree();
        if deg > d {
            continue;
        }
        let room = d - deg;
        let mut per = 0usize;
        for len in 0..=room {
            per = per.saturating_add((len + 1).saturating_mul(letters.saturating_pow(len as u32)));
        }
        total = total.saturating_add(per.saturating_mul(2));
    }
    total
}

/// Builds `I_d` for increasing `d` on demand, up to a fixed bound and,
/// optionally, a cap on the number of spanning products per level.
#[derive(Debug)]
pub struct IdealLadder<'a> {
    relations: &'a [AlgElement],
    letters: Vec<Letter>,
    bound: usize,
    limit: Option<usize>,
    levels: BTreeMap<usize, Option<BoundedIdeal>>,
}

impl<'a> IdealLadder<'a> {
    pub fn new(relations: &'a [AlgElement], letters: Vec<Letter>, bound: usize) -> Self {
        IdealLadder {
            relations,
            letters,
            bound,
            limit: None,
            levels: BTreeMap::new(),
        }
    }

    /// Levels needing more than `limit` spanning products are skipped.
    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// `I_d`, or `None` if `d` exceeds the bound or the level is too large to build.
    pub fn level(&mut self, d: usize) -> Option<&BoundedIdeal> {
        if d > self.bound {
            return None;
        }
        let (relations, letters, limit) = (self.relations, &self.letters, self.limit);
        self.levels
            .entry(d)
            .or_insert_with(|| {
                let fits = limit.is_none_or(|l| spanning_products(relations, letters.len(), d) <= l);
                fits.then(|| BoundedIdeal::new(relations, letters, d))
            })
            .as_ref()
    }

    /// Smallest `d <= bound` with `x` in `I_d`, or `None`.
    pub fn membership_degree(&mut self, x: &AlgElement) -> Result<Option<usize>> {
        let start = x.degree();
        if start > self.bound {
            return Err(Error::BoundTooSmall {
                bound: self.bound,
                degree: start,
            });
        }
        if x.is_zero() {
            return Ok(Some(0));
        }
        for d in start..=self.bound {
            match self.level(d) {
                Some(ideal) if ideal.contains(x)? => return Ok(Some(d)),
                Some(_) => {}
                None => break,
            }
        }
        Ok(None)
    }
}

/// `x` in `I_bound`?
pub fn ideal_contains(relations: &[AlgElement], letters: &[Letter], x: &AlgElement, bound: usize) -> Result<bool> {
    let mut ladder = IdealLadder::new(relations, letters.to_vec(), bound);
    Ok(ladder.membership_degree(x)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GeneratorId;

    fn a() -> Letter {
        GeneratorId::u(1, 1).plain()
    }

    fn rels() -> Vec<AlgElement> {
        // a* a = 1 and a a* = 1.
        let x = AlgElement::letter(a());
        let xs = AlgElement::letter(a().adjoint());
        vec![&(&xs * &x) - &AlgElement::one(), &(&x * &xs) - &AlgElement::one()]
    }

    #[test]
    fn unitary_consequences() {
        let letters = vec![a(), a().adjoint()];
        let x = AlgElement::letter(a());
        let xs = AlgElement::letter(a().adjoint());
        // a a* a - a = a (a* a - 1) lies in I_3 but not in I_2 (degree too small).
        let y = &(&(&x * &xs) * &x) - &x;
        assert!(ideal_contains(&rels(), &letters, &y, 3).unwrap());
        assert!(matches!(ideal_contains(&rels(), &letters, &y, 2), Err(Error::BoundTooSmall { .. })));
        assert!(!ideal_contains(&rels(), &letters, &x, 3).unwrap());
        let ideal = BoundedIdeal::new(&rels(), &letters, 2);
        assert!(ideal.contains(&(&(&xs * &x) - &(&x * &xs))).unwrap());
        assert!(!ideal.contains(&(&xs * &x)).unwrap());
        assert_eq!(ideal.normal_form(&(&xs * &x)), AlgElement::one());
    }
}
