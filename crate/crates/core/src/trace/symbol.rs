use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{AlgElement, Rational, Word};

/// Representative of a word's trace class.
///
/// `tau` is invariant under rotation and `tau(w*) = conj(tau(w))`, so every
/// word's trace is `Re(class) + i * sign * Im(class)`. Classes closed under
/// the adjoint carry no imaginary part.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclicForm {
    pub class: Word,
    pub sign: i8,
    pub self_adjoint: bool,
}

pub fn cyclic_canonical(w: &Word) -> CyclicForm {
    let direct = w.rotations().min().unwrap_or_default();
    let adjoint = w.adjoint().rotations().min().unwrap_or_default();
    match direct.cmp(&adjoint) {
        std::cmp::Ordering::Equal => CyclicForm {
            class: direct,
            sign: 1,
            self_adjoint: true,
        },
        std::cmp::Ordering::Less => CyclicForm {
            class: direct,
            sign: 1,
            self_adjoint: false,
        },
        std::cmp::Ordering::Greater => CyclicForm {
            class: adjoint,
            sign: -1,
            self_adjoint: false,
        },
    }
}

/// A real unknown of the tracial calculus.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Symbol {
    Re(Word),
    Im(Word),
}

impl Symbol {
    pub fn word(&self) -> &Word {
        match self {
            Symbol::Re(w) | Symbol::Im(w) => w,
        }
    }

    /// `Re tau(g* g)` for a single generator `g`: known to be nonnegative for
    /// any state, and zero for a faithful trace only if `g = 0`.
    pub fn is_square(&self) -> bool {
        match self {
            Symbol::Re(w) => match w.letters() {
                [a, b] => a.gen == b.gen && a.star != b.star,
                _ => false,
            },
            Symbol::Im(_) => false,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Re(w) => write!(f, "Re tau({w})"),
            Symbol::Im(w) => write!(f, "Im tau({w})"),
        }
    }
}

/// A real affine form `constant + sum c_s * s` over trace symbols.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct TraceExpr {
    pub constant: Rational,
    pub terms: BTreeMap<Symbol, Rational>,
}

impl TraceExpr {
    pub fn zero() -> Self {
        TraceExpr::default()
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.terms.is_empty()
    }

    pub fn coeff(&self, s: &Symbol) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, s: Symbol, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(s);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &TraceExpr, c: &Rational) {
        if c.is_zero() {
            return;
        }
        self.constant += &other.constant * c;
        for (s, x) in &other.terms {
            self.add_term(s.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &Rational) -> TraceExpr {
        let mut out = TraceExpr::zero();
        out.add_scaled(self, c);
        out
    }

    /// Scaled so the first term (or the constant, if there are no terms) is 1.
    pub fn normalized(&self) -> TraceExpr {
        let lead = self.terms.values().next().unwrap_or(&self.constant).clone();
        if lead.is_zero() {
            return self.clone();
        }
        self.scale(&lead.recip())
    }
}

impl fmt::Display for TraceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.constant.is_zero() || self.terms.is_empty() {
            write!(f, "{}", self.constant)?;
            first = false;
        }
        for (s, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) {s}")?;
        }
        Ok(())
    }
}

/// Real and imaginary parts of `tau(x)` as affine forms.
pub fn trace_of(x: &AlgElement) -> (TraceExpr, TraceExpr) {
    let mut re = TraceExpr::zero();
    let mut im = TraceExpr::zero();
    for (w, c) in x.terms() {
        if w.is_empty() {
            re.constant += c;
            continue;
        }
        let form = cyclic_canonical(w);
        re.add_term(Symbol::Re(form.class.clone()), c);
        if !form.self_adjoint {
            let signed = if form.sign < 0 { -c.clone() } else { c.clone() };
            im.add_term(Symbol::Im(form.class), &signed);
        }
    }
    (re, im)
}
