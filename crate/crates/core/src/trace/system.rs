use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use super::certificate::Certificate;
use super::equations::Equation;
use super::simplex::{maximize, LpOutcome};
use super::symbol::{Symbol, TraceExpr};
use crate::algebra::{GeneratorId, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
struct Row {
    expr: TraceExpr,
    mult: BTreeMap<usize, Rational>,
}

impl Row {
    fn sub_scaled(&mut self, other: &Row, c: &Rational) {
        let neg = -c.clone();
        self.expr.add_scaled(&other.expr, &neg);
        for (e, x) in &other.mult {
            let v = self.mult.entry(*e).or_insert_with(Rational::zero);
            *v -= x * c;
            if v.is_zero() {
                self.mult.remove(e);
            }
        }
    }

    fn scale(&mut self, c: &Rational) {
        self.expr = self.expr.scale(c);
        for x in self.mult.values_mut() {
            *x *= c;
        }
    }
}

/// A set of trace equations with every free unknown eliminated, ready to
/// answer forced-zero queries.
///
/// Unknowns other than the squares `Re tau(g* g)` are unconstrained, so the
/// equations are first put in echelon form on those columns. The rows left
/// without free unknowns span every combination that is free of them; each
/// carries its multipliers back to the original equations.
#[derive(Clone, Debug)]
pub struct TraceSystem {
    equations: Vec<Equation>,
    squares: BTreeMap<GeneratorId, Symbol>,
    reduced: Vec<Row>,
    columns: Vec<Symbol>,
}

impl TraceSystem {
    pub fn prepare(equations: Vec<Equation>, squares: BTreeMap<GeneratorId, Symbol>) -> TraceSystem {
        let nonneg: BTreeSet<Symbol> = squares.values().cloned().collect();
        let is_free = |s: &Symbol| !nonneg.contains(s);
        let mut pivots: Vec<Row> = Vec::new();
        let mut pivot_of: BTreeMap<Symbol, usize> = BTreeMap::new();
        let mut reduced = Vec::new();
        for (i, eq) in equations.iter().enumerate() {
            let mut row = Row {
                expr: eq.expr.clone(),
                mult: BTreeMap::from([(i, Rational::one())]),
            };
            // Pivots only contain columns that were free when they were
            // created, so eliminating in creation order terminates.
            while let Some((idx, s)) = row
                .expr
                .terms
                .keys()
                .filter_map(|s| pivot_of.get(s).map(|&idx| (idx, s.clone())))
                .min()
            {
                let c = row.expr.coeff(&s);
                row.sub_scaled(&pivots[idx], &c);
            }
            match row.expr.terms.keys().find(|s| is_free(s)).cloned() {
                Some(s) => {
                    let c = row.expr.coeff(&s).recip();
                    row.scale(&c);
                    pivot_of.insert(s, pivots.len());
                    pivots.push(row);
                }
                None if row.expr.is_zero() => {}
                None => reduced.push(row),
            }
        }
        let mut columns: BTreeSet<Symbol> = reduced.iter().flat_map(|r| r.expr.terms.keys().cloned()).collect();
        columns.extend(squares.values().cloned());
        TraceSystem {
            equations,
            squares,
            reduced,
            columns: columns.into_iter().collect(),
        }
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    pub fn into_equations(self) -> Vec<Equation> {
        self.equations
    }

    pub fn squares(&self) -> &BTreeMap<GeneratorId, Symbol> {
        &self.squares
    }

    /// Number of combinations of the equations that involve only squares.
    pub fn reduced_len(&self) -> usize {
        self.reduced.len()
    }

    /// Decides whether `tau(g* g) = 0` is forced.
    ///
    /// Maximizes `tau(g* g)` over nonnegative squares subject to the reduced
    /// system. A zero optimum yields a certificate from the optimal dual; a
    /// positive optimum means `g` is not forced to vanish by these equations.
    pub fn forced_zero(&self, g: &GeneratorId) -> Result<Option<Certificate>> {
        let target = self.squares.get(g).ok_or(Error::UnknownGenerator(*g))?;
        let index: BTreeMap<&Symbol, usize> = self.columns.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let n = self.columns.len();
        let a: Vec<Vec<Rational>> = self
            .reduced
            .iter()
            .map(|r| {
                let mut v = vec![Rational::zero(); n];
                for (s, c) in &r.expr.terms {
                    v[index[s]] = c.clone();
                }
                v
            })
            .collect();
        let b: Vec<Rational> = self.reduced.iter().map(|r| -r.expr.constant.clone()).collect();
        let mut c = vec![Rational::zero(); n];
        c[index[target]] = Rational::one();
        match maximize(&a, &b, &c) {
            LpOutcome::Infeasible => Err(Error::Infeasible),
            LpOutcome::Unbounded => Err(Error::Undetermined(format!("tau({g}* {g}) is unbounded under the trace equations"))),
            LpOutcome::Optimal { value, .. } if value.is_positive() => Ok(None),
            LpOutcome::Optimal { dual, .. } => {
                let mut lambda: BTreeMap<usize, Rational> = BTreeMap::new();
                for (row, y) in self.reduced.iter().zip(&dual) {
                    if y.is_zero() {
                        continue;
                    }
                    for (e, m) in &row.mult {
                        *lambda.entry(*e).or_insert_with(Rational::zero) += m * y;
                    }
                }
                let multipliers: Vec<(usize, Rational)> = lambda.into_iter().filter(|(_, l)| !l.is_zero()).collect();
                Certificate::from_multipliers(*g, target.clone(), multipliers, &self.equations)
                    .filter(|cert| cert.verify(&self.equations))
                    .map(Some)
                    .ok_or_else(|| Error::Undetermined(format!("dual for {g} did not yield a valid certificate")))
            }
        }
    }
}
