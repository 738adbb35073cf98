//! Exact two-phase simplex (dense tableau, Bland's rule) for
//! `max c.x  s.t.  A x = b, x >= 0`, returning an optimal dual as well.

use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

#[derive(Clone, PartialEq, Debug)]
pub enum LpOutcome {
    /// Optimal value and a dual `y` with `A^T y >= c` and `b.y = value`.
    Optimal {
        value: Rational,
        dual: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

struct Tableau {
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    n: usize,
    m: usize,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.n + self.m
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.t[r][c].recip();
        for x in self.t[r].iter_mut() {
            if !x.is_zero() {
                *x *= &p;
            }
        }
        let pivot_row = self.t[r].clone();
        for (k, row) in self.t.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    fn reduced_cost(&self, cost: &[Rational], j: usize) -> Rational {
        let mut d = cost[j].clone();
        for (k, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() && !self.t[k][j].is_zero() {
                d -= &cost[b] * &self.t[k][j];
            }
        }
        d
    }

    /// Runs simplex iterations on columns accepted by `allowed`.
    /// Returns false if the objective is unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: impl Fn(usize) -> bool) -> bool {
        let rhs = self.rhs();
        loop {
            let entering = (0..rhs)
                .filter(|&j| allowed(j) && !self.basis.contains(&j))
                .find(|&j| self.reduced_cost(cost, j).is_positive());
            let Some(c) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for k in 0..self.m {
                if !self.t[k][c].is_positive() {
                    continue;
                }
                let ratio = &self.t[k][rhs] / &self.t[k][c];
                let better = match &best {
                    None => true,
                    Some((bk, br)) => ratio < *br || (ratio == *br && self.basis[k] < self.basis[*bk]),
                };
                if better {
                    best = Some((k, ratio));
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        let rhs = self.rhs();
        self.basis.iter().enumerate().map(|(k, &b)| &cost[b] * &self.t[k][rhs]).sum()
    }
}

/// Maximizes `c.x` over `{x >= 0 : A x = b}` exactly.
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let width = n + m + 1;
    let mut signs = Vec::with_capacity(m);
    let mut t = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        signs.push(if flip { -Rational::one() } else { Rational::one() });
        let mut r = vec![Rational::zero(); width];
        for (j, x) in row.iter().enumerate() {
            r[j] = if flip { -x.clone() } else { x.clone() };
        }
        r[n + i] = Rational::one();
        r[n + m] = b[i].abs();
        t.push(r);
    }
    let mut tab = Tableau {
        t,
        basis: (n..n + m).collect(),
        n,
        m,
    };

    // Phase 1: maximize minus the sum of artificials.
    let mut phase1 = vec![Rational::zero(); n + m];
    for x in phase1.iter_mut().skip(n) {
        *x = -Rational::one();
    }
    tab.optimize(&phase1, |_| true);
    if tab.objective(&phase1).is_negative() {
        return LpOutcome::Infeasible;
    }
    for k in 0..m {
        if tab.basis[k] >= n {
            if let Some(j) = (0..n).find(|&j| !tab.t[k][j].is_zero()) {
                tab.pivot(k, j);
            }
        }
    }

    // Phase 2: artificials never re-enter; their columns hold B^{-1}.
    let mut phase2 = vec![Rational::zero(); n + m];
    phase2[..n].clone_from_slice(c);
    if !tab.optimize(&phase2, |j| j < n) {
        return LpOutcome::Unbounded;
    }
    let value = tab.objective(&phase2);
    let dual = (0..m)
        .map(|i| {
            let y: Rational = tab
                .basis
                .iter()
                .enumerate()
                .filter(|(_, &b)| !phase2[b].is_zero())
                .map(|(k, &b)| &phase2[b] * &tab.t[k][n + i])
                .sum();
            y * &signs[i]
        })
        .collect();
    LpOutcome::Optimal { value, dual }
}
