use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{eval_residual, random_unitary, CMatrix, NumAssignment, SEARCH_TOL};
use crate::algebra::{to_f64, GeneratorId};
use crate::presentation::Presentation;

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub max_iters: usize,
    pub restarts: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_iters: 300,
            restarts: 50,
        }
    }
}

/// A relation as a list of `(word, coefficient)`, letters as `(generator index, star)`.
type Poly = Vec<(Vec<(usize, bool)>, f64)>;

struct Problem {
    gens: Vec<GeneratorId>,
    relations: Vec<Poly>,
    n: usize,
}

impl Problem {
    fn new(p: &Presentation, n: usize) -> Self {
        let gens = p.generators().to_vec();
        let index: BTreeMap<GeneratorId, usize> = gens.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        let relations = p
            .relation_elements()
            .map(|r| {
                r.terms()
                    .map(|(w, c)| {
                        let letters = w.letters().iter().map(|l| (index[&l.gen], l.star)).collect();
                        (letters, to_f64(c))
                    })
                    .collect()
            })
            .collect();
        Problem { gens, relations, n }
    }

    fn params(&self) -> usize {
        2 * self.n * self.n * self.gens.len()
    }

    fn residuals(&self) -> usize {
        2 * self.n * self.n * self.relations.len()
    }

    fn unpack(&self, x: &DVector<f64>) -> Vec<CMatrix> {
        let nn = self.n * self.n;
        (0..self.gens.len())
            .map(|g| {
                CMatrix::from_fn(self.n, self.n, |a, b| {
                    let base = 2 * (g * nn + a * self.n + b);
                    Complex64::new(x[base], x[base + 1])
                })
            })
            .collect()
    }

    fn pack(&self, mats: &[CMatrix]) -> DVector<f64> {
        let nn = self.n * self.n;
        let mut x = DVector::zeros(self.params());
        for (g, m) in mats.iter().enumerate() {
            for a in 0..self.n {
                for b in 0..self.n {
                    let base = 2 * (g * nn + a * self.n + b);
                    x[base] = m[(a, b)].re;
                    x[base + 1] = m[(a, b)].im;
                }
            }
        }
        x
    }

    /// Stacked real and imaginary parts of every relation, with the Jacobian.
    fn evaluate(&self, x: &DVector<f64>, with_jacobian: bool) -> (DVector<f64>, DMatrix<f64>) {
        let n = self.n;
        let nn = n * n;
        let mats = self.unpack(x);
        let adj: Vec<CMatrix> = mats.iter().map(|m| m.adjoint()).collect();
        let mut r = DVector::zeros(self.residuals());
        let mut jac = if with_jacobian {
            DMatrix::zeros(self.residuals(), self.params())
        } else {
            DMatrix::zeros(0, 0)
        };
        let id = CMatrix::identity(n, n);
        for (rho, poly) in self.relations.iter().enumerate() {
            let row0 = 2 * rho * nn;
            for (word, c) in poly {
                let factors: Vec<&CMatrix> = word.iter().map(|&(g, star)| if star { &adj[g] } else { &mats[g] }).collect();
                let m = factors.len();
                let mut prefix = Vec::with_capacity(m + 1);
                prefix.push(id.clone());
                for f in &factors {
                    let next = prefix.last().unwrap() * *f;
                    prefix.push(next);
                }
                for a in 0..n {
                    for b in 0..n {
                        let v = prefix[m][(a, b)] * *c;
                        r[row0 + 2 * (a * n + b)] += v.re;
                        r[row0 + 2 * (a * n + b) + 1] += v.im;
                    }
                }
                if !with_jacobian {
                    continue;
                }
                let mut suffix = vec![id.clone(); m + 1];
                for i in (0..m).rev() {
                    suffix[i] = factors[i] * &suffix[i + 1];
                }
                for (i, &(g, star)) in word.iter().enumerate() {
                    let (pre, post) = (&prefix[i], &suffix[i + 1]);
                    for a in 0..n {
                        for b in 0..n {
                            let col = 2 * (g * nn + a * n + b);
                            // d/dRe and d/dIm of X_ab; for X^* the unit sits at (b, a).
                            let (ia, ib, im_phase) = if star {
                                (b, a, Complex64::new(0.0, -1.0))
                            } else {
                                (a, b, Complex64::new(0.0, 1.0))
                            };
                            for s in 0..n {
                                for t in 0..n {
                                    let d = pre[(s, ia)] * post[(ib, t)] * *c;
                                    if d == Complex64::new(0.0, 0.0) {
                                        continue;
                                    }
                                    let row = row0 + 2 * (s * n + t);
                                    let di = d * im_phase;
                                    jac[(row, col)] += d.re;
                                    jac[(row + 1, col)] += d.im;
                                    jac[(row, col + 1)] += di.re;
                                    jac[(row + 1, col + 1)] += di.im;
                                }
                            }
                        }
                    }
                }
            }
        }
        (r, jac)
    }
}

fn initial_point(p: &Presentation, problem: &Problem, rng: &mut ChaCha8Rng) -> Vec<CMatrix> {
    let n = problem.n;
    let unitaries: BTreeMap<u16, CMatrix> = p
        .layouts()
        .iter()
        .map(|l| (l.factor, random_unitary(l.dimension() * n, rng)))
        .collect();
    problem
        .gens
        .iter()
        .map(|g| match p.position_of(g) {
            Some((layout, j, k)) => unitaries[&layout.factor].view((j * n, k * n), (n, n)).into_owned(),
            None => random_unitary(n, rng) * Complex64::new(0.1, 0.0),
        })
        .collect()
}

fn levenberg_marquardt(problem: &Problem, mut x: DVector<f64>, max_iters: usize) -> DVector<f64> {
    let mut lambda = 1e-3;
    let (mut r, mut jac) = problem.evaluate(&x, true);
    let mut cost = r.norm_squared();
    for _ in 0..max_iters {
        if cost < 1e-28 {
            break;
        }
        let jt = jac.transpose();
        let g = &jt * &r;
        let h = &jt * &jac;
        let mut accepted = false;
        for _ in 0..20 {
            let mut damped = h.clone();
            for i in 0..damped.nrows() {
                damped[(i, i)] += lambda * (1.0 + h[(i, i)]);
            }
            let Some(chol) = damped.cholesky() else {
                lambda *= 10.0;
                continue;
            };
            let step = chol.solve(&(-&g));
            let trial = &x + &step;
            let (tr, _) = problem.evaluate(&trial, false);
            let tcost = tr.norm_squared();
            if tcost < cost {
                x = trial;
                lambda = (lambda / 3.0).max(1e-12);
                accepted = true;
                break;
            }
            lambda *= 4.0;
        }
        if !accepted {
            break;
        }
        (r, jac) = problem.evaluate(&x, true);
        cost = r.norm_squared();
    }
    x
}

/// Damped Gauss-Newton search for an `n`-dimensional representation.
///
/// Starts from blocks of a random unitary drawn from `seed` and returns the
/// point only if [`eval_residual`] certifies it below `1e-8`.
pub fn rep_search(p: &Presentation, n: usize, seed: u64) -> Option<NumAssignment> {
    rep_search_with(p, n, seed, &SearchOptions::default())
}

pub fn rep_search_with(p: &Presentation, n: usize, seed: u64, opts: &SearchOptions) -> Option<NumAssignment> {
    if n == 0 {
        return None;
    }
    let problem = Problem::new(p, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x0 = problem.pack(&initial_point(p, &problem, &mut rng));
    let x = levenberg_marquardt(&problem, x0, opts.max_iters);
    let images = problem.gens.iter().cloned().zip(problem.unpack(&x)).collect();
    let pi = NumAssignment::new(n, images).ok()?;
    let report = eval_residual(p, &pi).ok()?;
    (report.max < SEARCH_TOL).then_some(pi)
}

/// Runs seeds `seed, seed + 1, ...` concurrently; returns the first seed (in
/// seed order) that succeeds.
pub fn rep_search_restarts(p: &Presentation, n: usize, seed: u64, restarts: usize) -> Option<(u64, NumAssignment)> {
    let opts = SearchOptions {
        restarts,
        ..SearchOptions::default()
    };
    (0..opts.restarts as u64).into_par_iter().find_map_first(|i| {
        let s = seed.wrapping_add(i);
        rep_search_with(p, n, s, &opts).map(|pi| (s, pi))
    })
}
