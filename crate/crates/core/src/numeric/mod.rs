//! Evaluation of presentations at complex matrices.
//!
//! This is the only floating-point part of the crate. It certifies classical
//! points and searches for small finite-dimensional representations.

mod search;

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::algebra::{to_f64, AlgElement, GeneratorId, ScalarMatrix, Word};
use crate::error::{Error, Result};
use crate::presentation::Presentation;

pub use search::{rep_search, rep_search_restarts, SearchOptions};

pub type CMatrix = DMatrix<Complex64>;

/// Acceptance tolerance for certified points.
pub const ACCEPT_TOL: f64 = 1e-10;
/// Acceptance threshold for points found by [`rep_search`].
pub const SEARCH_TOL: f64 = 1e-8;

/// `pi: A -> M_n(C)` given on plain generators; `pi(g*) = pi(g)^*`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumAssignment {
    dim: usize,
    images: BTreeMap<GeneratorId, CMatrix>,
}

impl NumAssignment {
    pub fn new(dim: usize, images: BTreeMap<GeneratorId, CMatrix>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Numeric("representation dimension must be at least 1".into()));
        }
        for m in images.values() {
            if m.shape() != (dim, dim) {
                return Err(Error::Shape {
                    op: "NumAssignment::new",
                    left: (dim, dim),
                    right: m.shape(),
                });
            }
        }
        Ok(NumAssignment { dim, images })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn images(&self) -> &BTreeMap<GeneratorId, CMatrix> {
        &self.images
    }

    pub fn get(&self, g: &GeneratorId) -> Option<&CMatrix> {
        self.images.get(g)
    }

    /// `W pi(g) W^*` for every generator.
    pub fn conjugate_by(&self, w: &CMatrix) -> NumAssignment {
        let wa = w.adjoint();
        NumAssignment {
            dim: self.dim,
            images: self.images.iter().map(|(g, m)| (*g, w * m * &wa)).collect(),
        }
    }

    pub fn eval_word(&self, w: &Word) -> Result<CMatrix> {
        let mut acc = CMatrix::identity(self.dim, self.dim);
        for l in w.letters() {
            let m = self.images.get(&l.gen).ok_or(Error::UnknownGenerator(l.gen))?;
            acc = if l.star { acc * m.adjoint() } else { acc * m };
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &AlgElement) -> Result<CMatrix> {
        let mut out = CMatrix::zeros(self.dim, self.dim);
        for (w, c) in x.terms() {
            out += self.eval_word(w)? * Complex64::new(to_f64(c), 0.0);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationResidual {
    pub origin: String,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualReport {
    pub residuals: Vec<RelationResidual>,
    pub max: f64,
    pub tolerance: f64,
}

impl ResidualReport {
    pub fn passes(&self) -> bool {
        self.max <= self.tolerance
    }
}

/// Largest singular value; power iteration on `A^* A` if the SVD does not converge.
pub fn operator_norm(a: &CMatrix) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    if let Some(svd) = a.clone().try_svd(false, false, 1e-15, 10_000) {
        return svd.singular_values.iter().cloned().fold(0.0, f64::max);
    }
    let g = a.adjoint() * a;
    let mut v = nalgebra::DVector::from_element(a.ncols(), Complex64::new(1.0, 0.0));
    let mut lambda = 0.0;
    for _ in 0..1000 {
        let w = &g * &v;
        let n = w.norm();
        if n == 0.0 {
            return 0.0;
        }
        v = w / Complex64::new(n, 0.0);
        if (n - lambda).abs() <= 1e-15 * n {
            lambda = n;
            break;
        }
        lambda = n;
    }
    lambda.sqrt()
}

/// Operator-norm residual of every relation under `pi`.
pub fn eval_residual(p: &Presentation, pi: &NumAssignment) -> Result<ResidualReport> {
    for g in p.generators() {
        if !pi.images.contains_key(g) {
            return Err(Error::UnknownGenerator(*g));
        }
    }
    let mut residuals = Vec::with_capacity(p.relations().len());
    let mut max: f64 = 0.0;
    for r in p.relations() {
        let v = operator_norm(&pi.eval(&r.element)?);
        max = max.max(v);
        residuals.push(RelationResidual {
            origin: r.origin.clone(),
            residual: v,
        });
    }
    Ok(ResidualReport {
        residuals,
        max,
        tolerance: ACCEPT_TOL,
    })
}

pub fn to_complex(m: &ScalarMatrix) -> CMatrix {
    CMatrix::from_fn(m.rows(), m.cols(), |i, j| Complex64::new(to_f64(m.get(i, j)), 0.0))
}

fn unitarity_defect(v: &CMatrix) -> f64 {
    let n = v.nrows();
    operator_norm(&(v.adjoint() * v - CMatrix::identity(n, n)))
}

fn block(v: &CMatrix, offset: usize, n: usize) -> CMatrix {
    v.view((offset, offset), (n, n)).into_owned()
}

/// The one-dimensional point `pi(u_jk) = V_jk`.
///
/// For several factors `V` is read block-diagonally, one block per factor
/// in layout order. Each block must be unitary, and additionally satisfy
/// `V = F conj(V) F^{-1}` (orthogonal factors) or have `Q conj(V) Q^{-1}`
/// unitary (unitary factors).
pub fn classical_point(p: &Presentation, v: &CMatrix) -> Result<NumAssignment> {
    let total: usize = p.layouts().iter().map(|l| l.dimension()).sum();
    if v.shape() != (total, total) {
        return Err(Error::Shape {
            op: "classical_point",
            left: (total, total),
            right: v.shape(),
        });
    }
    let mut images = BTreeMap::new();
    let mut offset = 0;
    for layout in p.layouts() {
        let n = layout.dimension();
        let vb = block(v, offset, n);
        let defect = unitarity_defect(&vb);
        if defect > ACCEPT_TOL {
            return Err(Error::Numeric(format!(
                "factor {}: V is not unitary, |V*V - I| = {defect:e}",
                layout.factor
            )));
        }
        if let Some(f) = &layout.f {
            let fc = to_complex(f);
            let finv = to_complex(&f.inverse()?);
            let defect = operator_norm(&(&fc * vb.conjugate() * &finv - &vb));
            if defect > ACCEPT_TOL {
                return Err(Error::Numeric(format!(
                    "factor {}: V differs from F conj(V) F^-1 by {defect:e}",
                    layout.factor
                )));
            }
        } else {
            let qc = to_complex(&layout.q);
            let qinv = to_complex(&layout.q.inverse()?);
            let defect = unitarity_defect(&(&qc * vb.conjugate() * &qinv));
            if defect > ACCEPT_TOL {
                return Err(Error::Numeric(format!(
                    "factor {}: Q conj(V) Q^-1 is not unitary, defect {defect:e}",
                    layout.factor
                )));
            }
        }
        for (j, k, e) in layout.matrix.entries() {
            if let Some((g, c)) = single_generator(e) {
                if c == Complex64::new(1.0, 0.0) {
                    images.insert(g, CMatrix::from_element(1, 1, vb[(j, k)]));
                }
            }
        }
        offset += n;
    }
    NumAssignment::new(1, images)
}

/// `(g, c)` if `e = c g` for a plain generator `g`.
fn single_generator(e: &AlgElement) -> Option<(GeneratorId, Complex64)> {
    if e.len() != 1 {
        return None;
    }
    let (w, c) = e.terms().next()?;
    match w.letters() {
        [l] if !l.star => Some((l.gen, Complex64::new(to_f64(c), 0.0))),
        _ => None,
    }
}

/// Haar-ish random unitary: QR of a complex Gaussian matrix, phases fixed.
pub fn random_unitary<R: Rng>(n: usize, rng: &mut R) -> CMatrix {
    let z = CMatrix::from_fn(n, n, |_, _| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
    let qr = z.qr();
    let (q, r) = (qr.q(), qr.r());
    let mut out = q;
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..n {
            out[(i, j)] *= phase;
        }
    }
    out
}

/// Block-diagonal matrix from square blocks.
pub fn block_diagonal(blocks: &[CMatrix]) -> CMatrix {
    let n: usize = blocks.iter().map(|b| b.nrows()).sum();
    let mut out = CMatrix::zeros(n, n);
    let mut o = 0;
    for b in blocks {
        out.view_mut((o, o), b.shape()).copy_from(b);
        o += b.nrows();
    }
    out
}
