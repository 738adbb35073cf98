use std::fmt;

use num_traits::{One, Zero};

use super::element::AlgElement;
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ScalarMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = ScalarMatrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape {
                op: "from_rows",
                left: (r, c),
                right: (r, rows.iter().map(Vec::len).max().unwrap_or(0)),
            });
        }
        Ok(ScalarMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut t = ScalarMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Entrywise complex conjugate. Rational entries are real, so this is a copy;
    /// it exists so formulas read like their matrix identities.
    pub fn conj(&self) -> ScalarMatrix {
        self.clone()
    }

    /// Conjugate transpose (equal to the transpose over the rationals).
    pub fn adjoint(&self) -> ScalarMatrix {
        self.conj().transpose()
    }

    pub fn mul(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                op: "scalar mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = ScalarMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> ScalarMatrix {
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<ScalarMatrix> {
        if self.rows != self.cols {
            return Err(Error::Shape {
                op: "inverse",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = ScalarMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).recip();
            for j in 0..n {
                let x = a.get(col, j) * &p;
                a.set(col, j, x);
                let y = inv.get(col, j) * &p;
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let x = a.get(r, j) - &f * a.get(col, j);
                    a.set(r, j, x);
                    let y = inv.get(r, j) - &f * inv.get(col, j);
                    inv.set(r, j, y);
                }
            }
        }
        Ok(inv)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    /// For a square monomial matrix, returns for each row `(column, value)` of
    /// its single nonzero entry.
    pub fn monomial_pattern(&self) -> Option<Vec<(usize, Rational)>> {
        if self.rows != self.cols {
            return None;
        }
        let mut seen = vec![false; self.cols];
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let nz: Vec<usize> = (0..self.cols).filter(|&j| !self.get(i, j).is_zero()).collect();
            if nz.len() != 1 || seen[nz[0]] {
                return None;
            }
            seen[nz[0]] = true;
            out.push((nz[0], self.get(i, nz[0]).clone()));
        }
        Some(out)
    }

    /// `Some(c)` when the matrix equals `c * I`.
    pub fn as_scalar_identity(&self) -> Option<Rational> {
        if self.rows != self.cols || !self.is_diagonal() {
            return None;
        }
        let c = self.data.first().cloned().unwrap_or_else(Rational::one);
        self.diagonal_entries().iter().all(|d| *d == c).then_some(c)
    }
}

impl fmt::Display for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", format_rational(self.get(i, j)))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Rectangular matrix over the free *-algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgMatrix {
    rows: usize,
    cols: usize,
    data: Vec<AlgElement>,
}

impl AlgMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> AlgElement) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        AlgMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        AlgMatrix::from_fn(rows, cols, |_, _| AlgElement::zero())
    }

    pub fn identity(n: usize) -> Self {
        AlgMatrix::from_fn(n, n, |i, j| if i == j { AlgElement::one() } else { AlgElement::zero() })
    }

    /// Embeds a rational matrix as constants of the algebra.
    pub fn scalar_embed(s: &ScalarMatrix) -> Self {
        AlgMatrix::from_fn(s.rows(), s.cols(), |i, j| AlgElement::scalar(s.get(i, j).clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: AlgElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &AlgElement)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(idx, e)| (idx / self.cols, idx % self.cols, e))
    }

    pub fn map(&self, f: impl Fn(&AlgElement) -> AlgElement) -> AlgMatrix {
        AlgMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, other: &AlgMatrix) -> Result<AlgMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                op: "mat_mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = AlgMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `M*`: transpose with every entry replaced by its adjoint.
    pub fn star(&self) -> AlgMatrix {
        AlgMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).adjoint())
    }

    pub fn transpose(&self) -> AlgMatrix {
        AlgMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Entrywise adjoint without transposition: `transpose(star(M))`.
    pub fn bar(&self) -> AlgMatrix {
        self.star().transpose()
    }

    fn zip(&self, other: &AlgMatrix, op: &'static str, f: impl Fn(&AlgElement, &AlgElement) -> AlgElement) -> Result<AlgMatrix> {
        if self.shape() != other.shape() {
            return Err(Error::Shape {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(AlgMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &AlgMatrix) -> Result<AlgMatrix> {
        self.zip(other, "mat_add", |a, b| a + b)
    }

    pub fn sub(&self, other: &AlgMatrix) -> Result<AlgMatrix> {
        self.zip(other, "mat_sub", |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> AlgMatrix {
        self.map(|e| e.scale(c))
    }

    /// Submatrix picking the given row and column indices, in order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> AlgMatrix {
        AlgMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }
}

impl fmt::Display for AlgMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
