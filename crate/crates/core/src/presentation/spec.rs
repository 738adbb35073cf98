//! Block specifications and the standard forms of `F` / `Q` they describe.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::serde_str;
use crate::algebra::{Rational, ScalarMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum BlockKind {
    #[serde(rename = "unitary")]
    Unitary,
    #[serde(rename = "one-block")]
    OneBlock,
    #[serde(rename = "case-I")]
    CaseI,
    #[serde(rename = "case-II")]
    CaseII,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Block {
    #[serde(with = "serde_str")]
    pub q: Rational,
    pub m: usize,
}

impl Block {
    pub fn new(q: Rational, m: usize) -> Self {
        Block { q, m }
    }
}

fn default_epsilon() -> i8 {
    1
}

/// Eigenvalue/multiplicity data fixing a standard-form `F` (or a diagonal `Q`).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BlockSpec {
    pub kind: BlockKind,
    pub blocks: Vec<Block>,
    #[serde(default)]
    pub trailing: usize,
    #[serde(default = "default_epsilon")]
    pub epsilon: i8,
}

/// Role of one index of the fundamental matrix under the canonical layout.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndexRole {
    /// `a`-th index of the first half of paired block `block` (row of `q I`).
    First { block: usize, offset: usize },
    /// `a`-th index of the second half of paired block `block`.
    Second { block: usize, offset: usize },
    /// Index of the trailing identity block (case I).
    Trailing { offset: usize },
    /// Index inside eigenvalue block `block` of a diagonal `Q`.
    Eigen { block: usize, offset: usize },
}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::InvalidSpec {
        field: field.into(),
        message: message.into(),
    }
}

impl BlockSpec {
    pub fn unitary(blocks: Vec<Block>) -> Self {
        BlockSpec {
            kind: BlockKind::Unitary,
            blocks,
            trailing: 0,
            epsilon: 1,
        }
    }

    pub fn one_block(q: Rational, m: usize, epsilon: i8) -> Self {
        BlockSpec {
            kind: BlockKind::OneBlock,
            blocks: vec![Block::new(q, m)],
            trailing: 0,
            epsilon,
        }
    }

    pub fn case_one(blocks: Vec<Block>, trailing: usize) -> Self {
        BlockSpec {
            kind: BlockKind::CaseI,
            blocks,
            trailing,
            epsilon: 1,
        }
    }

    pub fn case_two(blocks: Vec<Block>) -> Self {
        BlockSpec {
            kind: BlockKind::CaseII,
            blocks,
            trailing: 0,
            epsilon: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (i, b) in self.blocks.iter().enumerate() {
            if b.m == 0 {
                return Err(invalid(format!("blocks[{i}].m"), "multiplicity must be positive"));
            }
            if !b.q.is_positive() {
                return Err(invalid(format!("blocks[{i}].q"), "q must be positive"));
            }
            if i > 0 && b.q <= self.blocks[i - 1].q {
                return Err(invalid(format!("blocks[{i}].q"), "q values must be strictly increasing"));
            }
        }
        if self.kind != BlockKind::CaseI && self.trailing != 0 {
            return Err(invalid("trailing", "only case-I has a trailing identity block"));
        }
        let last = self.blocks.len().saturating_sub(1);
        match self.kind {
            BlockKind::Unitary => {
                if self.blocks.is_empty() {
                    return Err(invalid("blocks", "at least one eigenvalue block is required"));
                }
            }
            BlockKind::OneBlock => {
                if self.blocks.len() != 1 {
                    return Err(invalid("blocks", "one-block needs exactly one block"));
                }
                if self.blocks[0].q >= Rational::one() {
                    return Err(invalid("blocks[0].q", "one-block requires 0 < q < 1"));
                }
                if self.epsilon != 1 && self.epsilon != -1 {
                    return Err(invalid("epsilon", "epsilon must be 1 or -1"));
                }
            }
            BlockKind::CaseI => {
                if let Some(i) = self.blocks.iter().position(|b| b.q >= Rational::one()) {
                    return Err(invalid(format!("blocks[{i}].q"), "case-I requires q < 1"));
                }
                if self.dimension() == 0 {
                    return Err(invalid("trailing", "dimension must be positive"));
                }
            }
            BlockKind::CaseII => {
                if self.blocks.is_empty() {
                    return Err(invalid("blocks", "case-II needs at least one block"));
                }
                for (i, b) in self.blocks.iter().enumerate() {
                    if b.q > Rational::one() || (b.q == Rational::one() && i != last) {
                        return Err(invalid(
                            format!("blocks[{i}].q"),
                            "case-II requires q < 1, with q = 1 allowed only in the last block",
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Size N of the fundamental matrix.
    pub fn dimension(&self) -> usize {
        let k: usize = self.blocks.iter().map(|b| b.m).sum();
        match self.kind {
            BlockKind::Unitary => k,
            _ => 2 * k + self.trailing,
        }
    }

    /// `K = M_1 + ... + M_r`.
    pub fn paired_size(&self) -> usize {
        self.blocks.iter().map(|b| b.m).sum()
    }

    /// Whether the last case-II block carries the eigenvalue 1 (the symplectic tail).
    pub fn has_symplectic_tail(&self) -> bool {
        self.kind == BlockKind::CaseII && self.blocks.last().is_some_and(|b| b.q.is_one())
    }

    /// 0-based indices of the first half of paired block `nu`.
    pub fn first_indices(&self, nu: usize) -> Vec<usize> {
        let off = self.block_offset(nu);
        (off..off + self.blocks[nu].m).collect()
    }

    /// 0-based indices of the second half of paired block `nu`.
    pub fn second_indices(&self, nu: usize) -> Vec<usize> {
        let off = self.block_offset(nu) + self.blocks[nu].m;
        (off..off + self.blocks[nu].m).collect()
    }

    /// 0-based indices of eigenvalue block `nu` (unitary kind).
    pub fn eigen_indices(&self, nu: usize) -> Vec<usize> {
        let off = self.block_offset(nu);
        (off..off + self.blocks[nu].m).collect()
    }

    pub fn trailing_indices(&self) -> Vec<usize> {
        let start = 2 * self.paired_size();
        (start..start + self.trailing).collect()
    }

    fn block_offset(&self, nu: usize) -> usize {
        let width = if self.kind == BlockKind::Unitary { 1 } else { 2 };
        self.blocks[..nu].iter().map(|b| width * b.m).sum()
    }

    pub fn index_role(&self, i: usize) -> IndexRole {
        let mut off = 0;
        for (nu, b) in self.blocks.iter().enumerate() {
            if self.kind == BlockKind::Unitary {
                if i < off + b.m {
                    return IndexRole::Eigen {
                        block: nu,
                        offset: i - off,
                    };
                }
                off += b.m;
            } else {
                if i < off + b.m {
                    return IndexRole::First {
                        block: nu,
                        offset: i - off,
                    };
                }
                if i < off + 2 * b.m {
                    return IndexRole::Second {
                        block: nu,
                        offset: i - off - b.m,
                    };
                }
                off += 2 * b.m;
            }
        }
        IndexRole::Trailing { offset: i - off }
    }
}

/// The standard-form `F` (or diagonal `Q` for the unitary kind) of a block spec.
///
/// Paired blocks appear in ascending `q` order as antidiagonal pairs
/// `[[0, q I], [s q^{-1} I, 0]]`, followed by the trailing identity.
pub fn standard_form_matrix(spec: &BlockSpec) -> Result<ScalarMatrix> {
    spec.validate()?;
    let n = spec.dimension();
    let mut f = ScalarMatrix::zeros(n, n);
    if spec.kind == BlockKind::Unitary {
        for (nu, b) in spec.blocks.iter().enumerate() {
            for i in spec.eigen_indices(nu) {
                f.set(i, i, b.q.clone());
            }
        }
        return Ok(f);
    }
    let sign = match spec.kind {
        BlockKind::OneBlock => Rational::from_integer(spec.epsilon.into()),
        BlockKind::CaseI => Rational::one(),
        _ => -Rational::one(),
    };
    for (nu, b) in spec.blocks.iter().enumerate() {
        for (i, j) in spec.first_indices(nu).into_iter().zip(spec.second_indices(nu)) {
            f.set(i, j, b.q.clone());
            f.set(j, i, &sign * b.q.recip());
        }
    }
    for t in spec.trailing_indices() {
        f.set(t, t, Rational::one());
    }
    Ok(f)
}

/// Eigenvalues of `Q = F^* F` with multiplicities, ascending.
pub fn eigenvalue_profile(f: &ScalarMatrix) -> Result<Vec<(Rational, usize)>> {
    if f.monomial_pattern().is_none() {
        return Err(Error::NonMonomial);
    }
    let q = f.adjoint().mul(f)?;
    let mut diag = q.diagonal_entries();
    diag.sort();
    let mut out: Vec<(Rational, usize)> = Vec::new();
    for d in diag {
        match out.last_mut() {
            Some((v, m)) if *v == d => *m += 1,
            _ => out.push((d, 1)),
        }
    }
    Ok(out)
}

/// `J_M = [[0, I_M], [-I_M, 0]]`.
pub fn symplectic(m: usize) -> ScalarMatrix {
    let mut j = ScalarMatrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        j.set(i, i + m, Rational::one());
        j.set(i + m, i, -Rational::one());
    }
    j
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn m(rows: Vec<Vec<Rational>>) -> ScalarMatrix {
        ScalarMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn case_one_single_block_with_trailing() {
        let spec = BlockSpec::case_one(vec![Block::new(rat(1, 2), 1)], 1);
        let f = standard_form_matrix(&spec).unwrap();
        assert_eq!(
            f,
            m(vec![
                vec![int(0), rat(1, 2), int(0)],
                vec![int(2), int(0), int(0)],
                vec![int(0), int(0), int(1)],
            ])
        );
        assert_eq!(eigenvalue_profile(&f).unwrap(), vec![(rat(1, 4), 1), (int(1), 1), (int(4), 1)]);
    }

    #[test]
    fn one_block_negative_epsilon() {
        let spec = BlockSpec::one_block(rat(1, 2), 1, -1);
        let f = standard_form_matrix(&spec).unwrap();
        assert_eq!(f, m(vec![vec![int(0), rat(1, 2)], vec![int(-2), int(0)]]));
    }

    #[test]
    fn case_two_unit_block_is_symplectic() {
        let spec = BlockSpec::case_two(vec![Block::new(int(1), 1)]);
        let f = standard_form_matrix(&spec).unwrap();
        assert_eq!(f, symplectic(1));
        assert_eq!(eigenvalue_profile(&f).unwrap(), vec![(int(1), 2)]);
    }

    // Direct product: F has q at (i, i+2) and 1/q at (i+2, i), so column i of F
    // holds 1/q and column i+2 holds q; F^T F = diag(4, 4, 1/4, 1/4).
    #[test]
    fn one_block_m2_profile() {
        let spec = BlockSpec::one_block(rat(1, 2), 2, 1);
        let f = standard_form_matrix(&spec).unwrap();
        let q = f.transpose().mul(&f).unwrap();
        assert_eq!(q, ScalarMatrix::diagonal(&[int(4), int(4), rat(1, 4), rat(1, 4)]));
        assert_eq!(eigenvalue_profile(&f).unwrap(), vec![(rat(1, 4), 2), (int(4), 2)]);
    }

    #[test]
    fn rejects_bad_orderings() {
        let bad = BlockSpec::case_one(vec![Block::new(rat(1, 2), 1), Block::new(rat(1, 3), 1)], 0);
        assert!(matches!(standard_form_matrix(&bad), Err(Error::InvalidSpec { .. })));
        let bad = BlockSpec::case_one(vec![Block::new(int(1), 1)], 0);
        assert!(standard_form_matrix(&bad).is_err());
        let bad = BlockSpec::case_two(vec![Block::new(int(1), 1), Block::new(rat(1, 2), 1)]);
        assert!(standard_form_matrix(&bad).is_err());
        let bad = BlockSpec::one_block(rat(3, 2), 1, 1);
        assert!(standard_form_matrix(&bad).is_err());
        let bad = BlockSpec::one_block(rat(1, 2), 1, 0);
        assert!(standard_form_matrix(&bad).is_err());
    }

    #[test]
    fn profile_rejects_non_monomial() {
        let f = m(vec![vec![int(1), int(1)], vec![int(0), int(1)]]);
        assert!(matches!(eigenvalue_profile(&f), Err(Error::NonMonomial)));
    }

    #[test]
    fn index_roles() {
        let spec = BlockSpec::case_one(vec![Block::new(rat(1, 3), 1), Block::new(rat(1, 2), 2)], 1);
        assert_eq!(spec.dimension(), 7);
        assert_eq!(spec.index_role(0), IndexRole::First { block: 0, offset: 0 });
        assert_eq!(spec.index_role(1), IndexRole::Second { block: 0, offset: 0 });
        assert_eq!(spec.index_role(3), IndexRole::First { block: 1, offset: 1 });
        assert_eq!(spec.index_role(5), IndexRole::Second { block: 1, offset: 1 });
        assert_eq!(spec.index_role(6), IndexRole::Trailing { offset: 0 });
    }
}
