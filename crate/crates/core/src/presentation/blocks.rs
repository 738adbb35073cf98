//! Named sub-blocks of the fundamental matrix in standard-form block layout.

use super::spec::{BlockKind, BlockSpec};
use super::Presentation;
use crate::algebra::{AlgMatrix, GeneratorId};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct NamedBlock {
    pub name: String,
    /// 0-based row indices in the fundamental matrix.
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub matrix: AlgMatrix,
}

/// The kept region of a fundamental matrix split into named blocks.
///
/// Orthogonal kinds: `A{r}{m}` = first half of block r x first half of block m,
/// `C{r}{m}` = second half x first half, `X{m}` = trailing rows x first half,
/// `R{m}` = first half x trailing columns, `Z` = trailing x trailing. The
/// one-block kind uses plain `A` and `C`. The unitary kind has `A{r}{m}` over
/// eigenvalue blocks.
#[derive(Clone, PartialEq, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<NamedBlock>,
}

impl BlockDecomposition {
    pub fn get(&self, name: &str) -> Option<&NamedBlock> {
        self.blocks.iter().find(|b| b.name == name)
    }

    pub fn names(&self) -> Vec<&str> {
        self.blocks.iter().map(|b| b.name.as_str()).collect()
    }

    /// Name of the block whose region contains position `(row, col)` (0-based).
    pub fn block_at(&self, row: usize, col: usize) -> Option<&str> {
        self.blocks
            .iter()
            .find(|b| b.rows.contains(&row) && b.cols.contains(&col))
            .map(|b| b.name.as_str())
    }

    /// Name of the block holding a factor-0 generator `u_{jk}`.
    pub fn block_of(&self, g: &GeneratorId) -> Option<&str> {
        if g.factor != 0 || g.row == 0 || g.col == 0 {
            return None;
        }
        self.block_at(g.row as usize - 1, g.col as usize - 1)
    }
}

fn pair_name(prefix: char, r: usize, m: usize) -> String {
    if r >= 10 || m >= 10 {
        format!("{prefix}{r},{m}")
    } else {
        format!("{prefix}{r}{m}")
    }
}

pub fn block_decompose(p: &Presentation, spec: &BlockSpec) -> Result<BlockDecomposition> {
    spec.validate()?;
    let layout = p
        .layout(0)
        .ok_or_else(|| Error::LayoutMismatch("presentation has no factor 0".into()))?;
    if layout.dimension() != spec.dimension() {
        return Err(Error::LayoutMismatch(format!(
            "fundamental matrix has size {} but the block spec describes {}",
            layout.dimension(),
            spec.dimension()
        )));
    }
    let mut regions: Vec<(String, Vec<usize>, Vec<usize>)> = Vec::new();
    let r = spec.blocks.len();
    match spec.kind {
        BlockKind::Unitary => {
            for a in 0..r {
                for b in 0..r {
                    regions.push((pair_name('A', a + 1, b + 1), spec.eigen_indices(a), spec.eigen_indices(b)));
                }
            }
        }
        BlockKind::OneBlock => {
            regions.push(("A".into(), spec.first_indices(0), spec.first_indices(0)));
            regions.push(("C".into(), spec.second_indices(0), spec.first_indices(0)));
        }
        BlockKind::CaseI | BlockKind::CaseII => {
            for a in 0..r {
                for b in 0..r {
                    regions.push((pair_name('A', a + 1, b + 1), spec.first_indices(a), spec.first_indices(b)));
                }
            }
            for a in 0..r {
                for b in 0..r {
                    regions.push((pair_name('C', a + 1, b + 1), spec.second_indices(a), spec.first_indices(b)));
                }
            }
            if spec.trailing > 0 {
                let t = spec.trailing_indices();
                for b in 0..r {
                    regions.push((format!("X{}", b + 1), t.clone(), spec.first_indices(b)));
                }
                for b in 0..r {
                    regions.push((format!("R{}", b + 1), spec.first_indices(b), t.clone()));
                }
                regions.push(("Z".into(), t.clone(), t));
            }
        }
    }
    let blocks = regions
        .into_iter()
        .map(|(name, rows, cols)| NamedBlock {
            matrix: layout.matrix.select(&rows, &cols),
            name,
            rows,
            cols,
        })
        .collect();
    Ok(BlockDecomposition { blocks })
}
