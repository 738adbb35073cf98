use std::collections::BTreeMap;

use crate::algebra::{GeneratorId, ScalarMatrix};
use crate::error::Result;
use crate::presentation::{
    build_universal_orthogonal, build_universal_unitary, free_product, reduce_orthogonal, symplectic, BlockKind, BlockSpec, Presentation,
};

/// The presentation a Kac quotient should be isomorphic to, with the
/// generator renaming that realizes the isomorphism.
#[derive(Clone, Debug)]
pub struct KacTarget {
    pub presentation: Presentation,
    /// Surviving generator of the derived quotient -> target generator.
    pub renaming: BTreeMap<GeneratorId, GeneratorId>,
    pub label: String,
}

pub(crate) fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap_or(0)).unwrap_or(c))
        .collect()
}

fn pos(row: usize, col: usize) -> GeneratorId {
    GeneratorId::u(row as u16 + 1, col as u16 + 1)
}

/// Free product of one `Pol(U_M^+)` per diagonal block (q < 1, or every
/// eigenvalue block for the unitary kind), followed by the reduced orthogonal
/// tail: `O_T^+` for a trailing identity of size T (case I) or `O_{J_M}^+` for
/// a symplectic tail of size 2M (case II).
pub fn expected_kac_target(spec: &BlockSpec) -> Result<KacTarget> {
    spec.validate()?;
    let mut parts = Vec::new();
    let mut labels = Vec::new();
    let mut renaming = BTreeMap::new();
    let r = spec.blocks.len();
    let unitary_blocks = if spec.has_symplectic_tail() { r - 1 } else { r };
    for nu in 0..unitary_blocks {
        let m = spec.blocks[nu].m;
        parts.push(build_universal_unitary(&ScalarMatrix::identity(m))?);
        labels.push(format!("U{}", subscript(m)));
        let idx = match spec.kind {
            BlockKind::Unitary => spec.eigen_indices(nu),
            _ => spec.first_indices(nu),
        };
        let factor = parts.len() as u16 - 1;
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                renaming.insert(pos(i, j), pos(a, b).in_factor(factor));
            }
        }
    }
    if spec.kind == BlockKind::CaseI && spec.trailing > 0 {
        let t = spec.trailing;
        parts.push(reduce_orthogonal(&build_universal_orthogonal(&ScalarMatrix::identity(t))?)?);
        labels.push(format!("O{}", subscript(t)));
        let factor = parts.len() as u16 - 1;
        let idx = spec.trailing_indices();
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                renaming.insert(pos(i, j), pos(a, b).in_factor(factor));
            }
        }
    }
    if spec.has_symplectic_tail() {
        let nu = r - 1;
        let m = spec.blocks[nu].m;
        parts.push(reduce_orthogonal(&build_universal_orthogonal(&symplectic(m))?)?);
        labels.push(format!("O_{{J{}}}", subscript(m)));
        let factor = parts.len() as u16 - 1;
        let first = spec.first_indices(nu);
        let second = spec.second_indices(nu);
        for (b, &j) in first.iter().enumerate() {
            for (a, &i) in first.iter().enumerate() {
                renaming.insert(pos(i, j), pos(a, b).in_factor(factor));
            }
            for (a, &i) in second.iter().enumerate() {
                renaming.insert(pos(i, j), pos(m + a, b).in_factor(factor));
            }
        }
    }
    let label = if labels.len() == 1 {
        format!("Pol({}^+)", labels[0])
    } else {
        labels.join("⋆")
    };
    let mut presentation = free_product(&parts);
    presentation.label = label.clone();
    Ok(KacTarget {
        presentation,
        renaming,
        label,
    })
}
