use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed};

use super::spec::{standard_form_matrix, BlockKind, BlockSpec};
use super::{FactorLayout, Presentation, Relation};
use crate::algebra::{AlgElement, AlgMatrix, GeneratorId, ScalarMatrix};
use crate::error::{Error, Result};

/// The `N x N` matrix of generators `u_{jk}` in factor 0.
pub(crate) fn generator_matrix(n: usize) -> AlgMatrix {
    AlgMatrix::from_fn(n, n, |j, k| AlgElement::gen(GeneratorId::u(j as u16 + 1, k as u16 + 1)))
}

fn push_entries(out: &mut Vec<Relation>, m: &AlgMatrix, tag: &str) {
    for (j, k, e) in m.entries() {
        out.push(Relation::new(e.clone(), format!("{tag}[{},{}]", j + 1, k + 1)));
        out.push(Relation::new(e.adjoint(), format!("{tag}[{},{}]*", j + 1, k + 1)));
    }
}

/// Raw (U1) and (U2) relation entries for `U` twisted by `Q`, both orientations,
/// before any deduplication.
pub(crate) fn unitary_relation_families(u: &AlgMatrix, q: &ScalarMatrix) -> Result<(Vec<Relation>, Vec<Relation>)> {
    let n = u.rows();
    let id = AlgMatrix::identity(n);
    let qm = AlgMatrix::scalar_embed(q);
    let qinv = AlgMatrix::scalar_embed(&q.inverse()?);
    let ubar = u.bar();

    let mut u1 = Vec::new();
    push_entries(&mut u1, &u.star().mul(u)?.sub(&id)?, "U1 U*U");
    push_entries(&mut u1, &u.mul(&u.star())?.sub(&id)?, "U1 UU*");

    let mut u2 = Vec::new();
    let left = u.transpose().mul(&qm)?.mul(&ubar)?.mul(&qinv)?;
    push_entries(&mut u2, &left.sub(&id)?, "U2 UtQUbarQ^-1");
    let right = qm.mul(&ubar)?.mul(&qinv)?.mul(&u.transpose())?;
    push_entries(&mut u2, &right.sub(&id)?, "U2 QUbarQ^-1Ut");
    Ok((u1, u2))
}

/// `Pol(U_Q^+)` for a positive diagonal `Q`.
pub fn build_universal_unitary(q: &ScalarMatrix) -> Result<Presentation> {
    if q.rows() != q.cols() || !q.is_diagonal() {
        return Err(Error::BadQ(format!("{q} is not diagonal")));
    }
    if let Some(d) = q.diagonal_entries().iter().find(|d| !d.is_positive()) {
        return Err(Error::BadQ(format!("diagonal entry {d} is not positive")));
    }
    let n = q.rows();
    let u = generator_matrix(n);
    let (mut rels, u2) = unitary_relation_families(&u, q)?;
    rels.extend(u2);
    let gens = (1..=n as u16).flat_map(|j| (1..=n as u16).map(move |k| GeneratorId::u(j, k)));
    let layout = FactorLayout {
        factor: 0,
        matrix: u,
        q: q.clone(),
        f: None,
    };
    Ok(Presentation::new(format!("Pol(U_Q^+), N={n}"), gens, rels, vec![layout]))
}

/// `Pol(O_F^+)`: `Pol(U_{F^*F}^+)` plus the entries of `U - F Ubar F^{-1}`.
pub fn build_universal_orthogonal(f: &ScalarMatrix) -> Result<Presentation> {
    if f.rows() != f.cols() {
        return Err(Error::Shape {
            op: "build_universal_orthogonal",
            left: f.shape(),
            right: f.shape(),
        });
    }
    let finv = f.inverse()?;
    let ffbar = f.mul(&f.conj())?;
    match ffbar.as_scalar_identity() {
        Some(c) if c.abs().is_one() => {}
        _ => return Err(Error::NotOrthogonal(ffbar.to_string())),
    }
    let n = f.rows();
    let q = f.adjoint().mul(f)?;
    let u = generator_matrix(n);
    let (mut rels, u2) = unitary_relation_families(&u, &q)?;
    rels.extend(u2);
    let twisted = AlgMatrix::scalar_embed(f).mul(&u.bar())?.mul(&AlgMatrix::scalar_embed(&finv))?;
    push_entries(&mut rels, &u.sub(&twisted)?, "H");
    let gens = (1..=n as u16).flat_map(|j| (1..=n as u16).map(move |k| GeneratorId::u(j, k)));
    let layout = FactorLayout {
        factor: 0,
        matrix: u,
        q,
        f: Some(f.clone()),
    };
    Ok(Presentation::new(format!("Pol(O_F^+), N={n}"), gens, rels, vec![layout]))
}

/// The presentation a block spec describes: `Pol(U_Q^+)` or `Pol(O_F^+)` of the standard form.
pub fn presentation_for(spec: &BlockSpec) -> Result<Presentation> {
    let m = standard_form_matrix(spec)?;
    let p = match spec.kind {
        BlockKind::Unitary => build_universal_unitary(&m)?,
        _ => build_universal_orthogonal(&m)?,
    };
    Ok(p.with_spec(spec.clone()))
}

/// Free product: generators of each part are moved to fresh factor tags,
/// relations are unioned, and no cross relations are added.
pub fn free_product(parts: &[Presentation]) -> Presentation {
    let mut next: u16 = 0;
    let mut gens = Vec::new();
    let mut rels = Vec::new();
    let mut layouts = Vec::new();
    let mut labels = Vec::new();
    for part in parts {
        let tags: BTreeSet<u16> = part
            .generators()
            .iter()
            .map(|g| g.factor)
            .chain(part.layouts().iter().map(|l| l.factor))
            .collect();
        let retag: BTreeMap<u16, u16> = tags
            .into_iter()
            .map(|t| {
                let new = next;
                next += 1;
                (t, new)
            })
            .collect();
        let map: BTreeMap<GeneratorId, GeneratorId> = part.generators().iter().map(|g| (*g, g.in_factor(retag[&g.factor]))).collect();
        let moved = part.rename(&map);
        gens.extend_from_slice(moved.generators());
        rels.extend(moved.relations().iter().cloned());
        layouts.extend(moved.layouts().iter().map(|l| FactorLayout {
            factor: retag[&l.factor],
            ..l.clone()
        }));
        labels.push(part.label.clone());
    }
    let mut p = Presentation::new(labels.join(" * "), gens, rels, layouts);
    if parts.iter().all(|q| q.is_reduced() || q.layouts().iter().all(|l| l.f.is_none())) {
        p.mark_reduced();
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, Word};
    use crate::presentation::spec::{symplectic, Block};

    fn u(j: u16, k: u16) -> AlgElement {
        AlgElement::gen(GeneratorId::u(j, k))
    }
    fn us(j: u16, k: u16) -> AlgElement {
        AlgElement::gen_star(GeneratorId::u(j, k))
    }
    fn has_relation(p: &Presentation, r: &AlgElement) -> bool {
        let key = crate::presentation::canonical_relation(r);
        p.relation_elements().any(|e| *e == key)
    }

    #[test]
    fn u1_plus_is_group_algebra_of_z() {
        let p = build_universal_unitary(&ScalarMatrix::identity(1)).unwrap();
        assert_eq!(p.generators(), &[GeneratorId::u(1, 1)]);
        assert_eq!(p.relations().len(), 2);
        assert!(has_relation(&p, &(&(&us(1, 1) * &u(1, 1)) - &AlgElement::one())));
        assert!(has_relation(&p, &(&(&u(1, 1) * &us(1, 1)) - &AlgElement::one())));
    }

    #[test]
    fn raw_family_counts_for_u2() {
        let (u1, u2) = unitary_relation_families(&generator_matrix(2), &ScalarMatrix::identity(2)).unwrap();
        assert_eq!(u1.len(), 16);
        assert_eq!(u2.len(), 16);
        let p = build_universal_unitary(&ScalarMatrix::identity(2)).unwrap();
        assert_eq!(p.generators().len(), 4);
        // With Q = I the (U2) entries say that Ubar is unitary: Ubar Ubar* = I at (1,1).
        let ubar_row = &(&us(1, 1) * &u(1, 1)) + &(&us(1, 2) * &u(1, 2));
        assert!(has_relation(&p, &(&ubar_row - &AlgElement::one())));
    }

    // (U^t Q Ubar Q^{-1})_{11} = sum_l u_{l1} Q_l u*_{l1} / Q_1
    //   = u11 u11* + (4 / (1/4)) u21 u21*.
    #[test]
    fn twisted_entry_ratio() {
        let q = ScalarMatrix::diagonal(&[rat(1, 4), int(4)]);
        let (_, u2) = unitary_relation_families(&generator_matrix(2), &q).unwrap();
        let entry = &u2[0].element;
        let a = Word::from_letters(vec![GeneratorId::u(1, 1).plain(), GeneratorId::u(1, 1).star()]);
        let b = Word::from_letters(vec![GeneratorId::u(2, 1).plain(), GeneratorId::u(2, 1).star()]);
        assert_eq!(entry.coeff(&b) / entry.coeff(&a), int(16));
    }

    #[test]
    fn unitary_rejects_bad_q() {
        let nd = ScalarMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(0), int(1)]]).unwrap();
        assert!(matches!(build_universal_unitary(&nd), Err(Error::BadQ(_))));
        let neg = ScalarMatrix::diagonal(&[int(1), int(-1)]);
        assert!(matches!(build_universal_unitary(&neg), Err(Error::BadQ(_))));
    }

    #[test]
    fn o1_plus_is_group_algebra_of_z2() {
        let p = build_universal_orthogonal(&ScalarMatrix::identity(1)).unwrap();
        assert!(has_relation(&p, &(&u(1, 1) - &us(1, 1))));
        assert!(has_relation(&p, &(&(&u(1, 1) * &us(1, 1)) - &AlgElement::one())));
    }

    #[test]
    fn symplectic_reality_relations() {
        let p = build_universal_orthogonal(&symplectic(1)).unwrap();
        // J Ubar J^{-1} = [[u22*, -u21*], [-u12*, u11*]]
        assert!(has_relation(&p, &(&u(1, 1) - &us(2, 2))));
        assert!(has_relation(&p, &(&u(1, 2) + &us(2, 1))));
    }

    #[test]
    fn one_block_reality_relations() {
        let spec = BlockSpec::one_block(rat(1, 2), 1, 1);
        let p = presentation_for(&spec).unwrap();
        assert!(has_relation(&p, &(&u(1, 2) - &us(2, 1).scale(&rat(1, 4)))));
        assert!(has_relation(&p, &(&u(2, 2) - &us(1, 1))));
    }

    #[test]
    fn orthogonal_rejects_non_real_f() {
        let f = ScalarMatrix::diagonal(&[int(1), int(2)]);
        assert!(matches!(build_universal_orthogonal(&f), Err(Error::NotOrthogonal(_))));
        assert!(matches!(
            build_universal_orthogonal(&ScalarMatrix::zeros(2, 2)),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn free_product_counts_add_up() {
        let u1 = build_universal_unitary(&ScalarMatrix::identity(1)).unwrap();
        let u2 = build_universal_unitary(&ScalarMatrix::identity(2)).unwrap();
        let o1 = build_universal_orthogonal(&ScalarMatrix::identity(1)).unwrap();
        let single = free_product(std::slice::from_ref(&u2));
        assert_eq!(single, u2);
        let fp = free_product(&[u1.clone(), u2.clone(), o1.clone()]);
        assert_eq!(fp.generators().len(), 6);
        assert_eq!(
            fp.relations().len(),
            u1.relations().len() + u2.relations().len() + o1.relations().len()
        );
        let factors: BTreeSet<u16> = fp.generators().iter().map(|g| g.factor).collect();
        assert_eq!(factors, [0, 1, 2].into_iter().collect());
        assert_eq!(fp.layouts().len(), 3);
    }

    #[test]
    fn case_one_target_shape() {
        let spec = BlockSpec::case_one(vec![Block::new(rat(1, 3), 1), Block::new(rat(1, 2), 2)], 1);
        let p = presentation_for(&spec).unwrap();
        assert_eq!(p.generators().len(), 49);
    }
}
