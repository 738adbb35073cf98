use cqg_kac::algebra::{int, rat, AlgElement, GeneratorId, ScalarMatrix};
use cqg_kac::hopf::{
    antipode, central_morphism_check, coproduct, counit, gamma, hopf_axiom_check, hopf_kernel_membership, is_central, Axiom, CheckStatus,
    MorphismSpec, TensorElement,
};
use cqg_kac::presentation::{build_universal_orthogonal, build_universal_unitary, symplectic, Presentation, Relation};

fn g(j: u16, k: u16) -> GeneratorId {
    GeneratorId::u(j, k)
}

fn u(j: u16, k: u16) -> AlgElement {
    AlgElement::gen(g(j, k))
}

fn us(j: u16, k: u16) -> AlgElement {
    AlgElement::gen_star(g(j, k))
}

fn open_checks(p: &Presentation, bound: usize) -> Vec<String> {
    let r = hopf_axiom_check(p, bound).unwrap();
    r.checks
        .iter()
        .filter(|c| c.status != CheckStatus::Pass)
        .map(|c| format!("{} {} {}", c.axiom, c.subject, c.detail))
        .collect()
}

#[test]
fn structure_maps_on_generators() {
    let p = build_universal_unitary(&ScalarMatrix::identity(2)).unwrap();
    let mut want = TensorElement::elementary(&[&u(1, 1), &u(1, 2)]);
    want.add_scaled(&TensorElement::elementary(&[&u(1, 2), &u(2, 2)]), &int(1));
    assert_eq!(coproduct(&p, &u(1, 2)).unwrap(), want);
    assert_eq!(coproduct(&p, &us(1, 2)).unwrap(), want.adjoint());
    assert_eq!(counit(&p, &u(1, 1)).unwrap(), int(1));
    assert_eq!(counit(&p, &u(1, 2)).unwrap(), int(0));
    assert_eq!(antipode(&p, &u(1, 2)).unwrap(), us(2, 1));
    assert_eq!(antipode(&p, &us(1, 2)).unwrap(), u(2, 1));
    // Anti-multiplicative and multiplicative.
    let x = &u(1, 1) * &u(1, 2);
    assert_eq!(antipode(&p, &x).unwrap(), &us(2, 1) * &us(1, 1));
    assert_eq!(counit(&p, &(&u(1, 1) * &u(2, 2))).unwrap(), int(1));
}

// S(u*_jk) = Q^{-1}_jj u_kj Q_kk for diagonal Q.
#[test]
fn twisted_antipode() {
    let q = [rat(1, 4), int(4)];
    let p = build_universal_unitary(&ScalarMatrix::diagonal(&q)).unwrap();
    for j in 1..=2u16 {
        for k in 1..=2u16 {
            let c = q[k as usize - 1].clone() / q[j as usize - 1].clone();
            assert_eq!(antipode(&p, &us(j, k)).unwrap(), u(k, j).scale(&c), "S(u{j}{k}*)");
        }
    }
}

#[test]
fn free_unitary_axioms() {
    let p = build_universal_unitary(&ScalarMatrix::identity(3)).unwrap();
    assert!(open_checks(&p, 2).is_empty());
    let r = hopf_axiom_check(&p, 2).unwrap();
    assert!(r
        .checks
        .iter()
        .filter(|c| c.axiom == Axiom::Coassociativity)
        .all(|c| c.detail == "exact"));
    for axiom in [Axiom::CounitLeft, Axiom::CounitRight, Axiom::AntipodeLeft, Axiom::AntipodeRight] {
        assert!(r.axiom_passes(axiom), "{axiom}");
    }
}

#[test]
fn free_orthogonal_axioms() {
    for f in [ScalarMatrix::identity(4), symplectic(2)] {
        let p = build_universal_orthogonal(&f).unwrap();
        assert!(open_checks(&p, 2).is_empty(), "{}", p.label);
    }
    let p = build_universal_orthogonal(&symplectic(1)).unwrap();
    assert!(open_checks(&p, 4).is_empty());
}

#[test]
fn broken_counit_fails() {
    let p = build_universal_unitary(&ScalarMatrix::identity(1)).unwrap();
    let mut rels = p.relations().to_vec();
    rels.push(Relation::new(&u(1, 1) - &AlgElement::scalar(int(2)), "u = 2"));
    let bad = Presentation::new("bad", p.generators().to_vec(), rels, p.layouts().to_vec());
    let r = hopf_axiom_check(&bad, 2).unwrap();
    assert!(r.any_fail());
    let failed: Vec<Axiom> = r.checks.iter().filter(|c| c.status == CheckStatus::Fail).map(|c| c.axiom).collect();
    assert_eq!(failed, vec![Axiom::CounitRespectsRelations]);
}

#[test]
fn symplectic_central_morphism() {
    let p = build_universal_orthogonal(&symplectic(1)).unwrap();
    let m = gamma(&p).unwrap();
    assert!(m.respects_relations(&p));
    assert!(central_morphism_check(&p).unwrap());

    let mut images = m.images.clone();
    images.insert(g(2, 2), AlgElement::one());
    let perturbed = MorphismSpec {
        target: m.target.clone(),
        images,
    };
    assert!(!is_central(&p, &perturbed).unwrap());

    assert!(hopf_kernel_membership(&p, &(&u(1, 1) * &u(1, 1))).unwrap());
    assert!(hopf_kernel_membership(&p, &AlgElement::one()).unwrap());
    assert!(!hopf_kernel_membership(&p, &u(1, 1)).unwrap());

    let p = build_universal_orthogonal(&symplectic(2)).unwrap();
    assert!(central_morphism_check(&p).unwrap());
    let p = build_universal_orthogonal(&ScalarMatrix::identity(2)).unwrap();
    assert!(gamma(&p).is_err());
}
