use std::collections::BTreeMap;

use cqg_kac::algebra::{int, rat, AlgElement, AlgMatrix, GeneratorId, ScalarMatrix, Word};

fn u(j: u16, k: u16) -> AlgElement {
    AlgElement::gen(GeneratorId::u(j, k))
}

fn us(j: u16, k: u16) -> AlgElement {
    AlgElement::gen_star(GeneratorId::u(j, k))
}

#[test]
fn word_adjoint_reverses_and_toggles() {
    assert_eq!(Word::unit().adjoint(), Word::unit());
    let g = |j, k| GeneratorId::u(j, k);
    assert_eq!(Word::letter(g(1, 1).plain()).adjoint(), Word::letter(g(1, 1).star()));
    let w = Word::from_letters(vec![g(1, 1).plain(), g(1, 2).star()]);
    assert_eq!(w.adjoint(), Word::from_letters(vec![g(1, 2).plain(), g(1, 1).star()]));
}

#[test]
fn element_products() {
    assert_eq!(
        &u(1, 1) * &us(1, 1),
        AlgElement::from_terms([(
            Word::from_letters(vec![GeneratorId::u(1, 1).plain(), GeneratorId::u(1, 1).star()]),
            int(1)
        )])
    );
    let two = AlgElement::scalar(int(2));
    assert_eq!(&two * &u(1, 2).scale(&rat(3, 2)), u(1, 2).scale(&int(3)));
    assert_eq!(&(&u(1, 1) + &u(1, 2)) * &u(2, 1), &(&u(1, 1) * &u(2, 1)) + &(&u(1, 2) * &u(2, 1)));
}

#[test]
fn element_adjoint() {
    assert_eq!((&u(1, 1) * &u(1, 2)).adjoint(), &us(1, 2) * &us(1, 1));
    assert_eq!(AlgElement::zero().adjoint(), AlgElement::zero());
    let (a, b) = (&u(1, 1) + &us(2, 1).scale(&rat(-1, 3)), &u(1, 2) * &u(2, 2));
    assert_eq!((&a + &b).adjoint(), &a.adjoint() + &b.adjoint());
}

#[test]
fn substitution_kills_generators_and_their_adjoints() {
    let sigma: BTreeMap<GeneratorId, AlgElement> = [(GeneratorId::u(2, 1), AlgElement::zero())].into_iter().collect();
    assert!(u(2, 1).substitute(&sigma).is_zero());
    assert!((&us(2, 1) * &u(2, 1)).substitute(&sigma).is_zero());
    assert_eq!((&(&u(1, 1) * &u(2, 1)) + &u(1, 1)).substitute(&sigma), u(1, 1));
}

fn generic(a: (u16, u16), b: (u16, u16), c: (u16, u16), d: (u16, u16)) -> AlgMatrix {
    let e = [a, b, c, d];
    AlgMatrix::from_fn(2, 2, |i, j| {
        let (r, s) = e[2 * i + j];
        u(r, s)
    })
}

#[test]
fn matrix_operations() {
    let m = generic((1, 1), (1, 2), (2, 1), (2, 2));
    assert_eq!(AlgMatrix::scalar_embed(&ScalarMatrix::identity(2)).mul(&m).unwrap(), m);
    let star = m.star();
    assert_eq!(star.get(0, 1), &us(2, 1));
    assert_eq!(star.get(1, 0), &us(1, 2));
    assert_eq!(star.get(1, 1), &us(2, 2));
}

// F Ubar F^{-1} for F = J_1, expanded by hand: [[d*, -c*], [-b*, a*]].
#[test]
fn symplectic_conjugate_of_bar() {
    let j1 = ScalarMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(-1), int(0)]]).unwrap();
    let m = generic((1, 1), (1, 2), (2, 1), (2, 2));
    let f = AlgMatrix::scalar_embed(&j1);
    let finv = AlgMatrix::scalar_embed(&j1.inverse().unwrap());
    let r = f.mul(&m.bar()).unwrap().mul(&finv).unwrap();
    let neg = rat(-1, 1);
    assert_eq!(r.get(0, 0), &us(2, 2));
    assert_eq!(r.get(0, 1), &us(2, 1).scale(&neg));
    assert_eq!(r.get(1, 0), &us(1, 2).scale(&neg));
    assert_eq!(r.get(1, 1), &us(1, 1));
}

#[test]
fn singular_scalar_matrix_has_no_inverse() {
    let s = ScalarMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]).unwrap();
    assert!(s.inverse().is_err());
}
