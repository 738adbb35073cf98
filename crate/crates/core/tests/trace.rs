use cqg_kac::algebra::{int, rat, AlgElement, GeneratorId, ScalarMatrix, Word};
use cqg_kac::presentation::{build_universal_unitary, presentation_for, reduce_orthogonal, Block, BlockSpec, Presentation};
use cqg_kac::trace::{
    cyclic_canonical, derive_equations, kac_fixpoint, maximize, square_symbols, trace_of, KacOptions, LpOutcome, Symbol, TraceSystem,
};

fn g(j: u16, k: u16) -> GeneratorId {
    GeneratorId::u(j, k)
}

fn u(j: u16, k: u16) -> AlgElement {
    AlgElement::gen(g(j, k))
}

fn us(j: u16, k: u16) -> AlgElement {
    AlgElement::gen_star(g(j, k))
}

fn word(letters: &[(u16, u16, bool)]) -> Word {
    Word::from_letters(
        letters
            .iter()
            .map(|&(j, k, star)| if star { g(j, k).star() } else { g(j, k).plain() })
            .collect(),
    )
}

fn square(j: u16, k: u16) -> Symbol {
    Symbol::Re(cyclic_canonical(&word(&[(j, k, true), (j, k, false)])).class)
}

fn forced(p: &Presentation) -> (Vec<GeneratorId>, usize) {
    let r = kac_fixpoint(p, &KacOptions::default()).unwrap();
    assert!(r.verify_all());
    assert!(r.undetermined.is_empty(), "open: {:?}", r.undetermined);
    let mut f = r.forced_generators();
    f.sort();
    (f, r.iterations)
}

#[test]
fn cyclic_classes() {
    let ab = word(&[(1, 1, false), (1, 2, false)]);
    let ba = word(&[(1, 2, false), (1, 1, false)]);
    assert_eq!(cyclic_canonical(&ab), cyclic_canonical(&ba));
    let sq = cyclic_canonical(&word(&[(1, 1, true), (1, 1, false)]));
    assert!(sq.self_adjoint);
    assert_eq!(sq, cyclic_canonical(&word(&[(1, 1, false), (1, 1, true)])));
    // A word and its adjoint share a class with opposite signs.
    let fwd = cyclic_canonical(&ab);
    let back = cyclic_canonical(&ab.adjoint());
    assert_eq!(fwd.class, back.class);
    assert_eq!(fwd.sign, -back.sign);
    assert!(!fwd.self_adjoint);
}

#[test]
fn trace_of_relations() {
    let r = &(&us(1, 1) * &u(1, 1)) - &AlgElement::one();
    let (re, im) = trace_of(&r);
    assert_eq!(re.constant, int(-1));
    assert_eq!(re.coeff(&square(1, 1)), int(1));
    assert!(im.is_zero());

    // tau(ab) - tau(ba) = 0 identically; tau(ab) + tau((ab)*) is twice the real part.
    let ab = &u(1, 1) * &u(1, 2);
    let ba = &u(1, 2) * &u(1, 1);
    let (re, im) = trace_of(&(&ab - &ba));
    assert!(re.is_zero() && im.is_zero());
    let (re, im) = trace_of(&(&ab + &ab.adjoint()));
    assert_eq!(re.terms.values().cloned().collect::<Vec<_>>(), vec![int(2)]);
    assert!(im.is_zero());
}

// With a = u11, c = u21 and q = 1/2, tracing a*a + c*c = 1 and
// aa* + q^4 cc* = 1 and subtracting leaves (1 - q^4) tau(c*c) = 15/16 tau(c*c).
#[test]
fn one_block_difference() {
    let q4 = rat(1, 16);
    let first = &(&(&us(1, 1) * &u(1, 1)) + &(&us(2, 1) * &u(2, 1))) - &AlgElement::one();
    let second = &(&(&u(1, 1) * &us(1, 1)) + &(&u(2, 1) * &us(2, 1)).scale(&q4)) - &AlgElement::one();
    let (re, im) = trace_of(&(&first - &second));
    assert!(im.is_zero());
    assert_eq!(re.constant, int(0));
    assert_eq!(re.terms.len(), 1);
    assert_eq!(re.coeff(&square(2, 1)), rat(15, 16));

    let spec = BlockSpec::one_block(rat(1, 2), 1, 1);
    let p = reduce_orthogonal(&presentation_for(&spec).unwrap()).unwrap();
    let sys = TraceSystem::prepare(derive_equations(&p, 0), square_symbols(&p));
    let cert = sys.forced_zero(&g(2, 1)).unwrap().expect("c is forced");
    assert!(cert.verify(sys.equations()));
    assert_eq!(cert.combination.coeff(&cert.symbol), int(1));
    assert!(sys.forced_zero(&g(1, 1)).unwrap().is_none());
}

#[test]
fn free_unitary_has_no_certificates() {
    let p = build_universal_unitary(&ScalarMatrix::identity(2)).unwrap();
    let sys = TraceSystem::prepare(derive_equations(&p, 0), square_symbols(&p));
    for gen in p.generators() {
        assert!(sys.forced_zero(gen).unwrap().is_none(), "{gen}");
    }
    assert_eq!(forced(&p), (vec![], 1));
    let p = build_universal_unitary(&ScalarMatrix::identity(3)).unwrap();
    assert_eq!(forced(&p), (vec![], 1));
}

#[test]
fn case_two_first_off_diagonal_block() {
    let spec = BlockSpec::case_two(vec![Block::new(rat(1, 2), 1), Block::new(int(1), 1)]);
    let p = presentation_for(&spec).unwrap();
    let r = kac_fixpoint(&p, &KacOptions::default()).unwrap();
    // A12 sits at row 1, column 3 of the reduced layout.
    let f = r.forced.iter().find(|f| f.generator == g(1, 3)).expect("A12 is forced");
    assert!(f.certificate.verify(&r.equation_sets[f.round]));
    assert!(f.certificate.symbol.is_square());
    assert_eq!(forced(&p), (vec![g(1, 3), g(2, 1), g(2, 3), g(3, 1), g(4, 1)], 2));

    let spec = BlockSpec::case_two(vec![Block::new(rat(1, 3), 1), Block::new(rat(1, 2), 1)]);
    let (f, _) = forced(&presentation_for(&spec).unwrap());
    assert!(f.contains(&g(4, 3)));
}

#[test]
fn kac_fixpoints() {
    let spec = BlockSpec::case_one(vec![Block::new(rat(1, 3), 1), Block::new(rat(1, 2), 2)], 1);
    let (f, rounds) = forced(&presentation_for(&spec).unwrap());
    assert_eq!((f.len(), rounds), (19, 2));

    let spec = BlockSpec::one_block(rat(1, 2), 2, 1);
    assert_eq!(
        forced(&presentation_for(&spec).unwrap()),
        (vec![g(3, 1), g(3, 2), g(4, 1), g(4, 2)], 2)
    );

    let p = build_universal_unitary(&ScalarMatrix::diagonal(&[rat(1, 4), int(1), int(1)])).unwrap();
    assert_eq!(forced(&p).0, vec![g(1, 2), g(1, 3), g(2, 1), g(3, 1)]);
}

#[test]
fn standard_forms_never_leave_squares_unbounded() {
    let specs = [
        BlockSpec::one_block(rat(1, 3), 1, -1),
        BlockSpec::one_block(rat(2, 3), 2, 1),
        BlockSpec::case_one(vec![Block::new(rat(1, 2), 1)], 1),
        BlockSpec::case_one(vec![Block::new(rat(1, 2), 1)], 2),
        BlockSpec::case_two(vec![Block::new(int(1), 2)]),
        BlockSpec::case_two(vec![Block::new(rat(1, 3), 1), Block::new(int(1), 1)]),
        BlockSpec::unitary(vec![Block::new(rat(1, 9), 1), Block::new(int(1), 1)]),
    ];
    for spec in specs {
        let p = presentation_for(&spec).unwrap();
        let r = kac_fixpoint(&p, &KacOptions::default()).unwrap();
        assert!(r.undetermined.is_empty(), "{spec:?}");
        assert!(r.verify_all());
    }
}

#[test]
fn small_linear_programs() {
    // max x + y with x + y + s = 1.
    let a = vec![vec![int(1), int(1), int(1)]];
    let b = vec![int(1)];
    let c = vec![int(1), int(1), int(0)];
    match maximize(&a, &b, &c) {
        LpOutcome::Optimal { value, dual } => {
            assert_eq!(value, int(1));
            assert_eq!(dual, vec![int(1)]);
        }
        other => panic!("{other:?}"),
    }
    // x - y = 0 leaves x unbounded.
    let a = vec![vec![int(1), int(-1)]];
    assert_eq!(maximize(&a, &[int(0)], &[int(1), int(0)]), LpOutcome::Unbounded);
    // x = -1 has no nonnegative solution.
    let a = vec![vec![int(1)]];
    assert_eq!(maximize(&a, &[int(-1)], &[int(1)]), LpOutcome::Infeasible);
}
