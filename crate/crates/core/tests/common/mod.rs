//! Strategies and property bodies shared by the property and acceptance suites.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use cqg_kac::algebra::{rat, AlgElement, GeneratorId, Letter, Rational, ScalarMatrix, Word};
use cqg_kac::presentation::{
    build_universal_orthogonal, build_universal_unitary, presentation_for, reduce_orthogonal, Block, BlockSpec, Presentation,
};
use cqg_kac::quotient::{quotient_by_zero, BoundedIdeal};
use cqg_kac::trace::{kac_fixpoint, trace_of, Equation, KacOptions, TraceExpr};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

pub fn arb_letter() -> impl Strategy<Value = Letter> {
    (1u16..=2, 1u16..=2, any::<bool>()).prop_map(|(j, k, star)| {
        let g = GeneratorId::u(j, k);
        if star {
            g.star()
        } else {
            g.plain()
        }
    })
}

pub fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(arb_letter(), 0..=max_len).prop_map(Word::from_letters)
}

pub fn arb_element() -> impl Strategy<Value = AlgElement> {
    prop::collection::vec((arb_word(4), arb_rational()), 0..5).prop_map(AlgElement::from_terms)
}

/// Small block specifications of every kind, with random rational `q`.
pub fn arb_small_spec() -> impl Strategy<Value = BlockSpec> {
    let q = (1i64..=5, 2i64..=7).prop_filter_map("0 < q < 1", |(p, d)| (p < d).then(|| rat(p, d)));
    prop_oneof![
        (q.clone(), prop::bool::ANY).prop_map(|(q, e)| BlockSpec::one_block(q, 1, if e { 1 } else { -1 })),
        (q.clone(), q.clone())
            .prop_filter("distinct eigenvalues", |(a, b)| a != b)
            .prop_map(|(a, b)| {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                BlockSpec::unitary(vec![Block::new(lo, 1), Block::new(hi, 1)])
            }),
        q.clone()
            .prop_map(|a| BlockSpec::case_two(vec![Block::new(a, 1), Block::new(rat(1, 1), 1)])),
        q.prop_map(|a| BlockSpec::case_one(vec![Block::new(a, 1)], 1)),
    ]
}

/// A few fixed presentations for structural properties.
pub fn fixture_presentations() -> &'static [Presentation] {
    static CELL: OnceLock<Vec<Presentation>> = OnceLock::new();
    CELL.get_or_init(|| {
        vec![
            build_universal_unitary(&ScalarMatrix::identity(2)).unwrap(),
            build_universal_unitary(&ScalarMatrix::diagonal(&[rat(1, 4), rat(4, 1)])).unwrap(),
            reduce_orthogonal(&presentation_for(&BlockSpec::one_block(rat(1, 2), 2, -1)).unwrap()).unwrap(),
            reduce_orthogonal(&presentation_for(&BlockSpec::case_two(vec![Block::new(rat(1, 2), 1), Block::new(rat(1, 1), 1)])).unwrap())
                .unwrap(),
        ]
    })
}

/// Relations, letters and the bounded ideals built from them.
pub type Ladder = (Vec<AlgElement>, Vec<Letter>, Vec<BoundedIdeal>);

/// Bounded ideals `I_1 ... I_4` of `Pol(U_1^+)` and `Pol(O_1^+)`.
pub fn fixture_ladders() -> &'static [Ladder] {
    static CELL: OnceLock<Vec<Ladder>> = OnceLock::new();
    CELL.get_or_init(|| {
        [
            build_universal_unitary(&ScalarMatrix::identity(1)).unwrap(),
            build_universal_orthogonal(&ScalarMatrix::identity(1)).unwrap(),
        ]
        .into_iter()
        .map(|p| {
            let rels: Vec<AlgElement> = p.relation_elements().cloned().collect();
            let letters = p.letters();
            let levels = (1..=4).map(|d| BoundedIdeal::new(&rels, &letters, d)).collect();
            (rels, letters, levels)
        })
        .collect()
    })
}

/// `sum lambda_i E_i`, recomputed from scratch.
pub fn recombine(multipliers: &[(usize, Rational)], equations: &[Equation]) -> Option<TraceExpr> {
    let mut acc = TraceExpr::zero();
    for (i, l) in multipliers {
        acc.add_scaled(&equations.get(*i)?.expr, l);
    }
    Some(acc)
}

pub fn prop_adjoint_involution(a: &AlgElement) -> Result<(), TestCaseError> {
    prop_assert_eq!(&a.adjoint().adjoint(), a);
    Ok(())
}

pub fn prop_anti_multiplicative(a: &AlgElement, b: &AlgElement) -> Result<(), TestCaseError> {
    prop_assert_eq!((a * b).adjoint(), &b.adjoint() * &a.adjoint());
    Ok(())
}

pub fn prop_cyclic_trace(a: &AlgElement, b: &AlgElement) -> Result<(), TestCaseError> {
    prop_assert_eq!(trace_of(&(a * b)), trace_of(&(b * a)));
    Ok(())
}

/// Every certificate emitted by the derivation re-verifies, both through the
/// library check and through an independent recombination.
pub fn prop_certificates_verify(spec: &BlockSpec) -> Result<(), TestCaseError> {
    let p = presentation_for(spec).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let r = kac_fixpoint(&p, &KacOptions::default()).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(r.verify_all());
    for f in &r.forced {
        let eqs = &r.equation_sets[f.round];
        prop_assert!(f.certificate.verify(eqs));
        let sum = recombine(&f.certificate.multipliers, eqs).expect("indices in range");
        prop_assert_eq!(&sum, &f.certificate.combination);
        prop_assert!(sum.constant.is_zero());
        prop_assert!(sum.coeff(&f.certificate.symbol).is_one());
        for (s, c) in &sum.terms {
            prop_assert!(s.is_square() && c.is_positive(), "term {} with coefficient {}", s, c);
        }
    }
    Ok(())
}

pub fn prop_quotient_composition(p: &Presentation, s1: &[GeneratorId], s2: &[GeneratorId]) -> Result<(), TestCaseError> {
    let union: Vec<GeneratorId> = s1.iter().chain(s2).cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let step = quotient_by_zero(&quotient_by_zero(p, s1).unwrap(), s2).unwrap();
    let once = quotient_by_zero(p, &union).unwrap();
    prop_assert_eq!(step.canonicalize(), once.canonicalize());
    Ok(())
}

pub fn prop_canonicalize(p: &Presentation, order: &[usize]) -> Result<(), TestCaseError> {
    let c = p.canonicalize();
    prop_assert_eq!(&c.canonicalize(), &c);
    let shuffled = Presentation::new(
        p.label.clone(),
        p.generators().iter().cloned(),
        order.iter().map(|&i| p.relations()[i].clone()).collect(),
        p.layouts().to_vec(),
    );
    let again = shuffled.canonicalize();
    prop_assert_eq!(again.relations(), c.relations());
    Ok(())
}

/// `x` in `I_d` implies `x` in `I_{d'}` for `d' >= d`.
pub fn prop_membership_monotone(levels: &[BoundedIdeal], x: &AlgElement) -> Result<(), TestCaseError> {
    let member: Vec<bool> = levels
        .iter()
        .map(|ideal| x.degree() <= ideal.bound() && ideal.contains(x).unwrap())
        .collect();
    for w in member.windows(2) {
        prop_assert!(!w[0] || w[1], "membership lost when raising the bound: {:?}", member);
    }
    Ok(())
}

/// Elements likely to lie in the ideal: `a r b` plus an optional stray term.
pub fn arb_ideal_candidate(n_rels: usize, letters: Vec<Letter>) -> impl Strategy<Value = (usize, Word, Word, Rational, Option<Word>)> {
    let l = letters.clone();
    let word = move |max: usize| {
        let l = l.clone();
        prop::collection::vec(prop::sample::select(l), 0..=max).prop_map(Word::from_letters)
    };
    (0..n_rels, word(1), word(1), arb_rational(), prop::option::of(word(3)))
}

/// A fixed ladder index and a candidate element for it.
pub fn ladder_candidate_strategy() -> impl Strategy<Value = (usize, (usize, Word, Word, Rational, Option<Word>))> {
    (0..fixture_ladders().len()).prop_flat_map(|k| {
        let (rels, letters, _) = &fixture_ladders()[k];
        (Just(k), arb_ideal_candidate(rels.len(), letters.clone()))
    })
}

pub fn ideal_candidate(rels: &[AlgElement], c: &(usize, Word, Word, Rational, Option<Word>)) -> AlgElement {
    let (i, a, b, lambda, stray) = c;
    let mut x = &(&AlgElement::word(a.clone()) * &rels[*i]) * &AlgElement::word(b.clone());
    x = x.scale(lambda);
    if let Some(w) = stray {
        x = &x + &AlgElement::word(w.clone());
    }
    x
}

pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: u32,
    pub result: Result<(), String>,
}

fn run_suite<S: Strategy>(
    name: &'static str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> SuiteOutcome {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    let result = runner.run(&strategy, test).map_err(|e| e.to_string());
    SuiteOutcome { name, cases, result }
}

/// All randomized suites with `cases` cases each.
pub fn run_property_suites(cases: u32) -> Vec<SuiteOutcome> {
    let fixtures = fixture_presentations();
    let ladders = fixture_ladders();
    let mut out = vec![
        run_suite("adjoint involution", cases, arb_element(), |a| prop_adjoint_involution(&a)),
        run_suite("anti-multiplicativity", cases, (arb_element(), arb_element()), |(a, b)| {
            prop_anti_multiplicative(&a, &b)
        }),
        run_suite("cyclic trace invariance", cases, (arb_element(), arb_element()), |(a, b)| {
            prop_cyclic_trace(&a, &b)
        }),
        run_suite("certificate self-verification", cases, arb_small_spec(), |s| {
            prop_certificates_verify(&s)
        }),
        run_suite("quotient composition", cases, composition_strategy(), |(i, s1, s2)| {
            prop_quotient_composition(&fixtures[i], &s1, &s2)
        }),
        run_suite("canonicalize idempotence", cases, shuffle_strategy(), |(i, order)| {
            prop_canonicalize(&fixtures[i], &order)
        }),
    ];
    out.push(run_suite(
        "membership monotonicity",
        cases,
        ladder_candidate_strategy(),
        |(k, c)| {
            let (rels, _, levels) = &ladders[k];
            prop_membership_monotone(levels, &ideal_candidate(rels, &c))
        },
    ));
    out
}

/// A fixture index and two disjoint generator subsets.
pub fn composition_strategy() -> impl Strategy<Value = (usize, Vec<GeneratorId>, Vec<GeneratorId>)> {
    (0..fixture_presentations().len()).prop_flat_map(|i| {
        let gens = fixture_presentations()[i].generators().to_vec();
        let n = gens.len();
        prop::collection::vec(0u8..3, n).prop_map(move |tags| {
            let pick = |t: u8| gens.iter().zip(&tags).filter(|(_, &x)| x == t).map(|(g, _)| *g).collect::<Vec<_>>();
            (i, pick(1), pick(2))
        })
    })
}

/// A fixture index and a permutation of its relations.
pub fn shuffle_strategy() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..fixture_presentations().len()).prop_flat_map(|i| {
        let n = fixture_presentations()[i].relations().len();
        (Just(i), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

pub fn generator_map<const N: usize>(pairs: [(GeneratorId, GeneratorId); N]) -> BTreeMap<GeneratorId, GeneratorId> {
    pairs.into_iter().collect()
}
