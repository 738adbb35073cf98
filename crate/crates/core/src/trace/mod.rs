//! Formal tracial calculus.
//!
//! A faithful tracial state `tau` satisfies `tau(x y) = tau(y x)`,
//! `tau(x*) = conj(tau(x))` and `tau(x* x) > 0` for `x != 0`. Tracing the
//! relations gives linear equations in the unknowns `tau(w)`; when those
//! equations force `tau(g* g) = 0`, the generator `g` vanishes in every
//! quotient that admits a faithful trace. Kac type quotients are found by
//! iterating this to a fixpoint.

mod certificate;
mod equations;
mod kac;
mod simplex;
mod symbol;
mod system;

pub use certificate::Certificate;
pub use equations::{derive_equations, square_symbols, Equation};
pub use kac::{kac_fixpoint, ForcedZero, KacOptions, KacReport};
pub use simplex::{maximize, LpOutcome};
pub use symbol::{cyclic_canonical, trace_of, CyclicForm, Symbol, TraceExpr};
pub use system::TraceSystem;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, GeneratorId, ScalarMatrix};
    use crate::presentation::{build_universal_unitary, presentation_for, reduce_orthogonal, Block, BlockSpec};

    fn g(j: u16, k: u16) -> GeneratorId {
        GeneratorId::u(j, k)
    }

    // With a = u11, c = u21: tau(a*a) + tau(c*c) = 1 and
    // tau(a a*) + q^4 tau(c c*) = 1, so (1 - q^4) tau(c*c) = 0.
    #[test]
    fn one_block_kills_c() {
        let spec = BlockSpec::one_block(rat(1, 2), 1, 1);
        let p = reduce_orthogonal(&presentation_for(&spec).unwrap()).unwrap();
        let sys = TraceSystem::prepare(derive_equations(&p, 0), square_symbols(&p));
        let cert = sys.forced_zero(&g(2, 1)).unwrap().expect("u21 is forced");
        assert!(cert.verify(sys.equations()));
        assert!(sys.forced_zero(&g(1, 1)).unwrap().is_none());
    }

    #[test]
    fn tampered_certificate_fails() {
        let spec = BlockSpec::one_block(rat(1, 2), 1, 1);
        let p = reduce_orthogonal(&presentation_for(&spec).unwrap()).unwrap();
        let sys = TraceSystem::prepare(derive_equations(&p, 0), square_symbols(&p));
        let mut cert = sys.forced_zero(&g(2, 1)).unwrap().unwrap();
        cert.multipliers[0].1 += rat(1, 7);
        assert!(!cert.verify(sys.equations()));
    }

    #[test]
    fn free_unitary_has_no_forced_zeros() {
        let p = build_universal_unitary(&ScalarMatrix::identity(2)).unwrap();
        let report = kac_fixpoint(&p, &KacOptions::default()).unwrap();
        assert!(report.forced.is_empty());
        assert_eq!(report.iterations, 1);
    }

    #[test]
    fn one_block_fixpoint() {
        let spec = BlockSpec::one_block(rat(1, 3), 2, 1);
        let p = presentation_for(&spec).unwrap();
        let report = kac_fixpoint(&p, &KacOptions::default()).unwrap();
        let mut forced = report.forced_generators();
        forced.sort();
        assert_eq!(forced, vec![g(3, 1), g(3, 2), g(4, 1), g(4, 2)]);
        assert!(report.verify_all());
        assert!(report.undetermined.is_empty());
    }

    #[test]
    fn case_one_small() {
        let spec = BlockSpec::case_one(vec![Block::new(rat(1, 2), 1)], 1);
        let p = presentation_for(&spec).unwrap();
        let report = kac_fixpoint(&p, &KacOptions::default()).unwrap();
        assert!(report.verify_all());
        let mut forced = report.forced_generators();
        forced.sort();
        // Survivors: u11 (A) and u33 (Z).
        assert_eq!(forced, vec![g(1, 3), g(2, 1), g(3, 1)]);
    }
}
